#pragma once
// Exhaustive enumeration of the 27-dimensional cubic Jordan algebra over
// GF(2): 2^27 elements, each packed into one 32-bit word.  Only the
// division-free operations (adjoint, cubic norm, trace) are needed to
// stratify by rank, so characteristic 2 is fine here even though the Jordan
// product itself is not defined there.
//
// Word layout (bit 0 = least significant):
//   bits 26,25,24 : diagonal scalars a, b, c
//   bits 23..16   : octonion x   (row 2 / column 3 entry)
//   bits 15..8    : octonion y   (row 3 / column 1 entry)
//   bits  7..0    : octonion z   (row 1 / column 2 entry)
// Octonion byte layout: bit 7 = a, bits 6..4 = u1,u2,u3, bits 3..1 = v1,v2,v3,
// bit 0 = b (matching the rational Zorn model coordinatewise).
//
// Iteration order is plain integer order on the packed word, which is the
// lexicographic order on coordinates; the chunked parallel driver always
// sums chunk results in index order, so counts are reproducible bit for bit.

#include <cstdint>
#include <thread>
#include <vector>

#include "exc7/albert.hpp"

namespace exc7 {

inline unsigned parity3(unsigned x) { return (x ^ (x >> 1) ^ (x >> 2)) & 1u; }

// cross product of 3-bit vectors; bit 2 = first coordinate
inline unsigned cross3(unsigned x, unsigned y) {
  unsigned x1 = (x >> 2) & 1u, x2 = (x >> 1) & 1u, x3 = x & 1u;
  unsigned y1 = (y >> 2) & 1u, y2 = (y >> 1) & 1u, y3 = y & 1u;
  unsigned w1 = (x2 & y3) ^ (x3 & y2);
  unsigned w2 = (x3 & y1) ^ (x1 & y3);
  unsigned w3 = (x1 & y2) ^ (x2 & y1);
  return (w1 << 2) | (w2 << 1) | w3;
}

inline unsigned oct2_norm(std::uint32_t x) {
  return (((x >> 7) & x) & 1u) ^ parity3(((x >> 4) & 7u) & ((x >> 1) & 7u));
}

inline std::uint32_t oct2_conj(std::uint32_t x) {
  return (x & 0x7Eu) | ((x & 1u) << 7) | ((x >> 7) & 1u);
}

inline std::uint32_t oct2_mul(std::uint32_t X, std::uint32_t Y) {
  unsigned a1 = (X >> 7) & 1u, b1 = X & 1u, u1 = (X >> 4) & 7u, v1 = (X >> 1) & 7u;
  unsigned a2 = (Y >> 7) & 1u, b2 = Y & 1u, u2 = (Y >> 4) & 7u, v2 = (Y >> 1) & 7u;
  unsigned a = (a1 & a2) ^ parity3(u1 & v2);
  unsigned b = (b1 & b2) ^ parity3(v1 & u2);
  unsigned u = (a1 ? u2 : 0u) ^ (b2 ? u1 : 0u) ^ cross3(v1, v2);
  unsigned v = (a2 ? v1 : 0u) ^ (b1 ? v2 : 0u) ^ cross3(u1, u2);
  return (a << 7) | (u << 4) | (v << 1) | b;
}

inline unsigned oct2_trace(std::uint32_t x) { return ((x >> 7) ^ x) & 1u; }

// rank over GF(2): 0 iff zero word; 1 iff adjoint vanishes; 2 iff the cubic
// norm vanishes; 3 otherwise (signs in the integral formulas drop mod 2)
inline int f2_rank(std::uint32_t w) {
  if (w == 0) return 0;
  unsigned a = (w >> 26) & 1u, b = (w >> 25) & 1u, c = (w >> 24) & 1u;
  std::uint32_t x = (w >> 16) & 0xFFu, y = (w >> 8) & 0xFFu, z = w & 0xFFu;
  unsigned nx = oct2_norm(x), ny = oct2_norm(y), nz = oct2_norm(z);
  std::uint32_t xy = oct2_mul(x, y);
  bool adj_zero = ((b & c) ^ nx) == 0 && ((c & a) ^ ny) == 0 && ((a & b) ^ nz) == 0 &&
                  (oct2_conj(oct2_mul(y, z)) ^ (a ? x : 0u)) == 0 &&
                  (oct2_conj(oct2_mul(z, x)) ^ (b ? y : 0u)) == 0 &&
                  (oct2_conj(xy) ^ (c ? z : 0u)) == 0;
  if (adj_zero) return 1;
  unsigned norm = (a & b & c) ^ (a & nx) ^ (b & ny) ^ (c & nz) ^ oct2_trace(oct2_mul(xy, z));
  return norm == 0 ? 2 : 3;
}

inline unsigned f2_trace(std::uint32_t w) { return ((w >> 26) ^ (w >> 25) ^ (w >> 24)) & 1u; }

struct F2CountResult {
  std::uint64_t rank[4] = {0, 0, 0, 0};
  std::uint64_t rank1_trace0 = 0;
  std::uint64_t rank1_trace1 = 0;

  F2CountResult& operator+=(const F2CountResult& o) {
    for (int i = 0; i < 4; i++) rank[i] += o.rank[i];
    rank1_trace0 += o.rank1_trace0;
    rank1_trace1 += o.rank1_trace1;
    return *this;
  }
};

inline F2CountResult f2_enumerate_range(std::uint64_t lo, std::uint64_t hi) {
  F2CountResult r;
  for (std::uint64_t w = lo; w < hi; w++) {
    int rk = f2_rank(static_cast<std::uint32_t>(w));
    r.rank[rk]++;
    if (rk == 1) {
      if (f2_trace(static_cast<std::uint32_t>(w))) {
        r.rank1_trace1++;
      } else {
        r.rank1_trace0++;
      }
    }
  }
  return r;
}

// Full enumeration of all 2^27 words, chunked for parallel execution; the
// final sum runs in chunk order regardless of completion order.
inline F2CountResult count_rank1_f2(unsigned num_chunks = 64) {
  const std::uint64_t total = 1ull << 27;
  if (num_chunks == 0) num_chunks = 1;
  unsigned hw = std::thread::hardware_concurrency();
  unsigned workers = hw == 0 ? 1 : hw;
  if (workers > num_chunks) workers = num_chunks;

  std::vector<F2CountResult> partial(num_chunks);
  std::vector<std::thread> pool;
  std::vector<unsigned> next_chunk(workers);
  for (unsigned t = 0; t < workers; t++) {
    pool.emplace_back([&, t]() {
      for (unsigned chunk = t; chunk < num_chunks; chunk += workers) {
        std::uint64_t lo = total * chunk / num_chunks;
        std::uint64_t hi = total * (chunk + 1) / num_chunks;
        partial[chunk] = f2_enumerate_range(lo, hi);
      }
    });
  }
  for (auto& th : pool) th.join();
  F2CountResult sum;
  for (unsigned chunk = 0; chunk < num_chunks; chunk++) sum += partial[chunk];
  return sum;
}

// --- packed <-> generic bridges (used by the cross-check tests) ---------------

inline Octonion<GFp> f2_unpack_oct(std::uint32_t byte) {
  auto bit = [&](int i) { return GFp(static_cast<long long>((byte >> i) & 1u), 2); };
  Octonion<GFp> o;
  o.a = bit(7);
  o.u = {bit(6), bit(5), bit(4)};
  o.v = {bit(3), bit(2), bit(1)};
  o.b = bit(0);
  return o;
}

inline std::uint32_t f2_pack_oct(const Octonion<GFp>& o) {
  auto bit = [](const GFp& g) { return static_cast<std::uint32_t>(g.v & 1u); };
  return (bit(o.a) << 7) | (bit(o.u[0]) << 6) | (bit(o.u[1]) << 5) | (bit(o.u[2]) << 4) |
         (bit(o.v[0]) << 3) | (bit(o.v[1]) << 2) | (bit(o.v[2]) << 1) | bit(o.b);
}

inline AlbertElement<GFp> f2_unpack(std::uint32_t w) {
  AlbertElement<GFp> X;
  X.a = GFp(static_cast<long long>((w >> 26) & 1u), 2);
  X.b = GFp(static_cast<long long>((w >> 25) & 1u), 2);
  X.c = GFp(static_cast<long long>((w >> 24) & 1u), 2);
  X.x = f2_unpack_oct((w >> 16) & 0xFFu);
  X.y = f2_unpack_oct((w >> 8) & 0xFFu);
  X.z = f2_unpack_oct(w & 0xFFu);
  return X;
}

inline std::uint32_t f2_pack(const AlbertElement<GFp>& X) {
  auto bit = [](const GFp& g) { return static_cast<std::uint32_t>(g.v & 1u); };
  return (bit(X.a) << 26) | (bit(X.b) << 25) | (bit(X.c) << 24) | (f2_pack_oct(X.x) << 16) |
         (f2_pack_oct(X.y) << 8) | f2_pack_oct(X.z);
}

}  // namespace exc7
