// Bit-packed GF(2) kernel for the 2^27-element census: the packed octonion
// product, rank test, and chunked counting must agree with the generic
// field-templated code path everywhere they overlap.  The full census lives
// in the acceptance gate; here the kernel is validated on prefixes, random
// words, and structured elements with known rank.

#include <doctest.h>

#include "exc7/f2pack.hpp"
#include "exc7/rng.hpp"

using namespace exc7;

TEST_CASE("packed octonion arithmetic mirrors the generic GF(2) model") {
  Rng rng(71);
  for (int i = 0; i < 3000; i++) {
    std::uint32_t xb = (std::uint32_t)rng.below(256), yb = (std::uint32_t)rng.below(256);
    auto x = f2_unpack_oct(xb), y = f2_unpack_oct(yb);
    CHECK(f2_pack_oct(oct_mul(x, y)) == oct2_mul(xb, yb));
    CHECK(f2_pack_oct(oct_conj(x)) == oct2_conj(xb));
    CHECK(GFp((long long)oct2_norm(xb), 2) == oct_norm(x));
    CHECK(GFp((long long)oct2_trace(xb), 2) == oct_trace(x));
  }
}

TEST_CASE("packed word round-trip and rank agreement") {
  for (std::uint32_t w = 0; w < (1u << 15); w++) {
    CHECK(f2_pack(f2_unpack(w)) == w);
    if (f2_rank(w) != rank(f2_unpack(w))) {
      CAPTURE(w);
      CHECK(f2_rank(w) == rank(f2_unpack(w)));
    }
  }
  Rng rng(72);
  for (int i = 0; i < 20000; i++) {
    std::uint32_t w = (std::uint32_t)rng.below(1u << 27);
    if (f2_rank(w) != rank(f2_unpack(w))) {
      CAPTURE(w);
      CHECK(f2_rank(w) == rank(f2_unpack(w)));
    }
    CHECK(f2_trace((std::uint32_t)w) ==
          (unsigned)(alb_trace(f2_unpack(w)) == GFp(1, 2) ? 1 : 0));
  }
}

TEST_CASE("structured elements land in the right stratum") {
  // diagonal idempotents: rank = number of ones on the diagonal
  auto diag_word = [](unsigned a, unsigned b, unsigned c) {
    return (a << 26) | (b << 25) | (c << 24);
  };
  CHECK(f2_rank(0) == 0);
  CHECK(f2_rank(diag_word(1, 0, 0)) == 1);
  CHECK(f2_rank(diag_word(1, 1, 0)) == 2);
  CHECK(f2_rank(diag_word(1, 1, 1)) == 3);
  // rank-1 elements built from the generic constructor, then packed
  Rng rng(73);
  int built = 0;
  while (built < 200) {
    Octonion<GFp> y, z;
    auto rb = [&]() { return GFp((long long)rng.below(2), 2); };
    y.a = rb(); y.b = rb(); z.a = rb(); z.b = rb();
    for (int k = 0; k < 3; k++) {
      y.u[k] = rb(); y.v[k] = rb();
      z.u[k] = rb(); z.v[k] = rb();
    }
    AlbertElement<GFp> X;
    try {
      X = rank1_construct(GFp(1, 2), y, z);
    } catch (const std::exception&) {
      continue;
    }
    CHECK(f2_rank(f2_pack(X)) == 1);
    built++;
  }
}

TEST_CASE("range counting is chunk-invariant") {
  // the same range split differently must give identical tallies
  auto whole = f2_enumerate_range(0, 1u << 16);
  F2CountResult split;
  for (int k = 0; k < 8; k++) {
    auto part = f2_enumerate_range((std::uint64_t)k << 13, (std::uint64_t)(k + 1) << 13);
    split += part;
  }
  for (int r = 0; r < 4; r++) CHECK(whole.rank[r] == split.rank[r]);
  CHECK(whole.rank1_trace0 == split.rank1_trace0);
  CHECK(whole.rank1_trace1 == split.rank1_trace1);
  // and the threaded driver agrees with a direct single sweep on 2^27 is
  // exercised by the acceptance gate; here we just pin a small prefix
  CHECK(whole.rank[0] == 1);
  CHECK(whole.rank[1] + whole.rank[2] + whole.rank[3] == (1u << 16) - 1);
}
