#pragma once
// Scalar backends for the algebra tower: exact rationals with arbitrary
// precision, and prime fields GF(p) with a runtime modulus.  Everything
// above this layer is templated on the scalar type.  Generic code never
// writes integer literals directly; it goes through scalar_like(proto, n)
// so that a GF(p) value can carry its modulus into freshly built elements.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace exc7 {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num_of(const Rational& x) { return boost::multiprecision::numerator(x); }
inline Int den_of(const Rational& x) { return boost::multiprecision::denominator(x); }

// "p/q" strings are the JSON interchange format for exact scalars.
inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Int(s));
  Int num(s.substr(0, slash));
  Int den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
  return Rational(num, den);
}

inline std::string rational_str(const Rational& x) {
  if (den_of(x) == 1) return num_of(x).str();
  return num_of(x).str() + "/" + den_of(x).str();
}

inline Int int_pow(const Int& base, long e) {
  Int r(1);
  for (long i = 0; i < e; i++) r *= base;
  return r;
}

inline Rational rat_pow(const Rational& base, long e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("rat_pow: negative power of zero");
    return Rational(1) / rat_pow(base, -e);
  }
  Rational r(1);
  for (long i = 0; i < e; i++) r *= base;
  return r;
}

// --- Rational as a scalar backend -----------------------------------------

inline long char_of(const Rational&) { return 0; }
inline Rational scalar_like(const Rational&, long long n) { return Rational(n); }
inline Rational scalar_inv(const Rational& x) {
  if (x == 0) throw std::domain_error("scalar_inv: division by zero");
  return Rational(1) / x;
}

// --- GF(p) with runtime modulus --------------------------------------------
//
// A default-constructed element (p == 0) is the field-agnostic zero: binary
// operations adopt the other operand's modulus.  This keeps aggregates like
// std::array<GFp,3>{} usable without threading the modulus through every
// temporary; genuinely mixed moduli are still rejected.

struct GFp {
  std::uint64_t v = 0;
  std::uint64_t p = 0;

  GFp() = default;
  GFp(long long n, std::uint64_t mod) : p(mod) {
    if (mod < 2) throw std::invalid_argument("GFp modulus must be >= 2");
    long long r = n % static_cast<long long>(mod);
    if (r < 0) r += static_cast<long long>(mod);
    v = static_cast<std::uint64_t>(r);
  }

  static std::uint64_t merge_mod(const GFp& x, const GFp& y) {
    if (x.p == 0) return y.p;
    if (y.p == 0) return x.p;
    if (x.p != y.p) throw std::invalid_argument("GFp: mixed moduli");
    return x.p;
  }

  friend GFp operator+(const GFp& x, const GFp& y) {
    std::uint64_t m = merge_mod(x, y);
    if (m == 0) return GFp();
    GFp r;
    r.p = m;
    r.v = x.v + y.v;
    if (r.v >= m) r.v -= m;
    return r;
  }
  friend GFp operator-(const GFp& x, const GFp& y) {
    std::uint64_t m = merge_mod(x, y);
    if (m == 0) return GFp();
    GFp r;
    r.p = m;
    r.v = x.v + m - y.v;
    if (r.v >= m) r.v -= m;
    return r;
  }
  friend GFp operator*(const GFp& x, const GFp& y) {
    std::uint64_t m = merge_mod(x, y);
    if (m == 0) return GFp();
    GFp r;
    r.p = m;
    r.v = static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(x.v) * y.v % m);
    return r;
  }
  GFp operator-() const {
    GFp r = *this;
    if (r.v != 0) r.v = p - r.v;
    return r;
  }
  GFp& operator+=(const GFp& y) { return *this = *this + y; }
  GFp& operator-=(const GFp& y) { return *this = *this - y; }
  GFp& operator*=(const GFp& y) { return *this = *this * y; }
  friend bool operator==(const GFp& x, const GFp& y) {
    merge_mod(x, y);  // reject mixed moduli
    return x.v == y.v;
  }
  friend bool operator!=(const GFp& x, const GFp& y) { return !(x == y); }
};

inline long char_of(const GFp& x) { return static_cast<long>(x.p); }
inline GFp scalar_like(const GFp& proto, long long n) {
  if (proto.p == 0) {
    if (n == 0) return GFp();
    throw std::invalid_argument("scalar_like: GFp prototype carries no modulus");
  }
  return GFp(n, proto.p);
}
inline GFp scalar_inv(const GFp& x) {
  if (x.v == 0) throw std::domain_error("scalar_inv: division by zero in GF(p)");
  // Fermat: x^(p-2); p is prime by construction of the callers.
  std::uint64_t e = x.p - 2, b = x.v, acc = 1;
  while (e) {
    if (e & 1) acc = static_cast<std::uint64_t>(static_cast<unsigned __int128>(acc) * b % x.p);
    b = static_cast<std::uint64_t>(static_cast<unsigned __int128>(b) * b % x.p);
    e >>= 1;
  }
  GFp r;
  r.p = x.p;
  r.v = acc;
  return r;
}

}  // namespace exc7
