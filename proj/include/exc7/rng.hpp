#pragma once
// Deterministic random sampling for the verification suites.  mt19937_64 has
// a fully specified output stream, and we derive bounded values from it by
// plain modulo, so a given seed reproduces the exact same test vectors on any
// platform.  (std::uniform_int_distribution is deliberately avoided: the
// standard does not pin down its algorithm.)

#include <cstdint>
#include <random>

#include "exc7/scalar.hpp"

namespace exc7 {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // uniform-ish in [0, n); modulo bias is irrelevant at test sample sizes
  std::uint64_t below(std::uint64_t n) { return eng_() % n; }

  // inclusive integer range
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Small rationals keep cpp_rational gcds cheap; most samples are small
  // integers (polynomial identities are checked at integer points just as
  // well), a fraction carry denominators 2 or 3.
  Rational small_rational(long long mag = 3, bool allow_denominator = true) {
    Rational r(range(-mag, mag));
    if (allow_denominator && below(10) < 2) {
      long long d = range(2, 3);
      r = r + Rational(range(-mag, mag), d);
    }
    return r;
  }

  Rational nonzero_rational(long long mag = 3) {
    for (;;) {
      Rational r = small_rational(mag);
      if (r != 0) return r;
    }
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace exc7
