#pragma once
// Random element generators for the verification batteries.  All sampling
// goes through Rng so a seed pins the exact element stream; magnitudes are
// kept small because the identities are polynomial and hold at small points
// iff they hold identically, while cpp_rational gcd costs grow fast.

#include "exc7/freudenthal.hpp"
#include "exc7/padic.hpp"
#include "exc7/rng.hpp"

namespace exc7 {

inline Octonion<Rational> rand_octonion(Rng& rng, long long mag = 3) {
  Octonion<Rational> o;
  o.a = rng.small_rational(mag);
  o.b = rng.small_rational(mag);
  for (int i = 0; i < 3; i++) {
    o.u[i] = rng.small_rational(mag);
    o.v[i] = rng.small_rational(mag);
  }
  return o;
}

inline AlbertElement<Rational> rand_albert(Rng& rng, long long mag = 3) {
  AlbertElement<Rational> X;
  X.a = rng.small_rational(mag);
  X.b = rng.small_rational(mag);
  X.c = rng.small_rational(mag);
  X.x = rand_octonion(rng, mag);
  X.y = rand_octonion(rng, mag);
  X.z = rand_octonion(rng, mag);
  return X;
}

// trace-free Albert element (the V_2-part coefficients of the identification)
inline AlbertElement<Rational> rand_albert_trace0(Rng& rng, long long mag = 3) {
  AlbertElement<Rational> X = rand_albert(rng, mag);
  X.c = -(X.a + X.b);
  return X;
}

inline FreudenthalVector<Rational> rand_fv(Rng& rng, long long mag = 3) {
  return {rand_albert(rng, mag), rng.small_rational(mag), rand_albert(rng, mag),
          rng.small_rational(mag)};
}

inline GroupElement<Rational> rand_group_element(Rng& rng) {
  switch (rng.below(6)) {
    case 0:
      return GroupElement<Rational>::make_levi(1 + (int)rng.below(3),
                                               rng.nonzero_rational());
    case 1:
      return GroupElement<Rational>::make_unipotent(rand_albert(rng, 2));
    case 2:
      return GroupElement<Rational>::make_dual_unipotent(rand_albert(rng, 2));
    case 3: {
      GL2Gen<Rational> g{GL2Kind::torus, rng.nonzero_rational(), rng.nonzero_rational()};
      return GroupElement<Rational>::make_gl2(g);
    }
    case 4: {
      GL2Gen<Rational> g{GL2Kind::unipotent, rng.small_rational(2), Rational(0)};
      return GroupElement<Rational>::make_gl2(g);
    }
    default: {
      GL2Gen<Rational> g{GL2Kind::weyl, Rational(0), Rational(0)};
      return GroupElement<Rational>::make_gl2(g);
    }
  }
}

// random Schwartz-Bruhat function: a few modulated ball indicators with
// small centers/depths/modulations and complex float coefficients
inline SchwartzFunction rand_schwartz(Rng& rng, long p, int max_terms = 3,
                                      bool avoid_01_support = false) {
  SchwartzFunction f;
  f.p = p;
  int nterms = 1 + (int)rng.below((std::uint64_t)max_terms);
  for (int i = 0; i < nterms; i++) {
    SBTerm t;
    double re = (double)rng.range(-4, 4) / 2.0;
    double im = (double)rng.range(-4, 4) / 2.0;
    if (re == 0 && im == 0) re = 1.0;
    t.amp = Cplx(re, im);
    long cv = rng.range(-2, 2);
    long ce = rng.range(-1, 2);
    t.center = Rational(cv) * rat_pow(Rational(p), ce);
    t.depth = rng.range(-1, 3);
    long bv = rng.range(-2, 2);
    long be = rng.range(-2, 1);
    t.beta = Rational(bv) * rat_pow(Rational(p), be);
    if (avoid_01_support) {
      // keep 0 and 1 outside the ball: nudge the center by 1/p until its
      // p^{-1} digit is nonzero, then a depth >= 0 excludes both points
      // (at most p nudges, since each one steps that digit cyclically)
      while (in_ball(Rational(0), t.center, t.depth, p) ||
             in_ball(Rational(1), t.center, t.depth, p)) {
        t.center += Rational(1, p);
        t.depth = std::max(t.depth, 0L);
      }
    }
    f.terms.push_back(t);
  }
  canonicalize(f);
  return f;
}

inline Rational rand_point(Rng& rng, long p) {
  long v = rng.range(-3, 3);
  Rational x = Rational(rng.range(-p * p, p * p));
  return x * rat_pow(Rational(p), v) + Rational(rng.range(-3, 3));
}

}  // namespace exc7
