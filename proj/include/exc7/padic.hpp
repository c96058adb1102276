#pragma once
// Exact Schwartz-Bruhat functions on Q_p and their self-dual Fourier
// transform.  A function is a finite sum of modulated ball indicators
//
//   term(x) = amp * scale * e(phase) * psi(beta x) * 1_{c + p^n Z_p}(x),
//
// where amp is a complex float supplied by the caller and everything else
// is an exact rational: scale collects the p-power measure factors the
// transform produces, phase collects exact character offsets (an element of
// Z[1/p]/Z stored in [0,1)), beta is the modulation, and (c, n) is the ball.
// psi(x) = e({x}_p) with {.}_p the p-adic fractional part, so psi has
// conductor Z_p.  Floating error enters only through the final exp; every
// measure and character argument stays rational until then.
//
// Canonical form: centers carry only digits below their depth, modulations
// only digits that act nontrivially on the ball (the discarded digits
// contribute exact phase), supports of distinct terms are pairwise disjoint
// or identical, terms with identical (ball, beta, scale, phase) have merged
// amplitudes, and the list is sorted.  Canonicalization never changes
// pointwise values; a test drives that with random points.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

#include "exc7/scalar.hpp"

namespace exc7 {

using Cplx = std::complex<double>;

constexpr long VAL_INF = std::numeric_limits<long>::max() / 4;

inline long val_int(Int n, long p) {
  if (n == 0) return VAL_INF;
  long v = 0;
  while (n % p == 0) {
    n /= p;
    v++;
  }
  return v;
}

inline long val_p(const Rational& x, long p) {
  if (x == 0) return VAL_INF;
  return val_int(num_of(x), p) - val_int(den_of(x), p);
}

inline Int egcd_inverse(Int a, const Int& m) {
  // inverse of a modulo m (m >= 2, gcd(a,m) = 1)
  Int old_r = a % m, r = m, old_s = 1, s = 0;
  if (old_r < 0) old_r += m;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw std::domain_error("egcd_inverse: not invertible");
  Int inv = old_s % m;
  if (inv < 0) inv += m;
  return inv;
}

// p-adic fractional part: the unique f in [0,1) with p-power denominator
// and x - f in Z_(p).  For x = A/(p^k B) with p coprime to B:
// f = (A * B^{-1} mod p^k) / p^k.
inline Rational frac_p(const Rational& x, long p) {
  if (x == 0) return Rational(0);
  Int den = den_of(x);
  long k = val_int(den, p);
  if (k <= 0) return Rational(0);
  Int pk = int_pow(Int(p), k);
  Int bprime = den / pk;
  Int c = num_of(x) % pk;
  if (c < 0) c += pk;
  c = c * egcd_inverse(bprime, pk) % pk;
  return Rational(c, pk);
}

inline Rational mod_one(const Rational& x) {
  Int n = num_of(x), d = den_of(x);
  Int q = n / d;
  if (n < 0 && q * d != n) q -= 1;
  return x - Rational(q);
}

inline double rat_to_double(const Rational& x) {
  return x.convert_to<double>();
}

inline Cplx e_of(const Rational& frac) {
  constexpr double two_pi = 6.283185307179586476925286766559;
  double f = rat_to_double(frac);
  return Cplx(std::cos(two_pi * f), std::sin(two_pi * f));
}

inline Cplx psi_eval(const Rational& x, long p) { return e_of(frac_p(x, p)); }

// --- Schwartz-Bruhat terms ----------------------------------------------------

struct SBTerm {
  Cplx amp = Cplx(1.0, 0.0);
  Rational scale = 1;  // positive p-power bookkeeping
  Rational phase = 0;  // in [0,1), exact
  Rational beta = 0;
  Rational center = 0;
  long depth = 0;

  Cplx constant_factor() const { return amp * rat_to_double(scale) * e_of(phase); }
};

struct SchwartzFunction {
  long p = 0;
  std::vector<SBTerm> terms;
};

inline bool in_ball(const Rational& x, const Rational& c, long n, long p) {
  return val_p(x - c, p) >= n;
}

// Balls (c1,n1), (c2,n2): assuming n1 <= n2, ball2 is inside ball1 iff
// v(c2 - c1) >= n1; otherwise they are disjoint.
inline bool balls_overlap(const Rational& c1, long n1, const Rational& c2, long n2, long p) {
  long n = std::min(n1, n2);
  return val_p(c1 - c2, p) >= n;
}

inline Cplx sb_term_eval(const SBTerm& t, const Rational& x, long p) {
  if (!in_ball(x, t.center, t.depth, p)) return Cplx(0.0, 0.0);
  return t.amp * rat_to_double(t.scale) * e_of(mod_one(t.phase + frac_p(t.beta * x, p)));
}

inline Cplx sf_eval(const SchwartzFunction& f, const Rational& x) {
  Cplx acc(0.0, 0.0);
  for (const auto& t : f.terms) acc += sb_term_eval(t, x, f.p);
  return acc;
}

// Reduce one term to canonical data without changing its values:
//  - center keeps only digits below the depth (pure relabeling of the ball);
//  - beta keeps only digits that act nontrivially on the ball; the dropped
//    part delta is constant on the ball, psi(delta x) = e(frac(delta c));
//  - phase lands in [0,1).
inline void sb_term_reduce(SBTerm& t, long p) {
  Rational pn = rat_pow(Rational(p), t.depth);
  Rational c = frac_p(t.center / pn, p) * pn;
  Rational beta_red = frac_p(t.beta * pn, p) / pn;
  Rational delta = t.beta - beta_red;
  t.phase = mod_one(t.phase + frac_p(delta * c, p));
  t.center = c;
  t.beta = beta_red;
}

inline void canonicalize(SchwartzFunction& f) {
  const long p = f.p;
  for (auto& t : f.terms) sb_term_reduce(t, p);

  // Split shallower balls until supports are pairwise disjoint or identical.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < f.terms.size() && !changed; i++)
      for (size_t j = 0; j < f.terms.size() && !changed; j++) {
        if (i == j) continue;
        SBTerm& a = f.terms[i];
        const SBTerm& b = f.terms[j];
        if (a.depth < b.depth && balls_overlap(a.center, a.depth, b.center, b.depth, p)) {
          SBTerm proto = a;
          Rational pn = rat_pow(Rational(p), proto.depth);
          std::vector<SBTerm> children;
          for (long k = 0; k < p; k++) {
            SBTerm child = proto;
            child.center = proto.center + Rational(k) * pn;
            child.depth = proto.depth + 1;
            sb_term_reduce(child, p);
            children.push_back(child);
          }
          f.terms.erase(f.terms.begin() + static_cast<long>(i));
          f.terms.insert(f.terms.end(), children.begin(), children.end());
          changed = true;
        }
      }
  }

  // Merge identical (ball, beta, scale, phase) keys; drop exact zeros.
  auto key_less = [p](const SBTerm& x, const SBTerm& y) {
    long vx = val_p(x.center, p), vy = val_p(y.center, p);
    if (vx != vy) return vx < vy;
    if (x.center != y.center) return x.center < y.center;
    if (x.depth != y.depth) return x.depth < y.depth;
    if (x.beta != y.beta) return x.beta < y.beta;
    if (x.phase != y.phase) return x.phase < y.phase;
    return x.scale < y.scale;
  };
  std::sort(f.terms.begin(), f.terms.end(), key_less);
  std::vector<SBTerm> merged;
  for (const auto& t : f.terms) {
    if (!merged.empty()) {
      SBTerm& last = merged.back();
      if (last.center == t.center && last.depth == t.depth && last.beta == t.beta &&
          last.phase == t.phase && last.scale == t.scale) {
        last.amp += t.amp;
        continue;
      }
    }
    merged.push_back(t);
  }
  f.terms.clear();
  for (auto& t : merged)
    if (t.amp != Cplx(0.0, 0.0) && t.scale != 0) f.terms.push_back(t);
}

// --- the basic operations ------------------------------------------------------

inline SchwartzFunction sf_zero(long p) { return SchwartzFunction{p, {}}; }

inline SchwartzFunction sf_indicator(long p, const Rational& center, long depth,
                                     const Rational& beta = Rational(0),
                                     Cplx amp = Cplx(1.0, 0.0)) {
  SchwartzFunction f{p, {}};
  SBTerm t;
  t.amp = amp;
  t.beta = beta;
  t.center = center;
  t.depth = depth;
  f.terms.push_back(t);
  canonicalize(f);
  return f;
}

inline SchwartzFunction sf_add(const SchwartzFunction& f, const SchwartzFunction& g) {
  if (f.p != g.p) throw std::invalid_argument("sf_add: mixed primes");
  SchwartzFunction r{f.p, f.terms};
  r.terms.insert(r.terms.end(), g.terms.begin(), g.terms.end());
  canonicalize(r);
  return r;
}

inline SchwartzFunction sf_scale(Cplx z, const SchwartzFunction& f) {
  SchwartzFunction r = f;
  for (auto& t : r.terms) t.amp *= z;
  canonicalize(r);
  return r;
}

inline SchwartzFunction sf_multiply(const SchwartzFunction& f, const SchwartzFunction& g) {
  if (f.p != g.p) throw std::invalid_argument("sf_multiply: mixed primes");
  const long p = f.p;
  SchwartzFunction r{p, {}};
  for (const auto& a : f.terms)
    for (const auto& b : g.terms) {
      if (!balls_overlap(a.center, a.depth, b.center, b.depth, p)) continue;
      const SBTerm& deep = (a.depth >= b.depth) ? a : b;
      SBTerm t;
      t.amp = a.amp * b.amp;
      t.scale = a.scale * b.scale;
      t.phase = mod_one(a.phase + b.phase);
      t.beta = a.beta + b.beta;
      t.center = deep.center;
      t.depth = deep.depth;
      r.terms.push_back(t);
    }
  canonicalize(r);
  return r;
}

inline SchwartzFunction sf_conjugate(const SchwartzFunction& f) {
  SchwartzFunction r = f;
  for (auto& t : r.terms) {
    t.amp = std::conj(t.amp);
    t.phase = mod_one(-t.phase);
    t.beta = -t.beta;
  }
  canonicalize(r);
  return r;
}

// Self-dual Fourier transform, kernel psi(+xy):
//   F[ psi(beta x) 1_{c+p^n Z_p} ](y) = p^{-n} psi(beta c) psi(c y) 1_{-beta + p^{-n} Z_p}(y).
// Applying F twice returns the reflection term-for-term: the two character
// offsets frac(beta c) and frac(c(-beta)) cancel exactly mod 1.
inline SchwartzFunction sf_fourier(const SchwartzFunction& f) {
  const long p = f.p;
  SchwartzFunction r{p, {}};
  for (const auto& t : f.terms) {
    SBTerm s;
    s.amp = t.amp;
    s.scale = t.scale * rat_pow(Rational(p), -t.depth);
    s.phase = mod_one(t.phase + frac_p(t.beta * t.center, p));
    s.beta = t.center;
    s.center = -t.beta;
    s.depth = -t.depth;
    r.terms.push_back(s);
  }
  canonicalize(r);
  return r;
}

// Integral of one term against Haar measure with vol(Z_p) = 1:
//   int_{c+p^n} psi(beta x) dx = psi(beta c) p^{-n} if v(beta) >= -n, else 0.
inline Cplx sf_integrate(const SchwartzFunction& f) {
  const long p = f.p;
  Cplx acc(0.0, 0.0);
  for (const auto& t : f.terms) {
    if (val_p(t.beta, p) < -t.depth) continue;
    Rational ph = mod_one(t.phase + frac_p(t.beta * t.center, p));
    acc += t.amp * rat_to_double(t.scale * rat_pow(Rational(p), -t.depth)) * e_of(ph);
  }
  return acc;
}

// Restriction to the shell {|x| = p^m}, i.e. {v(x) = -m}: multiply by the
// indicator of the shell written as its p-1 unit cosets of depth -m+1.
inline SchwartzFunction shell_decompose(const SchwartzFunction& f, long m) {
  const long p = f.p;
  SchwartzFunction shell{p, {}};
  Rational pm = rat_pow(Rational(p), -m);
  for (long k = 1; k < p; k++) {
    SBTerm t;
    t.center = Rational(k) * pm;
    t.depth = -m + 1;
    shell.terms.push_back(t);
  }
  return sf_multiply(f, shell);
}

// --- pullback of x -> psi((a x)^{-1}) -------------------------------------------
//
// On a ball c + p^n Z_p with gamma = v(c) < n, write r = c0 + h on a refined
// sub-ball (v(h) >= n') and expand (ar)^{-1} = (a c0)^{-1} sum_j (-h/c0)^j.
// The j >= 2 terms lie in Z_p (where psi = 1) as soon as
//     n' >= max(n, gamma + 1, ceil((v(a) + 3 gamma)/2)),
// the binding constraint being j = 2: -v(a) - 3 gamma + 2 n' >= 0.  What is
// left is exact:  psi((ar)^{-1}) = e(frac(2/(a c0))) psi(-r/(a c0^2))  on the
// sub-ball (the j = 0,1 terms, rewritten in the absolute coordinate r).

inline long pullback_refine_depth(long v_a, long gamma, long n) {
  long need2 = v_a + 3 * gamma;  // 2 n' >= v(a) + 3 gamma
  long nprime = need2 >= 0 ? (need2 + 1) / 2 : need2 / 2;  // ceil(need2 / 2)
  return std::max({n, gamma + 1, nprime});
}

struct PullbackPiece {
  Rational phase;   // frac(2/(a c0))
  Rational beta;    // -1/(a c0^2)
  Rational center;  // c0
  long depth;       // n'
};

// Exact modulated-indicator data of psi((a r)^{-1}) on the single ball
// c + p^n Z_p (which must exclude 0).  depth_override below the derived
// refinement produces wrong data on purpose; the test for the refinement
// bound uses it to confirm the failure is detectable.
inline std::vector<PullbackPiece> pullback_on_ball(const Rational& a, const Rational& c,
                                                   long n, long p, long depth_override = -1) {
  long gamma = val_p(c, p);
  if (gamma >= n)
    throw std::invalid_argument("pullback_on_ball: ball contains 0");
  if (a == 0) throw std::invalid_argument("pullback_on_ball: a must be nonzero");
  long nprime = depth_override >= 0 ? depth_override
                                    : pullback_refine_depth(val_p(a, p), gamma, n);
  std::vector<PullbackPiece> out;
  Rational pn = rat_pow(Rational(p), n);
  Int reps = int_pow(Int(p), nprime - n);
  for (Int k(0); k < reps; k++) {
    Rational c0 = c + Rational(k) * pn;
    PullbackPiece piece;
    piece.phase = frac_p(Rational(2) / (a * c0), p);
    piece.beta = Rational(-1) / (a * c0 * c0);
    piece.center = c0;
    piece.depth = nprime;
    out.push_back(piece);
  }
  return out;
}

// Whole-function version: the representation of r -> psi((a r)^{-1})
// restricted to supp(phi); every support ball must exclude 0.
inline SchwartzFunction sf_pullback_inversion(const SchwartzFunction& phi, const Rational& a,
                                              long depth_override = -1) {
  SchwartzFunction f = phi;
  canonicalize(f);
  SchwartzFunction r{f.p, {}};
  std::vector<std::pair<Rational, long>> seen;
  for (const auto& t : f.terms) {
    std::pair<Rational, long> ball{t.center, t.depth};
    bool dup = false;
    for (const auto& b : seen)
      if (b.first == ball.first && b.second == ball.second) dup = true;
    if (dup) continue;
    seen.push_back(ball);
    for (const auto& piece : pullback_on_ball(a, t.center, t.depth, f.p, depth_override)) {
      SBTerm s;
      s.phase = piece.phase;
      s.beta = piece.beta;
      s.center = piece.center;
      s.depth = piece.depth;
      r.terms.push_back(s);
    }
  }
  canonicalize(r);
  return r;
}

}  // namespace exc7
