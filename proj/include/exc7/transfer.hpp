#pragma once
// The transfer operator carrying test functions on the trace-one rank-one
// slice (presented as functions on F minus {0,1}) to Whittaker-side data:
//
//   t(phi)(a) = |a|^{-3} int F(phi)(r) psi((a r)^{-1}) |r|^2 dr,
//
// the composition of a Fourier transform with an inversion substitution.
// Three independent paths are implemented:
//
//  - transfer_eval: exact termination.  F(phi) is a finite sum of modulated
//    ball indicators; balls excluding 0 integrate in closed form after the
//    inversion pullback, balls containing 0 are cut into shells whose tail
//    vanishes identically (conductor bound), so the result is certified, not
//    truncated.
//  - transfer_oracle: the pre-substitution double integral
//    |a|^{-6} int int phi(t) psi(r a^{-1} t) dt psi(1/r) |r|^2 dr
//    evaluated as a Riemann sum over shells and cosets, with an explicit
//    sufficiency check on the shell range and coset depth (local constancy
//    of the integrand); certified results are exact up to float rounding.
//  - orbital_limit_probe: transfer_eval with the r-integral truncated to
//    |r| <= p^n; stabilizes once the truncation covers supp F(phi), which
//    mirrors the partial-domain limit defining the orbital integral.

#include "exc7/padic.hpp"

namespace exc7 {

// Support must avoid 0 (the formula inverts r) and 1 (the domain is the
// complement of both); balls are checked after canonicalization.
inline void validate_transfer_input(const SchwartzFunction& phi) {
  SchwartzFunction f = phi;
  canonicalize(f);
  for (const auto& t : f.terms) {
    if (val_p(t.center, f.p) >= t.depth)
      throw std::invalid_argument("transfer input: a support ball contains 0");
    if (val_p(Rational(1) - t.center, f.p) >= t.depth)
      throw std::invalid_argument("transfer input: a support ball contains 1");
  }
}

struct TransferResult {
  Rational a;
  Cplx value = Cplx(0.0, 0.0);
  long shell_min = 0;   // range of r-valuations touched
  long shell_max = -1;  // empty range when max < min
  bool certified = true;
};

// Closed-form integral of one term of F(phi) over a 0-excluding ball:
//   int_{c+p^n} amp scale e(phase) psi(beta r) psi((a r)^{-1}) |r|^2 dr.
// |r|^2 = p^{-2 gamma} is constant on the ball; the inversion pullback
// refines to depth n' and leaves per-sub-ball character integrals.
inline Cplx transfer_ball_contribution(const SBTerm& t, const Rational& a, long p) {
  long gamma = val_p(t.center, p);
  long nprime = pullback_refine_depth(val_p(a, p), gamma, t.depth);
  Rational weight = t.scale * rat_pow(Rational(p), -2 * gamma - nprime);
  Rational pn = rat_pow(Rational(p), t.depth);
  Int reps = int_pow(Int(p), nprime - t.depth);
  Cplx acc(0.0, 0.0);
  for (Int k(0); k < reps; k++) {
    Rational c0 = t.center + Rational(k) * pn;
    Rational btot = t.beta - Rational(1) / (a * c0 * c0);
    if (val_p(btot, p) < -nprime) continue;
    Rational ph =
        mod_one(t.phase + frac_p(Rational(2) / (a * c0), p) + frac_p(btot * c0, p));
    acc += e_of(ph);
  }
  return t.amp * rat_to_double(weight) * acc;
}

// Shared core of transfer_eval and the probe: truncate_n < 0 means no
// truncation; otherwise the r-integral is restricted to v(r) >= -truncate_n.
inline TransferResult transfer_eval_truncated(const SchwartzFunction& phi, const Rational& a,
                                              long truncate_n) {
  if (a == 0) throw std::invalid_argument("transfer_eval: a must be nonzero");
  validate_transfer_input(phi);
  const long p = phi.p;
  long va = val_p(a, p);
  SchwartzFunction F = sf_fourier(phi);
  TransferResult res;
  res.a = a;
  bool any = false;
  auto touch = [&](long lo, long hi) {
    if (!any) {
      res.shell_min = lo;
      res.shell_max = hi;
      any = true;
    } else {
      res.shell_min = std::min(res.shell_min, lo);
      res.shell_max = std::max(res.shell_max, hi);
    }
  };
  Cplx sum(0.0, 0.0);
  for (const auto& t : F.terms) {
    long gamma = val_p(t.center, p);
    if (gamma < t.depth) {
      if (truncate_n >= 0 && gamma < -truncate_n) continue;
      sum += transfer_ball_contribution(t, a, p);
      touch(gamma, gamma);
      continue;
    }
    // ball p^n Z_p: cut into shells v(r) = s; shells beyond
    // s0 = max(n, -v(beta), 2 - v(a)) vanish identically, since there
    // psi(beta r) = 1 and the bare inversion integral over the shell is 0.
    long n = t.depth;
    long vb = val_p(t.beta, p);
    long s0 = std::max(n, 2 - va);
    if (vb < VAL_INF) s0 = std::max(s0, -vb);
    long s_start = (truncate_n >= 0) ? std::max(n, -truncate_n) : n;
    for (long s = s_start; s <= s0; s++) {
      Rational pshell = rat_pow(Rational(p), s);
      for (long k = 1; k < p; k++) {
        SBTerm coset = t;
        coset.center = Rational(k) * pshell;
        coset.depth = s + 1;
        sum += transfer_ball_contribution(coset, a, p);
      }
    }
    if (s_start <= s0) touch(s_start, s0);
  }
  res.value = rat_to_double(rat_pow(Rational(p), 3 * va)) * sum;
  res.certified = true;  // every tail above vanishes identically
  return res;
}

inline TransferResult transfer_eval(const SchwartzFunction& phi, const Rational& a) {
  return transfer_eval_truncated(phi, a, -1);
}

inline Cplx orbital_limit_probe(const SchwartzFunction& phi, const Rational& a, long n) {
  if (n < 0) throw std::invalid_argument("orbital_limit_probe: n must be >= 0");
  return transfer_eval_truncated(phi, a, n).value;
}

// Stabilization index: once p^{-n} reaches below every valuation occurring
// in supp F(phi), the truncation is the full integral.
inline long probe_predicted_n0(const SchwartzFunction& phi) {
  SchwartzFunction F = sf_fourier(phi);
  long gamma_min = 0;
  bool any = false;
  for (const auto& t : F.terms) {
    long gamma = val_p(t.center, F.p);
    long lowest = (gamma < t.depth) ? gamma : t.depth;
    gamma_min = any ? std::min(gamma_min, lowest) : lowest;
    any = true;
  }
  if (!any) return 0;
  return std::max(0L, -gamma_min);
}

// --- brute-force oracle --------------------------------------------------------

struct OracleParams {
  long shell_lo = 0;
  long shell_hi = 0;
  long coset_depth = 1;
};

struct OracleResult {
  Cplx value = Cplx(0.0, 0.0);
  bool certified = false;
};

// Local-constancy radius of the inner integral I(r) = F(phi)(r/a): beyond
// v(r) >= v(a) + D both the character factors and the support indicators
// stop moving.  D also bounds the coset depth needed per shell.
inline long oracle_constancy_bound(const SchwartzFunction& phi) {
  long D = 1;
  for (const auto& t : phi.terms) {
    long vc = val_p(t.center, phi.p);
    if (vc < VAL_INF) D = std::max(D, -vc);
    D = std::max({D, t.depth, -t.depth});
  }
  return D;
}

// Lowest valuation met by supp F(phi) = union of (-beta_t + p^{-n_t} Z_p).
inline long oracle_support_floor(const SchwartzFunction& phi) {
  long m0 = VAL_INF;
  for (const auto& t : phi.terms) {
    long vb = val_p(t.beta, phi.p);
    m0 = std::min(m0, std::min(vb, -t.depth));
  }
  return m0;
}

inline OracleParams oracle_auto_params(const SchwartzFunction& phi0, const Rational& a) {
  SchwartzFunction phi = phi0;
  canonicalize(phi);
  OracleParams prm;
  if (phi.terms.empty()) return prm;
  long p = phi.p;
  long va = val_p(a, p);
  long D = oracle_constancy_bound(phi);
  prm.shell_lo = va + oracle_support_floor(phi);
  prm.shell_hi = std::max(va + D, 2L);
  prm.coset_depth = std::max({prm.shell_hi, va + D - prm.shell_lo, 1L});
  return prm;
}

// Extended-precision character evaluation for the oracle: its Riemann sums
// run over ~p^coset_depth cells per shell and get multiplied by p^{6 v(a)},
// so plain double cells leave ~1e-8 residue on p = 7 instances.
inline std::complex<long double> e_of_ld(const Rational& frac) {
  constexpr long double two_pi = 6.283185307179586476925286766559005768L;
  long double f = frac.convert_to<long double>();
  return {std::cos(two_pi * f), std::sin(two_pi * f)};
}

inline OracleResult transfer_oracle(const SchwartzFunction& phi0, const Rational& a,
                                    long shell_lo, long shell_hi, long coset_depth) {
  if (a == 0) throw std::invalid_argument("transfer_oracle: a must be nonzero");
  if (coset_depth < 1) throw std::invalid_argument("transfer_oracle: coset_depth must be >= 1");
  validate_transfer_input(phi0);
  SchwartzFunction phi = phi0;
  canonicalize(phi);
  const long p = phi.p;
  long va = val_p(a, p);

  OracleResult res;
  if (phi.terms.empty()) {
    res.certified = true;
    return res;
  }
  long D = oracle_constancy_bound(phi);
  long lo0 = va + oracle_support_floor(phi);
  long hi0 = std::max(va + D, 2L);
  long need_d = std::max({shell_hi, va + D - shell_lo, 1L});
  res.certified = (shell_lo <= lo0) && (shell_hi >= hi0) && (coset_depth >= need_d);

  // accumulate in extended precision: the outer shells produce partial sums
  // far larger than the final value (they cancel against the character), and
  // the p^{6 v(a)} prefactor amplifies whatever roundoff survives
  std::complex<long double> acc(0.0L, 0.0L);
  Int pd = int_pow(Int(p), coset_depth);
  for (long s = shell_lo; s <= shell_hi; s++) {
    long double w = (long double)rat_to_double(rat_pow(Rational(p), -(s + coset_depth) - 2 * s));
    Rational pshell = rat_pow(Rational(p), s);
    std::complex<long double> shell_acc(0.0L, 0.0L);
    for (Int k(1); k < pd; k++) {
      if (k % p == 0) continue;
      Rational r0 = Rational(k) * pshell;
      Rational shift = r0 / a;
      std::complex<long double> inner(0.0L, 0.0L);
      for (const auto& t : phi.terms) {
        Rational btot = t.beta + shift;
        if (val_p(btot, p) < -t.depth) continue;
        Rational ph = mod_one(t.phase + frac_p(btot * t.center, p));
        long double mag = (t.scale * rat_pow(Rational(p), -t.depth)).convert_to<long double>();
        inner += std::complex<long double>(t.amp.real(), t.amp.imag()) * mag * e_of_ld(ph);
      }
      shell_acc += inner * e_of_ld(frac_p(Rational(1) / r0, p));
    }
    acc += shell_acc * w;
  }
  acc *= (long double)rat_to_double(rat_pow(Rational(p), 6 * va));
  res.value = Cplx((double)acc.real(), (double)acc.imag());
  return res;
}

inline OracleResult transfer_oracle(const SchwartzFunction& phi, const Rational& a) {
  OracleParams prm = oracle_auto_params(phi, a);
  return transfer_oracle(phi, a, prm.shell_lo, prm.shell_hi, prm.coset_depth);
}

}  // namespace exc7
