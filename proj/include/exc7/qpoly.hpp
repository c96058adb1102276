#pragma once
// Exact arithmetic in Q(u,t), the field of rational functions in
//   u  (standing for q^{-1/2}, so half-integer powers of q are polynomial)
//   t  (standing for the Satake parameter alpha_q).
//
// Representation: numerator and denominator in Z[u][t] (outer variable t,
// inner variable u), reduced by a subresultant-PRS gcd, content removed,
// denominator's leading coefficient positive under the (t-degree, u-degree)
// lexicographic order.  Negative powers of t are cleared into denominators
// by the QRat constructors, so callers can write t^{-m} freely.
//
// The gcd is the classical subresultant polynomial remainder sequence
// (Cohen, "A Course in Computational Algebraic Number Theory", Alg. 3.3.1),
// instantiated recursively: gcd in Z[u][t] reduces to gcd of contents in
// Z[u], which reduces to integer gcd.  Degrees here stay small (u-degree
// under ~50, t-degree under ~10), so no modular tricks are needed.

#include <algorithm>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "exc7/scalar.hpp"

namespace exc7 {

template <class R>
struct Poly;

template <class R>
struct RingTraits;

template <>
struct RingTraits<Int> {
  static Int one() { return Int(1); }
  static bool is_zero(const Int& a) { return a == 0; }
  static Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
  static Int divexact(const Int& a, const Int& b) { return a / b; }
  static int sign(const Int& a) { return a == 0 ? 0 : (a < 0 ? -1 : 1); }
};

template <class R>
struct Poly {
  // c[k] = coefficient of X^k; invariant: no trailing zero (c empty iff zero)
  std::vector<R> c;

  Poly() = default;
  explicit Poly(R v) {
    if (!RingTraits<R>::is_zero(v)) c.push_back(std::move(v));
  }

  void trim() {
    while (!c.empty() && RingTraits<R>::is_zero(c.back())) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const R& lead() const { return c.back(); }
  R coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c.size())) return R{};
    return c[k];
  }

  static Poly one() { return Poly(RingTraits<R>::one()); }
  static Poly monomial(R v, int k) {
    Poly f;
    if (RingTraits<R>::is_zero(v)) return f;
    f.c.assign(static_cast<size_t>(k) + 1, R{});
    f.c.back() = std::move(v);
    return f;
  }

  friend Poly operator+(const Poly& f, const Poly& g) {
    Poly r;
    r.c.resize(std::max(f.c.size(), g.c.size()));
    for (size_t i = 0; i < r.c.size(); i++) r.c[i] = f.coeff((int)i) + g.coeff((int)i);
    r.trim();
    return r;
  }
  friend Poly operator-(const Poly& f, const Poly& g) {
    Poly r;
    r.c.resize(std::max(f.c.size(), g.c.size()));
    for (size_t i = 0; i < r.c.size(); i++) r.c[i] = f.coeff((int)i) - g.coeff((int)i);
    r.trim();
    return r;
  }
  Poly operator-() const {
    Poly r = *this;
    for (auto& v : r.c) v = -v;
    return r;
  }
  friend Poly operator*(const Poly& f, const Poly& g) {
    Poly r;
    if (f.is_zero() || g.is_zero()) return r;
    r.c.assign(f.c.size() + g.c.size() - 1, R{});
    for (size_t i = 0; i < f.c.size(); i++)
      for (size_t j = 0; j < g.c.size(); j++) r.c[i + j] = r.c[i + j] + f.c[i] * g.c[j];
    r.trim();
    return r;
  }
  friend bool operator==(const Poly& f, const Poly& g) {
    if (f.c.size() != g.c.size()) return false;
    for (size_t i = 0; i < f.c.size(); i++)
      if (!(f.c[i] == g.c[i])) return false;
    return true;
  }
  friend bool operator!=(const Poly& f, const Poly& g) { return !(f == g); }
};

template <class R>
Poly<R> poly_scale(const R& s, const Poly<R>& f) {
  Poly<R> r = f;
  for (auto& v : r.c) v = v * s;
  r.trim();
  return r;
}

template <class R>
Poly<R> poly_shift(const Poly<R>& f, int k) {
  if (f.is_zero() || k == 0) return f;
  Poly<R> r;
  r.c.assign(f.c.size() + static_cast<size_t>(k), R{});
  for (size_t i = 0; i < f.c.size(); i++) r.c[i + static_cast<size_t>(k)] = f.c[i];
  return r;
}

template <class R>
R ring_pow(R base, int e) {
  R r = RingTraits<R>::one();
  for (int i = 0; i < e; i++) r = r * base;
  return r;
}

template <class R>
R poly_content(const Poly<R>& f) {
  R g{};
  for (const auto& v : f.c) g = RingTraits<R>::gcd(g, v);
  return g;
}

template <class R>
Poly<R> poly_divexact_scalar(const Poly<R>& f, const R& s) {
  Poly<R> r = f;
  for (auto& v : r.c) v = RingTraits<R>::divexact(v, s);
  return r;
}

// Exact polynomial division (throws if not exact).  Over a UFD coefficient
// ring the top-down synthetic steps each divide exactly whenever b | a.
template <class R>
Poly<R> poly_divexact(const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero()) throw std::domain_error("poly_divexact: division by zero");
  if (a.is_zero()) return a;
  if (a.degree() < b.degree()) throw std::logic_error("poly_divexact: not divisible");
  Poly<R> rem = a, q;
  q.c.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, R{});
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    R qc = RingTraits<R>::divexact(rem.lead(), b.lead());
    int k = rem.degree() - b.degree();
    q.c[static_cast<size_t>(k)] = qc;
    Poly<R> sub = poly_shift(poly_scale(qc, b), k);
    Poly<R> next = rem - sub;
    if (!next.is_zero() && next.degree() >= rem.degree())
      throw std::logic_error("poly_divexact: leading term failed to cancel");
    rem = next;
  }
  if (!rem.is_zero()) throw std::logic_error("poly_divexact: nonzero remainder");
  q.trim();
  return q;
}

// Pseudo-remainder: returns r with lc(b)^(deg a - deg b + 1) * a = q*b + r.
template <class R>
Poly<R> poly_prem(Poly<R> a, const Poly<R>& b) {
  int db = b.degree();
  int e = a.degree() - db + 1;
  const R& d = b.lead();
  while (!a.is_zero() && a.degree() >= db) {
    Poly<R> sub = poly_shift(poly_scale(a.lead(), b), a.degree() - db);
    a = poly_scale(d, a) - sub;
    e--;
  }
  for (; e > 0; e--) a = poly_scale(d, a);
  return a;
}

template <class R>
int poly_sign(const Poly<R>& f) {
  return f.is_zero() ? 0 : RingTraits<R>::sign(f.lead());
}

template <class R>
Poly<R> poly_sign_normalize(Poly<R> f) {
  if (poly_sign(f) < 0) f = -f;
  return f;
}

template <class R>
Poly<R> poly_gcd(Poly<R> A, Poly<R> B) {
  if (A.is_zero()) return poly_sign_normalize(B);
  if (B.is_zero()) return poly_sign_normalize(A);
  if (A.degree() < B.degree()) std::swap(A, B);
  R ca = poly_content(A), cb = poly_content(B);
  R d = RingTraits<R>::gcd(ca, cb);
  A = poly_divexact_scalar(A, ca);
  B = poly_divexact_scalar(B, cb);
  R g = RingTraits<R>::one(), h = g;
  while (true) {
    if (B.degree() == 0) return Poly<R>(d);  // coprime primitive parts
    int delta = A.degree() - B.degree();
    Poly<R> r = poly_prem(A, B);
    if (r.is_zero()) {
      Poly<R> pp = poly_divexact_scalar(B, poly_content(B));
      return poly_sign_normalize(poly_scale(d, pp));
    }
    A = B;
    B = poly_divexact_scalar(r, g * ring_pow(h, delta));
    g = A.lead();
    if (delta > 0) h = RingTraits<R>::divexact(ring_pow(g, delta), ring_pow(h, delta - 1));
  }
}

template <class R>
struct RingTraits<Poly<R>> {
  static Poly<R> one() { return Poly<R>::one(); }
  static bool is_zero(const Poly<R>& f) { return f.is_zero(); }
  static Poly<R> gcd(const Poly<R>& a, const Poly<R>& b) { return poly_gcd(a, b); }
  static Poly<R> divexact(const Poly<R>& a, const Poly<R>& b) {
    if (b.degree() == 0) return poly_divexact_scalar(a, b.c[0]);
    return poly_divexact(a, b);
  }
  static int sign(const Poly<R>& f) { return poly_sign(f); }
};

using UPoly = Poly<Int>;     // Z[u]
using UTPoly = Poly<UPoly>;  // Z[u][t], outer variable t

inline UTPoly ut_monomial(Int coeff, int upow, int tpow) {
  return UTPoly::monomial(UPoly::monomial(std::move(coeff), upow), tpow);
}

// --- the field Q(u,t) --------------------------------------------------------

struct QRat {
  UTPoly num;
  UTPoly den = UTPoly::one();

  QRat() = default;
  explicit QRat(long v) : num(UTPoly(UPoly(Int(v)))) {}
  explicit QRat(const Int& v) : num(UTPoly(UPoly(v))) {}
  QRat(UTPoly n, UTPoly d) : num(std::move(n)), den(std::move(d)) { normalize(); }

  // u^a t^b with either exponent possibly negative
  static QRat monomial(Int coeff, int upow, int tpow) {
    QRat r;
    int nu = upow >= 0 ? upow : 0, du = upow < 0 ? -upow : 0;
    int nt = tpow >= 0 ? tpow : 0, dt = tpow < 0 ? -tpow : 0;
    r.num = ut_monomial(std::move(coeff), nu, nt);
    r.den = ut_monomial(Int(1), du, dt);
    r.normalize();
    return r;
  }
  static QRat u_pow(int k) { return monomial(Int(1), k, 0); }
  static QRat t_pow(int k) { return monomial(Int(1), 0, k); }
  static QRat from_rational(const Rational& v) {
    QRat r;
    r.num = UTPoly(UPoly(num_of(v)));
    r.den = UTPoly(UPoly(den_of(v)));
    r.normalize();
    return r;
  }

  bool is_zero() const { return num.is_zero(); }

  void normalize() {
    if (den.is_zero()) throw std::domain_error("QRat: zero denominator");
    if (num.is_zero()) {
      den = UTPoly::one();
      return;
    }
    UTPoly g = poly_gcd(num, den);
    num = RingTraits<UTPoly>::divexact(num, g);
    den = RingTraits<UTPoly>::divexact(den, g);
    if (poly_sign(den) < 0) {
      num = -num;
      den = -den;
    }
  }

  friend QRat operator+(const QRat& f, const QRat& g) {
    return QRat(f.num * g.den + g.num * f.den, f.den * g.den);
  }
  friend QRat operator-(const QRat& f, const QRat& g) {
    return QRat(f.num * g.den - g.num * f.den, f.den * g.den);
  }
  QRat operator-() const {
    QRat r = *this;
    r.num = -r.num;
    return r;
  }
  friend QRat operator*(const QRat& f, const QRat& g) {
    return QRat(f.num * g.num, f.den * g.den);
  }
  friend QRat operator/(const QRat& f, const QRat& g) {
    if (g.is_zero()) throw std::domain_error("QRat: division by zero function");
    return QRat(f.num * g.den, f.den * g.num);
  }
  friend bool operator==(const QRat& f, const QRat& g) {
    return f.num * g.den == g.num * f.den;  // exact cross-multiplication
  }
  friend bool operator!=(const QRat& f, const QRat& g) { return !(f == g); }

  QRat pow(int k) const {
    QRat base = *this;
    if (k < 0) {
      base = QRat(1) / base;
      k = -k;
    }
    QRat r(1);
    for (int i = 0; i < k; i++) r = r * base;
    return r;
  }

  // t -> 1/t (conjugation of a tempered Satake parameter)
  QRat subst_t_inv() const {
    auto rev = [](const UTPoly& f) {
      UTPoly r = f;
      std::reverse(r.c.begin(), r.c.end());
      r.trim();
      return r;
    };
    if (is_zero()) return *this;
    int dn = num.degree(), dd = den.degree();
    UTPoly n2 = rev(num), d2 = rev(den);
    // f(1/t) = rev(num) t^(dd) / (rev(den) t^(dn))
    if (dd > dn)
      n2 = n2 * ut_monomial(Int(1), 0, dd - dn);
    else if (dn > dd)
      d2 = d2 * ut_monomial(Int(1), 0, dn - dd);
    return QRat(std::move(n2), std::move(d2));
  }

  template <class V>
  static V eval_upoly(const UPoly& f, const V& u) {
    V acc{};
    for (int k = f.degree(); k >= 0; k--) acc = acc * u + V(f.c[(size_t)k]);
    return acc;
  }
  template <class V>
  static V eval_utpoly(const UTPoly& f, const V& u, const V& t) {
    V acc{};
    for (int k = f.degree(); k >= 0; k--) acc = acc * t + eval_upoly(f.c[(size_t)k], u);
    return acc;
  }

  Rational eval_rational(const Rational& u, const Rational& t) const {
    Rational d = eval_utpoly<Rational>(den, u, t);
    if (d == 0) throw std::domain_error("QRat::eval_rational: denominator vanishes");
    return eval_utpoly<Rational>(num, u, t) / d;
  }
  std::complex<double> eval_complex(std::complex<double> u, std::complex<double> t) const {
    auto conv = [](const Int& v) { return std::complex<double>(static_cast<double>(v), 0.0); };
    auto evu = [&](const UPoly& f) {
      std::complex<double> acc = 0.0;
      for (int k = f.degree(); k >= 0; k--) acc = acc * u + conv(f.c[(size_t)k]);
      return acc;
    };
    auto ev = [&](const UTPoly& f) {
      std::complex<double> acc = 0.0;
      for (int k = f.degree(); k >= 0; k--) acc = acc * t + evu(f.c[(size_t)k]);
      return acc;
    };
    return ev(num) / ev(den);
  }

  std::string str() const;
};

// Canonical rendering: monomials in ascending (t-power, u-power) order,
// integer coefficients, "*" separators, e.g. "(1 - u^8 + 3*u^2*t)/(1 - u^12)".
inline std::string utpoly_str(const UTPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int i = 0; i <= f.degree(); i++) {
    const UPoly& cu = f.coeff(i);
    for (int j = 0; j <= cu.degree(); j++) {
      Int cv = cu.coeff(j);
      if (cv == 0) continue;
      bool neg = cv < 0;
      Int av = neg ? Int(-cv) : cv;
      std::string mono;
      if (av != 1 || (j == 0 && i == 0)) mono = av.str();
      auto append_var = [&](const char* var, int pow) {
        if (pow == 0) return;
        if (!mono.empty()) mono += "*";
        mono += var;
        if (pow > 1) mono += "^" + std::to_string(pow);
      };
      append_var("u", j);
      append_var("t", i);
      if (first) {
        out = (neg ? "-" : "") + mono;
        first = false;
      } else {
        out += (neg ? " - " : " + ") + mono;
      }
    }
  }
  return out;
}

inline std::string QRat::str() const {
  if (den == UTPoly::one()) return utpoly_str(num);
  return "(" + utpoly_str(num) + ")/(" + utpoly_str(den) + ")";
}

}  // namespace exc7
