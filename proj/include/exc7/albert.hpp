#pragma once
// The exceptional Jordan algebra J: Hermitian 3x3 matrices over the split
// octonions, stored as three scalars and three octonions for the layout
//
//        [ a        z        conj(y) ]
//   X =  [ conj(z)  b        x       ]
//        [ y        conj(x)  c       ]
//
// The Jordan product (XY + YX)/2 is computed through the associative
// octonion matrix product and needs 2 invertible; everything else (trace
// pairing, cubic norm, adjoint, polarized cross product) is written in the
// integral coordinate form with no divisions, so it works verbatim over
// GF(2), which is what the rank-1 cone enumeration uses.

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "exc7/octonion.hpp"
#include "exc7/scalar.hpp"

namespace exc7 {

template <class K>
struct AlbertElement {
  K a{}, b{}, c{};
  Octonion<K> x{}, y{}, z{};

  friend AlbertElement operator+(const AlbertElement& X, const AlbertElement& Y) {
    return {X.a + Y.a, X.b + Y.b, X.c + Y.c, X.x + Y.x, X.y + Y.y, X.z + Y.z};
  }
  friend AlbertElement operator-(const AlbertElement& X, const AlbertElement& Y) {
    return {X.a - Y.a, X.b - Y.b, X.c - Y.c, X.x - Y.x, X.y - Y.y, X.z - Y.z};
  }
  AlbertElement operator-() const { return {-a, -b, -c, -x, -y, -z}; }
  friend bool operator==(const AlbertElement& X, const AlbertElement& Y) {
    return X.a == Y.a && X.b == Y.b && X.c == Y.c && X.x == Y.x && X.y == Y.y &&
           X.z == Y.z;
  }
  friend bool operator!=(const AlbertElement& X, const AlbertElement& Y) {
    return !(X == Y);
  }
};

template <class K>
AlbertElement<K> alb_scale(const K& s, const AlbertElement<K>& X) {
  return {s * X.a, s * X.b, s * X.c, oct_scale(s, X.x), oct_scale(s, X.y),
          oct_scale(s, X.z)};
}

template <class K>
bool alb_is_zero(const AlbertElement<K>& X) {
  K zero{};
  return X.a == zero && X.b == zero && X.c == zero && oct_is_zero(X.x) &&
         oct_is_zero(X.y) && oct_is_zero(X.z);
}

template <class K>
AlbertElement<K> alb_diag(const K& a, const K& b, const K& c) {
  AlbertElement<K> X;
  X.a = a;
  X.b = b;
  X.c = c;
  return X;
}

template <class K>
AlbertElement<K> alb_identity_like(const K& proto) {
  K one = scalar_like(proto, 1);
  return alb_diag(one, one, one);
}

template <class K>
long char_of_alb(const AlbertElement<K>& X) {
  long c = 0;
  c = char_acc(c, X.a);
  c = char_acc(c, X.b);
  c = char_acc(c, X.c);
  c = std::max(c, char_of_oct(X.x));
  c = std::max(c, char_of_oct(X.y));
  c = std::max(c, char_of_oct(X.z));
  return c;
}

inline void require_invertible(long prime, long characteristic, const char* op) {
  if (characteristic == prime)
    throw std::domain_error(std::string(op) + ": requires " +
                            std::to_string(prime) +
                            " invertible in the scalar backend");
}

// x/2, usable on any backend where 2 is a unit; zero needs no modulus
template <class K>
K halve_scalar(const K& t) {
  if (t == K{}) return t;
  return t * scalar_inv(scalar_like(t, 2));
}
template <class K>
Octonion<K> oct_halve(const Octonion<K>& w) {
  return {halve_scalar(w.a),
          {halve_scalar(w.u[0]), halve_scalar(w.u[1]), halve_scalar(w.u[2])},
          {halve_scalar(w.v[0]), halve_scalar(w.v[1]), halve_scalar(w.v[2])},
          halve_scalar(w.b)};
}

template <class K>
K alb_trace(const AlbertElement<K>& X) {
  return X.a + X.b + X.c;
}

// (X,Y) = Tr(X o Y) in its integral coordinate form: valid over GF(2), and
// tested to agree with jordan_mul + trace wherever 2 is invertible.
template <class K>
K trace_pairing(const AlbertElement<K>& X, const AlbertElement<K>& Y) {
  return X.a * Y.a + X.b * Y.b + X.c * Y.c + oct_bilinear_closed(X.x, Y.x) +
         oct_bilinear_closed(X.y, Y.y) + oct_bilinear_closed(X.z, Y.z);
}

template <class K>
AlbertElement<K> jordan_mul(const AlbertElement<K>& X, const AlbertElement<K>& Y) {
  require_invertible(2, std::max(char_of_alb(X), char_of_alb(Y)), "jordan_mul");
  using O = Octonion<K>;
  auto mat = [](const AlbertElement<K>& E) {
    return std::array<std::array<O, 3>, 3>{
        {{oct_scalar(E.a), E.z, oct_conj(E.y)},
         {oct_conj(E.z), oct_scalar(E.b), E.x},
         {E.y, oct_conj(E.x), oct_scalar(E.c)}}};
  };
  auto A = mat(X), B = mat(Y);
  // S = XY + YX entrywise (octonion products; matrix entries associate here
  // because we only ever read the Hermitian data off S)
  std::array<std::array<O, 3>, 3> S;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      O s{};
      for (int k = 0; k < 3; ++k)
        s = s + oct_mul(A[i][k], B[k][j]) + oct_mul(B[i][k], A[k][j]);
      S[i][j] = s;
    }
  AlbertElement<K> R;
  R.a = halve_scalar(S[0][0].a);
  R.b = halve_scalar(S[1][1].a);
  R.c = halve_scalar(S[2][2].a);
  R.z = oct_halve(S[0][1]);
  R.x = oct_halve(S[1][2]);
  R.y = oct_halve(S[2][0]);
  return R;
}

// q(X) = Tr(X o X)/2 = (X,X)/2
template <class K>
K alb_q(const AlbertElement<K>& X) {
  require_invertible(2, char_of_alb(X), "alb_q");
  return halve_scalar(trace_pairing(X, X));
}

// N_J(X) = abc - a N(x) - b N(y) - c N(z) + Tr((xy)z); the association order
// inside the trace is fixed as (xy)z and the equality with x(yz) is a test.
template <class K>
K cubic_norm(const AlbertElement<K>& X) {
  return X.a * X.b * X.c - X.a * oct_norm(X.x) - X.b * oct_norm(X.y) -
         X.c * oct_norm(X.z) + oct_trace(oct_mul(oct_mul(X.x, X.y), X.z));
}

// adjoint: (X^#)^# = N_J(X) X, entries integral in the coordinates
template <class K>
AlbertElement<K> adjoint(const AlbertElement<K>& X) {
  AlbertElement<K> R;
  R.a = X.b * X.c - oct_norm(X.x);
  R.b = X.c * X.a - oct_norm(X.y);
  R.c = X.a * X.b - oct_norm(X.z);
  R.x = oct_conj(oct_mul(X.y, X.z)) - oct_scale(X.a, X.x);
  R.y = oct_conj(oct_mul(X.z, X.x)) - oct_scale(X.b, X.y);
  R.z = oct_conj(oct_mul(X.x, X.y)) - oct_scale(X.c, X.z);
  return R;
}

// 2(A x B) = (A+B)^# - A^# - B^#: the polarized adjoint, still integral.
// The Freudenthal action formulas only ever need this doubled form.
template <class K>
AlbertElement<K> cross2(const AlbertElement<K>& A, const AlbertElement<K>& B) {
  return adjoint(A + B) - adjoint(A) - adjoint(B);
}

template <class K>
AlbertElement<K> cross(const AlbertElement<K>& A, const AlbertElement<K>& B) {
  require_invertible(2, std::max(char_of_alb(A), char_of_alb(B)), "cross");
  AlbertElement<K> D = cross2(A, B);
  return {halve_scalar(D.a), halve_scalar(D.b), halve_scalar(D.c),
          oct_halve(D.x),    oct_halve(D.y),    oct_halve(D.z)};
}

template <class K>
int rank(const AlbertElement<K>& X) {
  if (alb_is_zero(X)) return 0;
  AlbertElement<K> sharp = adjoint(X);
  if (alb_is_zero(sharp)) return 1;
  if (cubic_norm(X) == K{}) return 2;
  return 3;
}

// Rank-1 element with prescribed (1,1)-entry a != 0 and off-diagonal
// octonions y, z: the vanishing of X^# forces b = N(z)/a, c = N(y)/a and,
// from the (2,3)-block conj(yz) - a x = 0, x = conj(yz)/a.  With the
// optional trace-1 normalization the slice satisfies N(y) + N(z) = a(1-a).
template <class K>
AlbertElement<K> rank1_construct(const K& a, const Octonion<K>& y,
                                 const Octonion<K>& z, bool normalize = false) {
  if (a == K{}) throw std::invalid_argument("rank1_construct: a must be nonzero");
  K ainv = scalar_inv(a);
  AlbertElement<K> X;
  X.a = a;
  X.b = oct_norm(z) * ainv;
  X.c = oct_norm(y) * ainv;
  X.x = oct_scale(ainv, oct_conj(oct_mul(y, z)));
  X.y = y;
  X.z = z;
  if (rank(X) != 1)
    throw std::logic_error("rank1_construct: internal error, result not rank 1");
  if (normalize) {
    K t = alb_trace(X);
    if (t == K{})
      throw std::domain_error("rank1_construct: trace is zero, cannot normalize");
    X = alb_scale(scalar_inv(t), X);
  }
  return X;
}

}  // namespace exc7
