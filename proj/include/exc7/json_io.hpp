#pragma once
// JSON interchange for the exact types.  Scalars travel as "p/q" strings so
// nothing is rounded; octonions are flat 8-arrays [a,u1,u2,u3,v1,v2,v3,b];
// Schwartz-Bruhat terms carry a complex coefficient plus exact modulation,
// center, and depth.  On output the exact scale/phase bookkeeping of a term
// is folded into the complex coefficient (the wire format is for reports and
// hand-written inputs, not for round-tripping internal exact state).

#include <json.hpp>

#include "exc7/albert.hpp"
#include "exc7/freudenthal.hpp"
#include "exc7/padic.hpp"

namespace exc7 {

using nlohmann::json;

inline json rational_to_json(const Rational& x) { return rational_str(x); }

inline Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected rational as \"p/q\" string, got " + j.dump());
}

inline json oct_to_json(const Octonion<Rational>& o) {
  return json::array({rational_to_json(o.a), rational_to_json(o.u[0]),
                      rational_to_json(o.u[1]), rational_to_json(o.u[2]),
                      rational_to_json(o.v[0]), rational_to_json(o.v[1]),
                      rational_to_json(o.v[2]), rational_to_json(o.b)});
}

inline Octonion<Rational> oct_from_json(const json& j) {
  if (!j.is_array() || j.size() != 8)
    throw std::invalid_argument("octonion must be an 8-array [a,u1,u2,u3,v1,v2,v3,b]");
  Octonion<Rational> o;
  o.a = rational_from_json(j[0]);
  o.u = {rational_from_json(j[1]), rational_from_json(j[2]), rational_from_json(j[3])};
  o.v = {rational_from_json(j[4]), rational_from_json(j[5]), rational_from_json(j[6])};
  o.b = rational_from_json(j[7]);
  return o;
}

inline json alb_to_json(const AlbertElement<Rational>& X) {
  return json{{"a", rational_to_json(X.a)}, {"b", rational_to_json(X.b)},
              {"c", rational_to_json(X.c)}, {"x", oct_to_json(X.x)},
              {"y", oct_to_json(X.y)},      {"z", oct_to_json(X.z)}};
}

inline AlbertElement<Rational> alb_from_json(const json& j) {
  AlbertElement<Rational> X;
  X.a = rational_from_json(j.at("a"));
  X.b = rational_from_json(j.at("b"));
  X.c = rational_from_json(j.at("c"));
  X.x = oct_from_json(j.at("x"));
  X.y = oct_from_json(j.at("y"));
  X.z = oct_from_json(j.at("z"));
  return X;
}

inline json fv_to_json(const FreudenthalVector<Rational>& w) {
  return json{{"X", alb_to_json(w.X)},
              {"x", rational_to_json(w.x)},
              {"Y", alb_to_json(w.Y)},
              {"y", rational_to_json(w.y)}};
}

inline FreudenthalVector<Rational> fv_from_json(const json& j) {
  FreudenthalVector<Rational> w;
  w.X = alb_from_json(j.at("X"));
  w.x = rational_from_json(j.at("x"));
  w.Y = alb_from_json(j.at("Y"));
  w.y = rational_from_json(j.at("y"));
  return w;
}

inline json sf_to_json(const SchwartzFunction& f) {
  json terms = json::array();
  for (const auto& t : f.terms) {
    Cplx coeff = t.constant_factor();
    terms.push_back(json{{"coeff", json::array({coeff.real(), coeff.imag()})},
                         {"beta", rational_to_json(t.beta)},
                         {"center", rational_to_json(t.center)},
                         {"depth", t.depth}});
  }
  return json{{"p", f.p}, {"terms", terms}};
}

inline SchwartzFunction sf_from_json(const json& j) {
  SchwartzFunction f;
  f.p = j.at("p").get<long>();
  if (f.p < 2) throw std::invalid_argument("Schwartz function needs p >= 2");
  for (const auto& jt : j.at("terms")) {
    SBTerm t;
    const auto& coeff = jt.at("coeff");
    if (!coeff.is_array() || coeff.size() != 2)
      throw std::invalid_argument("term coeff must be [re, im]");
    t.amp = Cplx(coeff[0].get<double>(), coeff[1].get<double>());
    t.beta = rational_from_json(jt.at("beta"));
    t.center = rational_from_json(jt.at("center"));
    t.depth = jt.at("depth").get<long>();
    f.terms.push_back(std::move(t));
  }
  canonicalize(f);
  return f;
}

}  // namespace exc7
