#pragma once
// The randomized identity battery shared by the CLI verifier and the
// acceptance gate.  Each check draws fresh elements from a seeded stream and
// tests an exact identity; a single failure is reported with the iteration
// index so the element can be regenerated from the seed.  The quartic form
// is injectable so the driver can demonstrate that a corrupted invariant is
// actually caught (a battery that cannot fail proves nothing).

#include <functional>
#include <string>
#include <vector>

#include "exc7/sampling.hpp"

namespace exc7 {

struct BatteryResult {
  std::string name;
  long iterations = 0;
  long failures = 0;
  long first_failure = -1;
};

using QuarticFn = std::function<Rational(const FreudenthalVector<Rational>&)>;

inline std::vector<BatteryResult> run_identity_battery(
    std::uint64_t seed, long iterations,
    QuarticFn quartic = [](const FreudenthalVector<Rational>& w) {
      return quartic_form(w);
    }) {
  std::vector<BatteryResult> out;
  auto run = [&](const std::string& name, const std::function<bool(Rng&)>& check) {
    BatteryResult r;
    r.name = name;
    r.iterations = iterations;
    Rng rng(seed ^ std::hash<std::string>{}(name));
    for (long i = 0; i < iterations; i++) {
      if (!check(rng)) {
        r.failures++;
        if (r.first_failure < 0) r.first_failure = i;
      }
    }
    out.push_back(std::move(r));
  };

  run("octonion_composition", [](Rng& rng) {
    auto x = rand_octonion(rng), y = rand_octonion(rng);
    return oct_norm(oct_mul(x, y)) == oct_norm(x) * oct_norm(y);
  });

  run("octonion_alternativity", [](Rng& rng) {
    auto x = rand_octonion(rng), y = rand_octonion(rng);
    return oct_mul(x, oct_mul(x, y)) == oct_mul(oct_mul(x, x), y) &&
           oct_mul(oct_mul(y, x), x) == oct_mul(y, oct_mul(x, x));
  });

  run("adjoint_identity", [](Rng& rng) {
    auto X = rand_albert(rng, 2);
    return adjoint(adjoint(X)) == alb_scale(cubic_norm(X), X);
  });

  run("trace_sharp_pairing", [](Rng& rng) {
    auto X = rand_albert(rng, 2);
    return trace_pairing(X, adjoint(X)) == Rational(3) * cubic_norm(X);
  });

  run("cross_square", [](Rng& rng) {
    auto X = rand_albert(rng, 2);
    return cross(X, X) == adjoint(X);
  });

  run("symplectic_invariance", [](Rng& rng) {
    auto g = rand_group_element(rng);
    auto w1 = rand_fv(rng, 2), w2 = rand_fv(rng, 2);
    return symplectic_form(g.apply(w1), g.apply(w2)) ==
           g.nu() * symplectic_form(w1, w2);
  });

  run("quartic_similitude", [&](Rng& rng) {
    auto g = rand_group_element(rng);
    auto w = rand_fv(rng, 2);
    Rational nu = g.nu();
    return quartic(g.apply(w)) == nu * nu * quartic_form(w);
  });

  run("levi_similitude", [](Rng& rng) {
    int i = 1 + (int)rng.below(3);
    Rational t = rng.nonzero_rational();
    auto X = rand_albert(rng, 2);
    Rational t2 = t * t;
    return cubic_norm(levi_j_action(i, t, X)) == t2 * cubic_norm(X) &&
           trace_pairing(levi_j_action(i, t, X),
                         levi_j_action(i, scalar_inv(t), X)) ==
               trace_pairing(X, X);
  });

  run("identification_roundtrip", [](Rng& rng) {
    V4V2Element<Rational> e;
    for (auto& c : e.v4) c = rng.small_rational();
    e.P = rand_albert_trace0(rng, 2);
    e.Q = rand_albert_trace0(rng, 2);
    auto back = deidentify(identify(e));
    auto w = rand_fv(rng, 2);
    return back.v4 == e.v4 && back.P == e.P && back.Q == e.Q &&
           identify(deidentify(w)) == w;
  });

  run("rank1_trace_slice", [](Rng& rng) {
    // the split norm form is isotropic, so a^2 + N(y) + N(z) = 0 happens on
    // random draws; those have trace 0 and cannot sit on the trace-1 slice
    Rational a;
    Octonion<Rational> y, z;
    do {
      a = rng.nonzero_rational();
      y = rand_octonion(rng, 2);
      z = rand_octonion(rng, 2);
    } while (a * a + oct_norm(y) + oct_norm(z) == 0);
    auto X = rank1_construct(a, y, z, true);
    if (rank(X) != 1 || alb_trace(X) != 1) return false;
    // on the trace-1 slice the off-diagonal norms balance the diagonal:
    // N(y') + N(z') = a'(1 - a') with primes the normalized entries
    return oct_norm(X.y) + oct_norm(X.z) == X.a * (Rational(1) - X.a);
  });

  return out;
}

}  // namespace exc7
