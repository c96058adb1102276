// Command-line driver for the exceptional-algebra toolkit.
//
//   exc7 verify      randomized exact identity batteries (seeded)
//   exc7 transfer    evaluate the transfer integral on sample points
//   exc7 count       rank-1 cone census over GF(2), checked against the
//                    group-order formula
//   exc7 unramified  symbolic spherical/zeta report in Q(u,t)
//   exc7 spherical   spherical-function table with recursion check
//
// All reports are deterministic for a fixed (config, seed): no timestamps,
// no locale formatting, fixed float precision.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "exc7/battery.hpp"
#include "exc7/f2pack.hpp"
#include "exc7/json_io.hpp"
#include "exc7/transfer.hpp"
#include "exc7/unramified.hpp"

using namespace exc7;

namespace {

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

int cmd_verify(std::uint64_t seed, long iterations, bool corrupt_quartic) {
  if (iterations < 0) {
    std::fprintf(stderr, "verify: iterations must be >= 0\n");
    return 2;
  }
  if (iterations == 0)
    std::printf("warning: 0 iterations requested; every identity passes vacuously\n");
  QuarticFn quartic = [](const FreudenthalVector<Rational>& w) { return quartic_form(w); };
  if (corrupt_quartic) {
    std::printf("note: running with a deliberately corrupted quartic form\n");
    quartic = [](const FreudenthalVector<Rational>& w) {
      return quartic_form_corrupted(w);
    };
  }
  auto results = run_identity_battery(seed, iterations, quartic);
  long failed = 0;
  for (const auto& r : results) {
    if (r.failures == 0) {
      std::printf("PASS  %-26s (%ld iterations)\n", r.name.c_str(), r.iterations);
    } else {
      std::printf("FAIL  %-26s %ld/%ld failures, first at iteration %ld (seed %llu)\n",
                  r.name.c_str(), r.failures, r.iterations, r.first_failure,
                  (unsigned long long)seed);
      failed++;
    }
  }
  std::printf("%s: %zu identities, %ld failing\n", failed ? "FAIL" : "OK",
              results.size(), failed);
  return failed ? 1 : 0;
}

std::vector<Rational> parse_points(const std::string& spec) {
  std::vector<Rational> pts;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) pts.push_back(parse_rational(tok));
  }
  return pts;
}

int cmd_transfer(const std::string& input, const std::string& points_spec,
                 bool with_oracle, const std::string& format) {
  std::ifstream in(input);
  if (!in) {
    std::fprintf(stderr, "transfer: cannot open %s\n", input.c_str());
    return 2;
  }
  json j;
  in >> j;
  SchwartzFunction phi = sf_from_json(j);
  validate_transfer_input(phi);
  std::vector<Rational> pts = parse_points(points_spec);

  json jrows = json::array();
  if (format == "tsv")
    std::printf("a\tre\tim\tshells\tcertified%s\n", with_oracle ? "\toracle_delta" : "");
  for (const auto& a : pts) {
    if (a == 0) {
      // a = 0 is outside the open orbit: flagged, not an error
      if (format == "tsv") {
        std::printf("0\t-\t-\t-\texcluded (not in the open orbit)%s\n",
                    with_oracle ? "\t-" : "");
      } else {
        jrows.push_back(json{{"a", "0"}, {"excluded", "a = 0 is not in the open orbit"}});
      }
      continue;
    }
    TransferResult res = transfer_eval(phi, a);
    std::string shells = res.shell_max < res.shell_min
                             ? "none"
                             : std::to_string(res.shell_min) + ".." +
                                   std::to_string(res.shell_max);
    double delta = 0;
    if (with_oracle) {
      OracleResult orc = transfer_oracle(phi, a);
      delta = std::abs(orc.value - res.value);
    }
    if (format == "tsv") {
      std::printf("%s\t%s\t%s\t%s\t%s", rational_str(a).c_str(),
                  fmt_double(res.value.real()).c_str(),
                  fmt_double(res.value.imag()).c_str(), shells.c_str(),
                  res.certified ? "yes" : "no");
      if (with_oracle) std::printf("\t%s", fmt_double(delta).c_str());
      std::printf("\n");
    } else {
      json row{{"a", rational_str(a)},
               {"re", res.value.real()},
               {"im", res.value.imag()},
               {"shells", shells},
               {"certified", res.certified}};
      if (with_oracle) row["oracle_delta"] = delta;
      jrows.push_back(row);
    }
  }
  if (format == "json") std::printf("%s\n", jrows.dump(2).c_str());
  return 0;
}

int cmd_count(long q) {
  if (q != 2) {
    Int Q(q);
    if (!is_prime_power(Q)) {
      std::fprintf(stderr, "count: q = %ld is not a prime power\n", q);
      return 2;
    }
    auto rep = group_orders_volumes(Q);
    std::printf("enumeration refused: exhaustive census is only wired for q = 2\n");
    std::printf("formula report for q = %ld:\n", q);
    std::printf("  |F4(q)|          = %s\n", rep.f4_order.str().c_str());
    std::printf("  |Spin9(q)|       = %s\n", rep.spin9_order.str().c_str());
    std::printf("  ratio q^8(q^8+q^4+1) = %s\n", rep.ratio.str().c_str());
    std::printf("  vol(K)           = %s\n", rational_str(rep.vol_K).c_str());
    std::printf("  vol(X)           = %s\n", rational_str(rep.vol_X).c_str());
    return 0;
  }
  auto rep = group_orders_volumes(Int(2));
  auto cnt = count_rank1_f2();
  std::printf("exhaustive census of the 27-dimensional cubic Jordan algebra over GF(2)\n");
  std::printf("  rank 0: %llu\n", (unsigned long long)cnt.rank[0]);
  std::printf("  rank 1: %llu  (trace 0: %llu, trace 1: %llu)\n",
              (unsigned long long)cnt.rank[1], (unsigned long long)cnt.rank1_trace0,
              (unsigned long long)cnt.rank1_trace1);
  std::printf("  rank 2: %llu\n", (unsigned long long)cnt.rank[2]);
  std::printf("  rank 3: %llu\n", (unsigned long long)cnt.rank[3]);
  bool ok = Int(cnt.rank1_trace1) == rep.ratio;
  std::printf("trace-1 rank-1 points: %llu, |F4(2)|/|Spin9(2)| = %s  [%s]\n",
              (unsigned long long)cnt.rank1_trace1, rep.ratio.str().c_str(),
              ok ? "match" : "MISMATCH");
  std::printf("vol(X) = %s\n", rational_str(rep.vol_X).c_str());
  return ok ? 0 : 1;
}

int cmd_unramified(const std::string& format, const std::string& spot_check) {
  CartanReport cr = cartan_zeta();
  LxSharpReport lx = lx_sharp();
  json rep{{"identity_holds", cr.identity_holds},
           {"convention", cr.convention},
           {"lhs", cr.lhs.str()},
           {"rhs", cr.rhs.str()},
           {"lx_sharp", lx.displayed.str()},
           {"discrepancy_ratio", lx.discrepancy_ratio.str()}};
  if (format == "json") {
    std::printf("%s\n", rep.dump(2).c_str());
  } else {
    std::printf("identity_holds:     %s\n", cr.identity_holds ? "true" : "false");
    std::printf("convention:         %s\n", cr.convention.c_str());
    std::printf("lhs:                %s\n", cr.lhs.str().c_str());
    std::printf("rhs:                %s\n", cr.rhs.str().c_str());
    std::printf("lx_sharp:           %s\n", lx.displayed.str().c_str());
    std::printf("discrepancy_ratio:  %s\n", lx.discrepancy_ratio.str().c_str());
  }

  int rc = cr.identity_holds ? 0 : 1;
  if (!spot_check.empty()) {
    // accept "q=9,t=1/2" (also with spaces); u = q^{-1/2}
    std::string s = spot_check;
    for (auto& ch : s)
      if (ch == ' ') ch = ',';
    Rational qv(0), tv(0);
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.rfind("q=", 0) == 0) qv = parse_rational(tok.substr(2));
      if (tok.rfind("t=", 0) == 0) tv = parse_rational(tok.substr(2));
    }
    if (qv <= 0 || tv == 0) {
      std::fprintf(stderr, "unramified: bad spot check '%s'\n", spot_check.c_str());
      return 2;
    }
    Int qi = num_of(qv);
    Int root = boost::multiprecision::sqrt(qi);
    if (den_of(qv) == 1 && root * root == qi) {
      Rational u = Rational(1) / Rational(root);
      Rational l = cr.lhs.eval_rational(u, tv), r = cr.rhs.eval_rational(u, tv);
      std::printf("spot check q=%s t=%s: lhs = %s, rhs = %s  [%s]\n",
                  rational_str(qv).c_str(), rational_str(tv).c_str(),
                  rational_str(l).c_str(), rational_str(r).c_str(),
                  l == r ? "exact match" : "MISMATCH");
      if (l != r) rc = 1;
    } else {
      std::complex<double> u(1.0 / std::sqrt(rat_to_double(qv)), 0.0);
      std::complex<double> t(rat_to_double(tv), 0.0);
      std::complex<double> l = cr.lhs.eval_complex(u, t), r = cr.rhs.eval_complex(u, t);
      double diff = std::abs(l - r);
      std::printf("spot check q=%s t=%s: lhs = %s, rhs = %s, |diff| = %s  [%s]\n",
                  rational_str(qv).c_str(), rational_str(tv).c_str(),
                  fmt_double(l.real()).c_str(), fmt_double(r.real()).c_str(),
                  fmt_double(diff).c_str(), diff < 1e-10 ? "ok" : "MISMATCH");
      if (diff >= 1e-10) rc = 1;
    }
  }
  return rc;
}

int cmd_spherical(long n_max, long q) {
  if (n_max < 0 || q < 2) {
    std::fprintf(stderr, "spherical: need n >= 0 and q >= 2\n");
    return 2;
  }
  Int Q(q);
  Int q3 = int_pow(Q, 3);
  std::printf("n\tvalue\n");
  bool ok = true;
  for (long n = 0; n <= n_max; n++) {
    Int v = spherical_value(n, Q);
    std::printf("%ld\t%s\n", n, v.str().c_str());
    // shell sums satisfy the three-term recursion
    // f(n) = (1 + q^3) f(n-1) - q^3 f(n-2), seeded by f(0)=1, f(1)=1+q^3
    if (n >= 2 &&
        v != (Int(1) + q3) * spherical_value(n - 1, Q) - q3 * spherical_value(n - 2, Q))
      ok = false;
  }
  std::printf("recursion check: %s\n", ok ? "ok" : "FAILED");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exceptional-algebra toolkit"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  long iterations = 1000;
  bool corrupt_quartic = false;
  auto* verify = app.add_subcommand("verify", "run the exact identity batteries");
  verify->add_option("--seed", seed, "RNG seed");
  verify->add_option("--iterations", iterations, "samples per identity");
  verify->add_flag("--corrupt-quartic", corrupt_quartic,
                   "test hook: corrupt the quartic form and expect failure");

  std::string input, points = "1", format = "tsv";
  bool with_oracle = false;
  auto* transfer = app.add_subcommand("transfer", "evaluate the transfer integral");
  transfer->add_option("--input", input, "Schwartz function JSON file")->required();
  transfer->add_option("--points", points, "comma-separated rational points");
  transfer->add_flag("--with-oracle", with_oracle, "cross-check each value");
  transfer->add_option("--format", format, "tsv or json")
      ->check(CLI::IsMember({"tsv", "json"}));

  long count_q = 2;
  auto* count = app.add_subcommand("count", "rank-1 cone census over GF(2)");
  count->add_option("--q", count_q, "field size (only 2 enumerates)");

  std::string ur_format = "text", spot_check;
  auto* unram = app.add_subcommand("unramified", "symbolic zeta report in Q(u,t)");
  unram->add_option("--format", ur_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  unram->add_option("--spot-check", spot_check, "numeric check, e.g. q=9,t=1/2");

  long sph_n = 20, sph_q = 3;
  auto* sph = app.add_subcommand("spherical", "spherical value table");
  sph->add_option("--n", sph_n, "table up to this n");
  sph->add_option("--q", sph_q, "residue field size");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return cmd_verify(seed, iterations, corrupt_quartic);
    if (transfer->parsed()) return cmd_transfer(input, points, with_oracle, format);
    if (count->parsed()) return cmd_count(count_q);
    if (unram->parsed()) return cmd_unramified(ur_format, spot_check);
    if (sph->parsed()) return cmd_spherical(sph_n, sph_q);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
