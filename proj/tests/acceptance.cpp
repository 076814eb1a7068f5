// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "hmstab/curve_model.hpp"
#include "hmstab/error.hpp"
#include "hmstab/filtration_engine.hpp"
#include "hmstab/linear_series.hpp"
#include "hmstab/monomial_engine.hpp"
#include "hmstab/stability_engine.hpp"
#include "support.hpp"

using namespace hmstab;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    if (!ok && passed) detail = what;
    passed = passed && ok;
  }
};

std::vector<std::int64_t> range(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (auto v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

std::string at(std::int64_t g, std::int64_t m) { return " (g=" + std::to_string(g) + ", m=" + std::to_string(m) + ")"; }

Outcome check_elliptic_weight() {
  Outcome o;
  for (std::int64_t g : range(3, 12))
    for (std::int64_t nu : {3, 4})
      for (std::int64_t m : range(2, 10)) {
        const auto c = EmbeddingConfig::canonical(g, nu);
        const BigInt w = basis_weight(elliptic_tail_filtration(c, m));
        const Rational closed = Rational(m * m) * (Rational(c.d()) - Rational(nu, 2)) * Rational(nu) +
                                Rational(m) * (Rational(3, 2) - Rational(g)) * Rational(nu) - Rational(1);
        o.expect(Rational(w) == closed, "weight differs from closed form" + at(g, m));
        o.expect(w == oracle::elliptic_weight(g, nu, c.d(), m), "weight differs from jump-sum oracle" + at(g, m));
      }
  return o;
}

Outcome check_elliptic_index() {
  Outcome o;
  for (std::int64_t g : range(3, 12)) {
    const auto r = elliptic_tail_report(EmbeddingConfig::canonical(g, 4), range(2, 10));
    for (const auto& row : r.rows) o.expect(row.mu == Rational(-(row.m - 1)), "mu != -(m-1)" + at(g, row.m));
    o.expect(r.chow_quadratic_coefficient == Rational(0), "chow coefficient nonzero at g=" + std::to_string(g));
  }
  return o;
}

Outcome check_cuspidal_tail() {
  Outcome o;
  const auto tail = hmstab::cuspidal_tail();
  o.expect(min_weight_spanning_set(tail, 2).total_weight == 35, "tail weight at m=2 is not 35");
  o.expect(min_weight_spanning_set(tail, 3).total_weight == 77, "tail weight at m=3 is not 77");
  auto t_set = [&tail](std::int64_t m) {
    std::set<std::int64_t> s;
    for (const auto& b : initial_ideal_complement(tail, m)) s.insert(b.t);
    return s;
  };
  std::set<std::int64_t> to8{0}, to12{0};
  for (std::int64_t t = 2; t <= 8; ++t) to8.insert(t);
  for (std::int64_t t = 2; t <= 12; ++t) to12.insert(t);
  o.expect(t_set(2) == to8, "index set at m=2 is not {0,2..8}");
  o.expect(t_set(3) == to12, "index set at m=3 is not {0,2..12}");
  for (std::int64_t g : range(3, 12)) {
    const auto c = EmbeddingConfig::canonical(g, 4);
    const auto rho = build_rho(c);
    const BigInt w2 = assemble_two_component_weight(c, tail, 2).total;
    const BigInt w3 = assemble_two_component_weight(c, tail, 3).total;
    o.expect(w2 == 120 * g - 149, "assembled total at m=2" + at(g, 2));
    o.expect(w3 == 276 * g - 343, "assembled total at m=3" + at(g, 3));
    const Rational v2 = Rational(w2) - mpm_alpha(c, rho, 2);
    const Rational v3 = Rational(w3) - mpm_alpha(c, rho, 3);
    o.expect(v2 == Rational(1) && v3 == Rational(2), "normalized indices are not (1, 2) at g=" + std::to_string(g));
    const auto ab = interpolate_index(v2, v3);
    for (std::int64_t m : range(2, 10)) {
      const Rational mu = -(Rational(m - 1) * (ab.a * Rational(m) + ab.b));
      o.expect(mu == Rational(-(m - 1)), "interpolated mu != -(m-1)" + at(g, m));
    }
    const auto r = cuspidal_tail_report(c, range(2, 6));
    o.expect(r.all_checks_pass(), "report cross-checks fail at g=" + std::to_string(g));
  }
  return o;
}

Outcome check_cusp() {
  Outcome o;
  for (std::int64_t g : range(3, 12)) {
    const auto c = EmbeddingConfig::canonical(g, 4);
    const auto ps = build_cusp_ps(c);
    for (std::int64_t m : range(2, 10)) {
      const BigInt w = basis_weight(cusp_filtration(c, m));
      o.expect(w == 8 * m * m - 2 * m + 1, "cusp weight" + at(g, m));
      o.expect(w == oracle::cusp_weight(m), "cusp weight vs semigroup oracle" + at(g, m));
      o.expect(hilbert_index(w, mpm_alpha(c, ps, m)) == Rational(m - 1), "mu != m-1" + at(g, m));
    }
    o.expect(cusp_report(c, range(2, 10)).chow_quadratic_coefficient == Rational(0),
             "chow coefficient nonzero at g=" + std::to_string(g));
  }
  return o;
}

// mu divisible by m - 1 and a single (m - 1)(a m + b) through every row.
bool hh_law(const StabilityReport& r) {
  if (r.rows.size() < 3) return false;
  const Rational v2 = -r.rows[0].mu, v3 = -r.rows[1].mu;
  if (r.rows[0].m != 2 || r.rows[1].m != 3) return false;
  const auto ab = interpolate_index(v2, v3);
  for (const auto& row : r.rows) {
    if (!row.mu.is_integer()) return false;
    if (row.mu.numerator() % (row.m - 1) != 0) return false;
    if (-row.mu != Rational(row.m - 1) * (ab.a * Rational(row.m) + ab.b)) return false;
  }
  return true;
}

Outcome check_divisibility() {
  Outcome o;
  for (std::int64_t g : range(3, 12)) {
    const auto c = EmbeddingConfig::canonical(g, 4);
    const auto ms = range(2, 10);
    for (const auto& r : {elliptic_tail_report(c, ms), cuspidal_tail_report(c, ms), cusp_report(c, ms)}) {
      o.expect(hh_law(r), to_string(r.scenario) + " rows break the (m-1)(am+b) law at g=" + std::to_string(g));
      o.expect(divisibility_check(r), to_string(r.scenario) + " divisibility_check false at g=" + std::to_string(g));
    }
  }
  return o;
}

Outcome check_basins() {
  Outcome o;
  for (std::int64_t g : range(3, 12)) {
    const auto c = EmbeddingConfig::canonical(g, 4);
    const auto rho = build_rho(c);
    const auto cusp = cusp_deformation_weights(cusp_local_weight(c, rho));
    o.expect(cusp.parameter_weights == std::vector<std::int64_t>{4, 6}, "cusp smoothing weights are not (4, 6)");
    const auto [a, b] = node_tangent_weights(c, rho);
    const auto node = node_deformation_weights(a, b);
    o.expect(node.parameter_weights == std::vector<std::int64_t>{-1}, "node smoothing weight is not -1");
    o.expect(basin_membership(cusp, false) == BasinMembership::in_basin, "cusp not in basin under rho");
    o.expect(basin_membership(cusp, true) == BasinMembership::not_in_basin, "cusp in basin under rho^-1");
    o.expect(basin_membership(node, false) == BasinMembership::not_in_basin, "node in basin under rho");
    o.expect(basin_membership(node, true) == BasinMembership::in_basin, "node not in basin under rho^-1");
  }
  return o;
}

Outcome check_generalized() {
  Outcome o;
  int critical = 0;
  for (std::int64_t nu : {3, 4, 5, 6, 8}) {
    for (std::int64_t g : range(3, 20)) {
      if ((g - 1) % (nu - 2) != 0) continue;
      const auto c = generalized_tail_config(nu, g);
      ++critical;
      o.expect(Rational(c.d(), c.n()) == Rational(nu * nu, nu * nu - nu + 2), "critical ratio");
      const auto r = generalized_report(c, range(2, 5));
      o.expect(r.chow_quadratic_coefficient == Rational(0),
               "chow coefficient nonzero at the critical ratio (nu=" + std::to_string(nu) + ")");
      // nu-canonical models are off the critical ratio for every nu != 4.
      if (nu != 4) {
        const auto off = elliptic_tail_report(EmbeddingConfig::canonical(g, nu), range(2, 5));
        o.expect(off.chow_quadratic_coefficient != Rational(0),
                 "chow coefficient zero off the critical ratio (nu=" + std::to_string(nu) + ")");
      }
    }
  }
  o.expect(critical >= 5, "no compatible genera found");
  for (std::int64_t g : range(3, 12)) {
    const auto five = elliptic_tail_report(EmbeddingConfig::canonical(g, 5), range(2, 5));
    o.expect(five.chow_quadratic_coefficient.sign() < 0, "5-canonical chow coefficient is not negative");
    const auto four = EmbeddingConfig::canonical(g, 4);
    o.expect(Rational(four.d(), four.n()) == Rational(8, 7), "4-canonical ratio is not 8/7");
  }
  return o;
}

Outcome check_curve_model() {
  Outcome o;
  for (std::int64_t g : range(3, 8)) {
    const auto x = elliptic_tail_curve(g), y = cuspidal_tail_curve(g), z = cuspidal_curve(g);
    o.expect(graphs_isomorphic(pseudostabilize(x), z), "pseudostabilize(X) is not Z");
    o.expect(graphs_isomorphic(pseudostabilize(y), z), "pseudostabilize(Y) is not Z");
    for (const auto* a : {&x, &y, &z})
      for (const auto* b : {&x, &y, &z}) o.expect(chow_identified(*a, *b), "pair not identified");
  }
  gen::Rng rng(1234);
  for (int trial = 0; trial < 50; ++trial) {
    const auto curve = gen::random_weakly_pseudostable(rng);
    const auto once = pseudostabilize(curve);
    o.expect(graphs_isomorphic(pseudostabilize(once), once), "pseudostabilize not idempotent");
  }
  gen::Rng rng2(31);
  for (int trial = 0; trial < 100; ++trial) {
    const auto curve = gen::random_graph(rng2, 6, true);
    o.expect(arithmetic_genus(curve) == oracle::arithmetic_genus(curve), "arithmetic genus differs from oracle");
  }
  return o;
}

Outcome check_oracle_equivalence() {
  Outcome o;
  const auto tail = hmstab::cuspidal_tail();
  for (std::int64_t m : {2, 3})
    o.expect(min_weight_spanning_set(tail, m).total_weight == oracle::exhaustive_min_weight(tail, m),
             "cuspidal tail differs from exhaustive minimum at m=" + std::to_string(m));
  gen::Rng rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const auto t = gen::random_monomial_tail(rng, 4);
    const auto m = gen::uniform(rng, 1, 3);
    o.expect(min_weight_spanning_set(t, m).total_weight == oracle::exhaustive_min_weight(t, m),
             "random tail " + std::to_string(trial) + " differs from exhaustive minimum");
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "elliptic-tail weight equals its closed form (g 3..12, nu 3,4, m 2..10)", check_elliptic_weight},
      {2, "4-canonical elliptic tail: mu = -(m-1), chow coefficient 0", check_elliptic_index},
      {3, "cuspidal tail: 35/77, index sets, assembled totals, interpolation", check_cuspidal_tail},
      {4, "cusp: weight 8m^2-2m+1, mu = m-1, chow coefficient 0", check_cusp},
      {5, "divisibility by m-1 and the (m-1)(am+b) law", check_divisibility},
      {6, "basins of cusp and node smoothings under rho and rho^-1", check_basins},
      {7, "generalized family chow coefficient vanishes exactly at the critical ratio", check_generalized},
      {8, "curve model: pseudostabilization, identification, genus oracle", check_curve_model},
      {9, "minimal spanning set equals the exhaustive minimum", check_oracle_equivalence},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::cout << "criterion " << c.id << ": " << (o.passed ? "PASS" : "FAIL") << "  " << c.name;
    if (!o.passed) std::cout << "  [" << o.detail << "]";
    std::cout << "\n";
    failures += o.passed ? 0 : 1;
  }
  std::cout << "criterion 10: INFO  global stability over all 1-ps is out of scope; covered only by the property "
               "suites above\n";
  std::cout << (failures == 0 ? "acceptance: all criteria pass" : "acceptance: some criteria FAIL") << "\n";
  return failures == 0 ? 0 : 1;
}
