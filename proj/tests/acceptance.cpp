// Acceptance run: one PASS/FAIL line per criterion, exact arithmetic.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "flowvol/cohomring.hpp"
#include "flowvol/dualalgebra.hpp"
#include "flowvol/flowpoly.hpp"
#include "flowvol/multiplicity.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace flowvol;
using flowvol::testing::alpha;
using flowvol::testing::fundamental;
using flowvol::testing::poly;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Every volume polynomial produced by criteria 1-6, for the duality check.
std::vector<std::pair<std::string, Polynomial>> computed_volumes;

void record(const std::string& label, const Polynomial& v) { computed_volumes.emplace_back(label, v); }

std::string describe(const MultiplicityMatrix& m) {
  std::ostringstream s;
  s << "l=" << m.rank() << " m=(";
  bool first = true;
  for (auto [i, j, v] : m.entries()) {
    s << (first ? "" : ",") << v;
    first = false;
  }
  s << ")";
  return s.str();
}

std::vector<MultiplicityMatrix> operator_grid() {
  std::vector<MultiplicityMatrix> grid;
  for (int l = 1; l <= 3; ++l)
    for (int m = 1; m <= 3; ++m) grid.push_back(MultiplicityMatrix::uniform(l, m));
  for (auto values : std::vector<std::vector<int>>{{1, 2, 1}, {2, 1, 3}, {3, 1, 1}, {1, 3, 2}})
    grid.push_back(MultiplicityMatrix::from_lex(2, values));
  return grid;
}

Outcome criterion1() {
  auto mult = MultiplicityMatrix::uniform(2, 2);
  Polynomial nice = chamber_volume_polynomial(mult);
  auto other_chamber = [](const Weight& w) { return w[0] > w[1] && w[1] > 0; };
  Polynomial other = chamber_volume_polynomial(mult, chamber_samples(2, mult.dimension(), other_chamber));
  record("l=2 n=2 nice", nice);
  record("l=2 n=2 q1>q2", other);
  Outcome o;
  o.pass = nice == poly("-1/12 q1^4 + 1/6 q1^3 q2", 2) && other == poly("-1/12 q2^4 + 1/6 q1 q2^3", 2);
  o.detail = "nice: " + to_string(nice) + "; q1>q2: " + to_string(other);
  return o;
}

Outcome criterion2() {
  MergedCoordinateMap map(2, 2);
  Polynomial raw = map.pullback(chamber_volume_polynomial(MultiplicityMatrix::uniform(2, 2)));
  const std::vector<Exponent> patterns{{4, 0, 0, 0, 0, 0}, {3, 1, 0, 0, 0, 0}, {3, 0, 1, 0, 0, 0},
                                       {3, 0, 0, 1, 0, 0}, {3, 0, 0, 0, 1, 0}, {3, 0, 0, 0, 0, 1}};
  const std::vector<Rational> expected{-2, 1, -2, 1, 2, -1};
  Outcome o;
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    Rational got = intersection_pairing(raw, patterns[i]);
    o.detail += (i ? "," : "") + to_string(got);
    o.pass = o.pass && got == expected[i];
  }
  o.detail = "p^4,p^3q,p^3r,p^3s,p^3x,p^3y = " + o.detail;
  return o;
}

Outcome criterion3() {
  auto betti = betti_numbers(chamber_volume_polynomial(MultiplicityMatrix::uniform(2, 2)));
  auto hilbert = hilbert_function(presentation_ideal(2, 2));
  const std::vector<int> want{1, 2, 2, 2, 1};
  Outcome o;
  o.pass = betti == want && hilbert == want && poincare_polynomial(betti) == "1+2t^2+2t^4+2t^6+t^8";
  o.detail = "betti " + poincare_polynomial(betti) + ", hilbert " + poincare_polynomial(hilbert);
  return o;
}

Outcome criterion4() {
  Outcome o;
  int checked = 0;
  for (const auto& m : operator_grid()) {
    Polynomial v = chamber_volume_polynomial(m);
    record(describe(m), v);
    ++checked;
    if (!verify_nst_system(m, v)) {
      o.pass = false;
      o.detail += " fails at " + describe(m) + ";";
    }
  }
  o.detail = std::to_string(checked) + " instances" + o.detail;
  return o;
}

Outcome criterion5() {
  Outcome o;
  int checked = 0;
  for (const auto& m : operator_grid()) {
    auto sol = solve_nice_volume_detailed(m);
    record(describe(m) + " solved", sol.volume);
    ++checked;
    if (sol.kernel_dimension != 1 || sol.volume != chamber_volume_polynomial(m)) {
      o.pass = false;
      o.detail += " " + describe(m) + " kernel " + std::to_string(sol.kernel_dimension) + ";";
    }
  }
  o.detail = std::to_string(checked) + " instances, kernel dimension 1 and equal polynomials" + o.detail;
  return o;
}

Outcome criterion6() {
  std::vector<MultiplicityMatrix> cases;
  for (int l = 1; l <= 2; ++l)
    for (int m = 1; m <= 3; ++m) cases.push_back(MultiplicityMatrix::uniform(l, m));
  cases.push_back(MultiplicityMatrix::uniform(3, 1));
  Outcome o;
  for (const auto& m : cases) {
    Polynomial v = chamber_volume_polynomial(m);
    auto report = verify_generation(m, v);
    if (!report.holds()) {
      o.pass = false;
      o.detail += " " + describe(m) + ": " + report.failure_summary() + ";";
    }
  }
  o.detail = std::to_string(cases.size()) + " instances" + o.detail;
  return o;
}

Outcome criterion7() {
  Outcome o;
  int instances = 0, mismatches = 0;
  for (int l = 1; l <= 3; ++l)
    for (int n = 1; n <= 2; ++n) {
      auto mult = MultiplicityMatrix::uniform(l, n);
      std::vector<long> q(l, 0);
      while (true) {
        std::vector<Rational> coords(q.begin(), q.end());
        Integer dp = partition_count(mult, Weight(coords));
        long brute = flowvol::testing::brute_force_flow_count(mult, q);
        ++instances;
        if (dp != brute) ++mismatches;
        int k = 0;
        while (k < l && q[k] == 4) q[k++] = 0;
        if (k == l) break;
        ++q[k];
      }
    }
  o.pass = mismatches == 0 && instances >= 200;
  o.detail = std::to_string(instances) + " instances, " + std::to_string(mismatches) + " mismatches";
  return o;
}

// Nondecreasing tuples of dominant weights with fundamental coordinates <= 2.
void dominant_tuples(int l, int n, const std::function<void(const std::vector<Weight>&)>& visit) {
  std::vector<std::vector<Rational>> singles;
  std::vector<int> c(l, 0);
  while (true) {
    singles.emplace_back(c.begin(), c.end());
    int k = 0;
    while (k < l && c[k] == 2) c[k++] = 0;
    if (k == l) break;
    ++c[k];
  }
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    std::vector<Weight> lams;
    for (auto i : idx) lams.push_back(fundamental_to_alpha(l, singles[i]));
    visit(lams);
    int k = n - 1;
    while (k >= 0 && idx[k] == singles.size() - 1) --k;
    if (k < 0) break;
    ++idx[k];
    for (int j = k + 1; j < n; ++j) idx[j] = idx[k];
  }
}

Outcome criterion8() {
  Outcome o;
  int instances = 0, mismatches = 0, literal_mismatches = 0;
  for (int l = 1; l <= 2; ++l)
    for (int n = 1; n <= 3; ++n)
      dominant_tuples(l, n, [&](const std::vector<Weight>& lams) {
        MultiplicityQuery q{lams, Weight::zero(l)};
        std::vector<Weight> mus;
        for (const auto& [mu, m] : tensor_character(lams))
          if (mu.is_dominant()) mus.push_back(mu);
        // One dominant weight beyond the highest one.
        mus.push_back(q.lambda_sum() + fundamental_to_alpha(l, std::vector<Rational>(l, 1)));
        for (const auto& mu : mus) {
          q.mu = mu;
          ++instances;
          const Integer oracle = convolution_oracle(q);
          if (tensor_weight_multiplicity(q) != oracle) ++mismatches;
          if (tensor_weight_multiplicity(q, RhoConvention::half_simple_roots) != oracle) ++literal_mismatches;
        }
      });
  o.pass = mismatches == 0 && instances >= 100;
  o.detail = std::to_string(instances) + " instances, " + std::to_string(mismatches) + " mismatches with the standard rho; the half-simple-root rho disagrees on " +
             std::to_string(literal_mismatches);
  return o;
}

Outcome criterion9() {
  Outcome o;
  int instances = 0, reduction_failures = 0, band_failures = 0;
  Rational worst = 0;
  for (int l = 1; l <= 2 && instances < 24; ++l)
    for (int n = 1; n <= 3 && instances < 24; ++n)
      for (int a = 1; a <= 3 && instances < 24; ++a)
        for (int b = (l == 1 ? 0 : 1); b <= (l == 1 ? 0 : 3) && instances < 24; ++b)
          for (int q1 = 1; q1 <= 2 && instances < 24; ++q1)
            for (int q2 = 1; q2 <= (l == 1 ? 1 : 3) && instances < 24; ++q2) {
              std::vector<Rational> f = l == 1 ? std::vector<Rational>{a} : std::vector<Rational>{a, b};
              std::vector<Weight> lams(n, fundamental_to_alpha(l, f));
              Weight diff = l == 1 ? alpha({q1}) : alpha({q1, q2});
              MultiplicityQuery q{lams, Weight::zero(l)};
              q.mu = q.lambda_sum() - diff;
              if (!sufficiently_close(q.lambdas, q.mu)) continue;
              auto mult = MultiplicityMatrix::uniform(l, n);
              if (mult.dimension() == 0) continue;  // the volume is the single point count
              ++instances;
              if (tensor_weight_multiplicity(q) != partition_count(mult, diff)) ++reduction_failures;
              const Rational v = ehrhart_volume(mult, diff);
              auto probe = asymptotic_volume_probe(q, 8);
              Rational dev = abs(probe.back() - v) / v;
              if (dev > worst) worst = dev;
              if (dev > 2) ++band_failures;
            }
  o.pass = instances >= 20 && reduction_failures == 0 && band_failures == 0;
  o.detail = std::to_string(instances) + " close instances, " + std::to_string(reduction_failures) +
             " reduction failures, largest k=8 relative deviation " + to_string(worst) + " (bound 2)";
  return o;
}

Outcome criterion10() {
  Outcome o;
  for (const auto& [label, v] : computed_volumes) {
    auto betti = betti_numbers(v);
    const int d = v.degree();
    bool ok = betti.front() == 1;
    for (int k = 0; k <= d; ++k) ok = ok && betti[k] == betti[d - k] && rank(pairing_matrix(v, k)) == betti[k];
    if (!ok) {
      o.pass = false;
      o.detail += " " + label + ";";
    }
  }
  o.detail = std::to_string(computed_volumes.size()) + " polynomials" + o.detail;
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"volume polynomial on both chambers", criterion1},
      {"intersection pairings", criterion2},
      {"Poincare polynomial by two routes", criterion3},
      {"operator system annihilates the volume", criterion4},
      {"operator system determines the volume", criterion5},
      {"annihilator generated by the operators", criterion6},
      {"partition function against brute force", criterion7},
      {"Kostant sum against convolution", criterion8},
      {"reduction and asymptotic probe", criterion9},
      {"Poincare duality of every volume", criterion10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ["
              << o.detail << "] (" << secs << "s)" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
