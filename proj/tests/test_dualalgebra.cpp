#include <doctest.h>

#include "flowvol/dualalgebra.hpp"
#include "helpers.hpp"

using namespace flowvol;
using flowvol::testing::example_volume;
using flowvol::testing::poly;
using flowvol::testing::Q;

namespace {

MultiplicityMatrix lex(int l, std::vector<int> values) { return MultiplicityMatrix::from_lex(l, values); }

// Exponent over (p1_1, p1_2, p2_1, p2_2, x1, x2) = (p, q, r, s, x, y).
Exponent pqrsxy(int p, int q, int r, int s, int x, int y) { return {p, q, r, s, x, y}; }

}  // namespace

TEST_CASE("annihilator examples") {
  auto ann2 = annihilator_degree(example_volume(), 2);
  REQUIRE(ann2.size() == 1);
  CHECK(ann2[0] == DiffOperator(poly("q2^2", 2)));
  auto lin = annihilator_degree(poly("q1", 2), 1);
  REQUIRE(lin.size() == 1);
  CHECK(lin[0] == DiffOperator::partial(2, 1));
  CHECK(annihilator_degree(example_volume(), 0).empty());
  CHECK(annihilator_degree(example_volume(), 5).size() == 6);
  for (int k = 0; k <= 5; ++k)
    for (const auto& op : annihilator_degree(example_volume(), k)) CHECK(op.apply(example_volume()).is_zero());
}

TEST_CASE("betti numbers") {
  CHECK(betti_numbers(example_volume()) == std::vector<int>{1, 2, 2, 2, 1});
  CHECK(poincare_polynomial({1, 2, 2, 2, 1}) == "1+2t^2+2t^4+2t^6+t^8");
  CHECK(poincare_polynomial({1}) == "1");
  for (int n = 1; n <= 5; ++n) {
    Polynomial v = Polynomial::monomial({n - 1}, ratio(1, factorial(n - 1)));
    CHECK(betti_numbers(v) == std::vector<int>(n, 1));
  }
  CHECK(betti_numbers(poly("q1", 2)) == std::vector<int>{1, 1});
  CHECK_THROWS_AS(betti_numbers(poly("q1 + q2^2", 2)), ValidationError);
  CHECK_THROWS_AS(betti_numbers(Polynomial(2)), ValidationError);
}

TEST_CASE("intersection pairings") {
  MergedCoordinateMap map(2, 2);
  CHECK(map.names() == std::vector<std::string>{"p1_1", "p1_2", "p2_1", "p2_2", "x1", "x2"});
  Polynomial raw = map.pullback(example_volume());
  CHECK(intersection_pairing(raw, pqrsxy(4, 0, 0, 0, 0, 0)) == -2);
  CHECK(intersection_pairing(raw, pqrsxy(3, 1, 0, 0, 0, 0)) == 1);
  CHECK(intersection_pairing(raw, pqrsxy(3, 0, 0, 0, 1, 0)) == 2);
  CHECK_THROWS_AS(intersection_pairing(raw, pqrsxy(3, 0, 0, 0, 0, 0)), ValidationError);
  CHECK(verify_variable_merge(2, 2, raw));
  Polynomial pq = parse_polynomial("p1_1 p1_2", map.names());
  CHECK_FALSE(verify_variable_merge(2, 2, pq));
}

TEST_CASE("property: pairings follow the chain rule signs") {
  MergedCoordinateMap map(2, 2);
  Polynomial v = example_volume();
  Polynomial raw = map.pullback(v);
  for (const auto& a : monomials_of_degree(2, 4)) {
    Rational pure = v.derivative(0, a[0]).derivative(1, a[1]).terms().empty()
                        ? Rational(0)
                        : v.derivative(0, a[0]).derivative(1, a[1]).coefficient({0, 0});
    Exponent on_p(6, 0), on_x(6, 0), mixed(6, 0);
    on_p[map.p_index(1, 1)] = a[0];
    on_p[map.p_index(1, 2)] = a[1];
    on_x[map.x_index(1)] = a[0];
    on_x[map.x_index(2)] = a[1];
    mixed[map.p_index(2, 1)] = a[0];
    mixed[map.x_index(2)] = a[1];
    CHECK(intersection_pairing(raw, on_p) == pure);
    CHECK(intersection_pairing(raw, on_x) == pure);  // four sign flips
    CHECK(intersection_pairing(raw, mixed) == (a[1] % 2 ? -pure : pure));
  }
}

TEST_CASE("operator system examples") {
  CHECK(verify_nst_system(MultiplicityMatrix::uniform(2, 2), example_volume()));
  CHECK(verify_nst_system(MultiplicityMatrix::uniform(2, 1), poly("q1", 2)));
  CHECK_FALSE(verify_nst_system(MultiplicityMatrix::uniform(2, 1), poly("q1^2", 2)));
  auto ops = nst_operators(MultiplicityMatrix::uniform(2, 2));
  REQUIRE(ops.size() == 2);
  CHECK(ops[0] == DiffOperator(poly("q2^2", 2)));
  CHECK(ops[1] == DiffOperator(poly("q1^2", 2) * poly("q1 + q2", 2).pow(2)));
}

TEST_CASE("solving the operator system") {
  auto sol = solve_nice_volume_detailed(MultiplicityMatrix::uniform(2, 2));
  CHECK(sol.kernel_dimension == 1);
  CHECK(sol.volume == example_volume());
  CHECK(solve_nice_volume(MultiplicityMatrix::uniform(2, 1)) == poly("q1", 2));
  for (int n = 1; n <= 5; ++n)
    CHECK(solve_nice_volume(MultiplicityMatrix::uniform(1, n)) ==
          Polynomial::monomial({n - 1}, ratio(1, factorial(n - 1))));
}

TEST_CASE("property: solutions agree with the chamber polynomial") {
  std::vector<MultiplicityMatrix> cases{lex(2, {1, 2, 1}), lex(2, {2, 1, 3}), lex(2, {3, 1, 1}),
                                        lex(3, {1, 2, 1, 1, 2, 1}), lex(3, {2, 1, 1, 1, 1, 2})};
  for (const auto& m : cases) {
    Polynomial v = chamber_volume_polynomial(m);
    CHECK(verify_nst_system(m, v));
    auto sol = solve_nice_volume_detailed(m);
    CHECK(sol.kernel_dimension == 1);
    CHECK(sol.volume == v);
  }
}

TEST_CASE("generation check examples") {
  auto report = verify_generation(MultiplicityMatrix::uniform(2, 2), example_volume());
  CHECK(report.holds());
  CHECK(report.operators_annihilate);
  CHECK(report.witness_coefficient == Q("1/6"));
  REQUIRE(report.degrees.size() >= 5);
  CHECK(report.degrees[2].ann_dim == 1);
  for (const auto& d : report.degrees) CHECK(d.ann_dim == d.ideal_dim);

  CHECK(verify_generation(MultiplicityMatrix::uniform(2, 1), poly("q1", 2)).holds());
  for (int n = 1; n <= 4; ++n) {
    auto m = MultiplicityMatrix::uniform(1, n);
    CHECK(verify_generation(m, chamber_volume_polynomial(m)).holds());
  }
}

TEST_CASE("generation check reports a wrong polynomial") {
  // q1^4 is killed by more operators than the ideal provides.
  auto report = verify_generation(MultiplicityMatrix::uniform(2, 2), poly("q1^4", 2));
  CHECK_FALSE(report.holds());
  CHECK_FALSE(report.failure_summary().empty());
}

TEST_CASE("property: duality for operator-system volumes") {
  for (int l = 1; l <= 3; ++l)
    for (int n = 1; n <= 2; ++n) {
      Polynomial v = chamber_volume_polynomial(MultiplicityMatrix::uniform(l, n));
      auto betti = betti_numbers(v);
      const int d = v.degree();
      CHECK(betti.front() == 1);
      for (int k = 0; k <= d; ++k) {
        CHECK(betti[k] == betti[d - k]);
        CHECK(rank(pairing_matrix(v, k)) == betti[k]);
      }
      auto report = dual_algebra_report(v);
      CHECK(report.formal_dimension == 2 * d);
      CHECK(report.betti == betti);
    }
}
