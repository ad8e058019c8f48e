#include <doctest.h>

#include <numeric>

#include "flowvol/cohomring.hpp"
#include "flowvol/dualalgebra.hpp"
#include "flowvol/flowpoly.hpp"

using namespace flowvol;

namespace {

Polynomial z(const std::string& text, int nvars) { return parse_polynomial(text, nvars, "z"); }

}  // namespace

TEST_CASE("presentation ideal examples") {
  auto i22 = presentation_ideal(2, 2);
  REQUIRE(i22.generators.size() == 2);
  CHECK(i22.generators[0] == z("z2^2", 2));
  CHECK(i22.generators[1] == z("z1^2", 2) * z("z1 + z2", 2).pow(2));
  CHECK(i22.factored == std::vector<std::string>{"z2^2", "z1^2*(z1+z2)^2"});
  CHECK(i22.socle_degree() == 4);

  auto i13 = presentation_ideal(1, 3);
  REQUIRE(i13.generators.size() == 1);
  CHECK(i13.generators[0] == z("z1^3", 1));

  auto i21 = presentation_ideal(2, 1);
  CHECK(i21.generators[0] == z("z2", 2));
  CHECK(i21.generators[1] == z("z1^2 + z1 z2", 2));
  CHECK(i21.factored == std::vector<std::string>{"z2", "z1*(z1+z2)"});
  CHECK_THROWS_AS(presentation_ideal(0, 1), ValidationError);
}

TEST_CASE("hilbert function examples") {
  CHECK(hilbert_function(presentation_ideal(2, 2)) == std::vector<int>{1, 2, 2, 2, 1});
  for (int n = 1; n <= 5; ++n) CHECK(hilbert_function(presentation_ideal(1, n)) == std::vector<int>(n, 1));
  CHECK(hilbert_function(presentation_ideal(2, 1)) == std::vector<int>{1, 1});
}

TEST_CASE("cross validation examples") {
  auto a = cross_validate(2, 2);
  CHECK(a.passed());
  CHECK(a.hilbert == std::vector<int>{1, 2, 2, 2, 1});
  auto b = cross_validate(2, 1);
  CHECK(b.passed());
  CHECK(b.hilbert == std::vector<int>{1, 1});
  auto c = cross_validate(1, 4);
  CHECK(c.passed());
  CHECK(c.hilbert == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("property: hilbert functions are symmetric and match the dual algebra") {
  for (int l = 1; l <= 3; ++l)
    for (int n = 1; n <= 3; ++n) {
      auto ideal = presentation_ideal(l, n);
      auto h = hilbert_function(ideal);
      const int top = n * l * (l + 1) / 2 - l;
      CHECK(ideal.socle_degree() == top);
      REQUIRE(static_cast<int>(h.size()) == top + 1);
      CHECK(h.front() == 1);
      if (n >= 2 && top >= 1) CHECK(h[1] == l);
      for (int k = 0; k <= top; ++k) CHECK(h[k] == h[top - k]);
      auto cv = cross_validate(l, n);
      CHECK(cv.passed());
      CHECK(std::accumulate(cv.hilbert.begin(), cv.hilbert.end(), 0) ==
            std::accumulate(cv.betti.begin(), cv.betti.end(), 0));
    }
}

TEST_CASE("generator degrees") {
  for (int l = 1; l <= 4; ++l)
    for (int n = 1; n <= 3; ++n) {
      auto ideal = presentation_ideal(l, n);
      REQUIRE(static_cast<int>(ideal.generators.size()) == l);
      // Listed for i = l down to 1; generator i has degree n(l-i+1).
      for (int idx = 0; idx < l; ++idx) {
        const int i = l - idx;
        CHECK(ideal.generators[idx].is_homogeneous());
        CHECK(ideal.generators[idx].degree() == n * (l - i + 1));
      }
    }
}

TEST_CASE("relations fail on a wrong polynomial") {
  // z2^2 does not kill q2^4, so the relations cannot hold for it.
  auto ideal = presentation_ideal(2, 2);
  Polynomial wrong = parse_polynomial("q2^4", 2);
  bool all_zero = true;
  for (const auto& g : ideal.generators) all_zero = all_zero && DiffOperator(g).apply(wrong).is_zero();
  CHECK_FALSE(all_zero);
}
