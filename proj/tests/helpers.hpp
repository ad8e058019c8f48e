#pragma once

#include <string>
#include <vector>

#include "flowvol/flowpoly.hpp"
#include "flowvol/rootsys.hpp"

namespace flowvol::testing {

inline Rational Q(const char* text) { return parse_rational(text); }

inline Weight alpha(std::vector<Rational> coords) { return Weight(std::move(coords)); }

inline Weight fundamental(std::vector<Rational> coords) {
  const int l = static_cast<int>(coords.size());
  return fundamental_to_alpha(l, coords);
}

inline Polynomial poly(const std::string& text, int nvars) { return parse_polynomial(text, nvars); }

// (1/12) q1^3 (2 q2 - q1), the l=2, n=2 nice-chamber volume.
inline Polynomial example_volume() { return poly("-1/12 q1^4 + 1/6 q1^3 q2", 2); }

}  // namespace flowvol::testing
