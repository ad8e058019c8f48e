#include "flowvol/graded.hpp"

#include <map>

namespace flowvol {

std::vector<Rational> coefficient_row(const Polynomial& p, const std::vector<Exponent>& monomials) {
  std::vector<Rational> row;
  row.reserve(monomials.size());
  for (const auto& e : monomials) row.push_back(p.coefficient(e));
  return row;
}

RationalMatrix ideal_slice(const std::vector<Polynomial>& generators, int nvars, int k) {
  const auto monomials = monomials_of_degree(nvars, k);
  RationalMatrix m(0, static_cast<int>(monomials.size()));
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw ValidationError("ideal generators must be homogeneous");
    const int shift = k - g.degree();
    if (shift < 0) continue;
    for (const auto& e : monomials_of_degree(nvars, shift))
      m.append_row(coefficient_row(g * Polynomial::monomial(e, 1), monomials));
  }
  return m;
}

int ideal_slice_rank(const std::vector<Polynomial>& generators, int nvars, int k) {
  RationalMatrix m = ideal_slice(generators, nvars, k);
  return m.rows() == 0 ? 0 : rank(m);
}

}  // namespace flowvol
