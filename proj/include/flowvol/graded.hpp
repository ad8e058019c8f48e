#pragma once

#include <vector>

#include "flowvol/linalg.hpp"
#include "flowvol/polynomial.hpp"

namespace flowvol {

// Coefficient row of a homogeneous polynomial against monomials_of_degree.
std::vector<Rational> coefficient_row(const Polynomial& p, const std::vector<Exponent>& monomials);

// Spanning set of the degree-k slice of the ideal generated by homogeneous
// `generators`: one row per (generator, monomial of complementary degree).
RationalMatrix ideal_slice(const std::vector<Polynomial>& generators, int nvars, int k);

int ideal_slice_rank(const std::vector<Polynomial>& generators, int nvars, int k);

}  // namespace flowvol
