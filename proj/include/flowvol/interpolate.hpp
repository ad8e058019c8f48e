#pragma once

#include <vector>

#include "flowvol/polynomial.hpp"

namespace flowvol {

struct Sample {
  std::vector<Rational> point;
  Rational value;
};

// Number of monomials of the given degree in nvars variables.
long homogeneous_dimension(int nvars, int degree);

// The unique homogeneous polynomial of `degree` through the samples.
// Throws ValidationError when there are too few samples, duplicated points,
// the system is rank deficient (more points needed) or a surplus sample
// disagrees (wrong degree, or the samples straddle a chamber wall).
Polynomial interpolate_homogeneous(int nvars, int degree, const std::vector<Sample>& samples);

}  // namespace flowvol
