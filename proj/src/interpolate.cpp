#include "flowvol/interpolate.hpp"

#include <algorithm>
#include <set>

#include "flowvol/linalg.hpp"

namespace flowvol {

long homogeneous_dimension(int nvars, int degree) {
  if (degree < 0) return 0;
  return binomial(degree + nvars - 1, nvars - 1).get_si();
}

Polynomial interpolate_homogeneous(int nvars, int degree, const std::vector<Sample>& samples) {
  if (nvars < 1 || degree < 0) throw ValidationError("interpolation needs nvars >= 1 and degree >= 0");
  const auto monomials = monomials_of_degree(nvars, degree);
  const int unknowns = static_cast<int>(monomials.size());
  if (static_cast<int>(samples.size()) < unknowns)
    throw ValidationError("need at least " + std::to_string(unknowns) + " samples for degree " +
                          std::to_string(degree) + " in " + std::to_string(nvars) + " variables, got " +
                          std::to_string(samples.size()));

  std::set<std::vector<Rational>> seen;
  for (const auto& s : samples) {
    if (static_cast<int>(s.point.size()) != nvars) throw ValidationError("sample point has wrong dimension");
    if (!seen.insert(s.point).second) throw ValidationError("duplicate sample point");
  }

  // Augmented system [A | b]; a pivot in the last column means the surplus
  // samples are inconsistent with every degree-d homogeneous polynomial.
  RationalMatrix system(static_cast<int>(samples.size()), unknowns + 1);
  for (std::size_t r = 0; r < samples.size(); ++r) {
    for (int c = 0; c < unknowns; ++c) {
      Rational t = 1;
      for (int i = 0; i < nvars; ++i)
        for (int k = 0; k < monomials[c][i]; ++k) t *= samples[r].point[i];
      system(static_cast<int>(r), c) = t;
    }
    system(static_cast<int>(r), unknowns) = samples[r].value;
  }
  Echelon e = bareiss_echelon(system);
  bool inconsistent = !e.pivots.empty() && e.pivots.back() == unknowns;
  int coeff_rank = e.rank() - (inconsistent ? 1 : 0);
  if (coeff_rank < unknowns)
    throw ValidationError("interpolation system has rank " + std::to_string(coeff_rank) + " < " +
                          std::to_string(unknowns) + "; supply more sample points in general position");
  if (inconsistent)
    throw ValidationError("surplus samples are inconsistent with a homogeneous polynomial of degree " +
                          std::to_string(degree) + " (wrong degree, or samples straddle a wall)");

  std::vector<Rational> x(unknowns);
  for (int r = unknowns - 1; r >= 0; --r) {
    Rational s = Rational(e.rows[r][unknowns]);
    for (int c = r + 1; c < unknowns; ++c)
      if (e.rows[r][c] != 0) s -= Rational(e.rows[r][c]) * x[c];
    x[r] = s / Rational(e.rows[r][r]);
  }
  Polynomial out(nvars);
  for (int c = 0; c < unknowns; ++c) out.add_term(monomials[c], x[c]);
  return out;
}

}  // namespace flowvol
