#include "flowvol/cohomring.hpp"

#include <algorithm>
#include <stdexcept>

#include "flowvol/dualalgebra.hpp"
#include "flowvol/flowpoly.hpp"
#include "flowvol/graded.hpp"

namespace flowvol {

int PresentationIdeal::socle_degree() const { return factors * rank * (rank + 1) / 2 - rank; }

PresentationIdeal presentation_ideal(int rank, int factors) {
  if (rank < 1 || factors < 1) throw ValidationError("presentation needs l >= 1 and n >= 1");
  PresentationIdeal ideal;
  ideal.rank = rank;
  ideal.factors = factors;
  const std::string power = factors == 1 ? "" : "^" + std::to_string(factors);
  for (int i = rank; i >= 1; --i) {
    Polynomial g = Polynomial::constant(rank, 1);
    Polynomial partial(rank);
    std::string text;
    for (int j = i; j <= rank; ++j) {
      partial += Polynomial::variable(rank, j - 1);
      g *= partial.pow(static_cast<unsigned>(factors));
      if (!text.empty()) text += "*";
      if (j == i) {
        text += "z" + std::to_string(i) + power;
      } else {
        std::string sum;
        for (int t = i; t <= j; ++t) sum += (t == i ? "" : "+") + std::string("z") + std::to_string(t);
        text += "(" + sum + ")" + power;
      }
    }
    ideal.generators.push_back(std::move(g));
    ideal.factored.push_back(std::move(text));
  }
  return ideal;
}

std::vector<int> hilbert_function(const PresentationIdeal& ideal) {
  const int l = ideal.rank;
  const int socle = ideal.socle_degree();
  std::vector<int> h;
  for (int k = 0;; ++k) {
    const int monomials = static_cast<int>(monomials_of_degree(l, k).size());
    const int dim = monomials - ideal_slice_rank(ideal.generators, l, k);
    if (dim == 0) break;
    if (k > socle)
      throw std::logic_error("quotient is nonzero in degree " + std::to_string(k) + " beyond the socle degree " +
                             std::to_string(socle));
    h.push_back(dim);
  }
  return h;
}

CrossValidation cross_validate(int rank, int factors) {
  const auto mult = MultiplicityMatrix::uniform(rank, factors);
  const Polynomial v = chamber_volume_polynomial(mult);
  const auto ideal = presentation_ideal(rank, factors);

  CrossValidation out;
  out.relations_annihilate = true;
  for (const auto& g : ideal.generators)
    if (!DiffOperator(g).apply(v).is_zero()) out.relations_annihilate = false;

  out.hilbert = hilbert_function(ideal);
  out.betti = betti_numbers(v);
  out.hilbert_matches = out.hilbert == out.betti;
  if (!out.hilbert_matches) {
    const std::size_t n = std::max(out.hilbert.size(), out.betti.size());
    for (std::size_t k = 0; k < n; ++k) {
      int a = k < out.hilbert.size() ? out.hilbert[k] : 0;
      int b = k < out.betti.size() ? out.betti[k] : 0;
      if (a != b) {
        out.offending_degree = static_cast<int>(k);
        break;
      }
    }
  }
  return out;
}

}  // namespace flowvol
