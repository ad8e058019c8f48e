#pragma once

#include <map>
#include <vector>

#include "flowvol/rootsys.hpp"

namespace flowvol {

// μ-weight space of V_{λ_1} ⊗ ... ⊗ V_{λ_n} for SU(l+1).
struct MultiplicityQuery {
  std::vector<Weight> lambdas;
  Weight mu;

  int rank() const { return mu.rank(); }
  int factors() const { return static_cast<int>(lambdas.size()); }
  Weight lambda_sum() const;
  // Nonempty, common rank, every λ_i integral dominant, μ integral.
  void validate() const;
};

// One summand of the alternating Kostant sum.
struct KostantTerm {
  std::vector<int> elements;  // indices into WeylElement::all(l)
  int sign = 1;
  Weight argument;            // Σ σ_i(λ_i+ρ) - (μ + nρ)
  Integer count;              // p_{l,n}(argument), zero off the lattice or outside the cone
};

// Every term of the sum over W^n, in odometer order (identity tuple first).
std::vector<KostantTerm> kostant_terms(const MultiplicityQuery& q, RhoConvention convention = RhoConvention::standard);

// Alternating sum Σ Π ε(σ_i) p_{l,n}(...). With the standard ρ a negative sum
// is a logic_error; the half_simple_roots convention returns the raw sum.
Integer tensor_weight_multiplicity(const MultiplicityQuery& q,
                                   RhoConvention convention = RhoConvention::standard);

// All weight multiplicities of the irreducible V_λ (λ integral dominant),
// each from the single-factor Kostant formula.
std::map<Weight, Integer> weight_multiplicities(const Weight& lambda);

// Weight multiplicities of V_{λ_1} ⊗ ... ⊗ V_{λ_n} by convolving the
// single-factor characters.
std::map<Weight, Integer> tensor_character(const std::vector<Weight>& lambdas);

// Independent route to tensor_weight_multiplicity.
Integer convolution_oracle(const MultiplicityQuery& q);

// Requires sufficiently_close(λs, μ). True iff the multiplicity equals
// p_{l,n}(λ - μ).
bool sufficiently_close_reduction_check(const MultiplicityQuery& q);

// k -> [V_{kλ_1} ⊗ ... ; W_{kμ}] / k^d for k = 1..kmax, d = n l(l+1)/2 - l.
std::vector<Rational> asymptotic_volume_probe(const MultiplicityQuery& q, int kmax);

}  // namespace flowvol
