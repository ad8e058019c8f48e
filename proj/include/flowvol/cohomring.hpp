#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flowvol/polynomial.hpp"

namespace flowvol {

// Relations z_i^n (z_i+z_{i+1})^n ... (z_i+...+z_l)^n of the presentation
// ring, listed for i = l down to 1.
struct PresentationIdeal {
  int rank = 0;
  int factors = 0;
  std::vector<Polynomial> generators;  // expanded, in z_1..z_l
  std::vector<std::string> factored;   // e.g. "z1^2*(z1+z2)^2"

  // Σ_i n(l-i+1) - l: the top degree of the quotient.
  int socle_degree() const;
};

PresentationIdeal presentation_ideal(int rank, int factors);

// h_k = dim of the degree-k part of Q[z]/I for k = 0, 1, ... up to the last
// nonzero degree. Throws logic_error if the quotient does not become zero
// right after the socle degree.
std::vector<int> hilbert_function(const PresentationIdeal& ideal);

struct CrossValidation {
  bool relations_annihilate = false;
  bool hilbert_matches = false;
  std::vector<int> hilbert;
  std::vector<int> betti;
  std::optional<int> offending_degree;

  bool passed() const { return relations_annihilate && hilbert_matches; }
};

// Reads z_j as ∂/∂q_j and compares the presentation ring with D/Ann(v) for
// the nice-chamber volume v of P_{l,n}.
CrossValidation cross_validate(int rank, int factors);

}  // namespace flowvol
