#pragma once

#include <string>
#include <vector>

#include "flowvol/flowpoly.hpp"
#include "flowvol/linalg.hpp"
#include "flowvol/polynomial.hpp"

namespace flowvol {

// Basis of Ann(v) in operator degree k: constant-coefficient operators D of
// degree k with D v = 0. For k > deg v this is every monomial operator.
std::vector<DiffOperator> annihilator_degree(const Polynomial& v, int k);

// [∂^{a+b} v] for |a| = k, |b| = deg v - k, monomials in grlex order.
RationalMatrix pairing_matrix(const Polynomial& v, int k);

// b_{2k} for k = 0..deg v (odd Betti numbers vanish and are not listed).
// Computed twice, from dim Ann(v)_k and from the pairing rank; a mismatch is
// a logic_error.
std::vector<int> betti_numbers(const Polynomial& v);

// "1+2t^2+2t^4+2t^6+t^8"
std::string poincare_polynomial(const std::vector<int>& betti);

struct GradedAlgebraReport {
  int formal_dimension = 0;  // 2d
  std::vector<int> betti;    // b_0, b_2, ..., b_{2d}
  std::vector<std::vector<DiffOperator>> annihilator_bases;  // operator degree 0..d
  std::vector<RationalMatrix> pairing_tables;                // degree k against d-k
};

GradedAlgebraReport dual_algebra_report(const Polynomial& v);

// Raw coordinates (p_{i,j}, x_j), 1 <= i <= n, 1 <= j <= l, ordered
// p_{1,1..l}, ..., p_{n,1..l}, x_1..x_l, merged into q_j = Σ_i p_{i,j} - x_j.
class MergedCoordinateMap {
 public:
  MergedCoordinateMap(int rank, int factors);

  int rank() const { return rank_; }
  int factors() const { return factors_; }
  int raw_variables() const { return factors_ * rank_ + rank_; }
  // 0-based variable indices; i and j are 1-based.
  int p_index(int i, int j) const;
  int x_index(int j) const;
  // "p1_1", ..., "x1", ...
  std::vector<std::string> names() const;

  // v(q) rewritten in the raw variables.
  Polynomial pullback(const Polynomial& v) const;

 private:
  int rank_;
  int factors_;
};

// The mixed partial ∂^exponents v_raw. The total exponent must equal
// deg v_raw so that the result is a constant.
Rational intersection_pairing(const Polynomial& v_raw, const Exponent& exponents);

// ∂_i^{m_{i,i+1}} (∂_i+∂_{i+1})^{m_{i,i+2}} ... (∂_i+...+∂_l)^{m_{i,l+1}},
// listed for i = l down to 1.
std::vector<DiffOperator> nst_operators(const MultiplicityMatrix& mult);

// Every operator of nst_operators annihilates v.
bool verify_nst_system(const MultiplicityMatrix& mult, const Polynomial& v);

struct NiceSolution {
  Polynomial volume;
  int kernel_dimension = 0;
};

// Solves the operator system for homogeneous polynomials of degree M - l and
// normalizes the unique solution by one Ehrhart volume. A solution space of
// dimension other than one raises FalsificationError.
NiceSolution solve_nice_volume_detailed(const MultiplicityMatrix& mult);
Polynomial solve_nice_volume(const MultiplicityMatrix& mult);

struct GenerationDegree {
  int degree = 0;
  int ann_dim = 0;
  int ideal_dim = 0;
  std::vector<DiffOperator> missing;  // annihilators outside the generated ideal
};

struct GenerationReport {
  std::vector<GenerationDegree> degrees;  // 0..M-l+1
  bool operators_annihilate = false;
  Rational witness_coefficient;           // coefficient of q_1^{M_1-1}...q_l^{M_l-1}
  bool holds() const;
  std::string failure_summary() const;
};

// Compares Ann(v) with the ideal generated by nst_operators, degree by degree.
GenerationReport verify_generation(const MultiplicityMatrix& mult, const Polynomial& v);

// raw_volume (in the MergedCoordinateMap variables) depends on the raw
// variables only through q_1..q_l.
bool verify_variable_merge(int rank, int factors, const Polynomial& raw_volume);

}  // namespace flowvol
