#pragma once

#include <functional>
#include <optional>
#include <span>
#include <tuple>
#include <vector>

#include "flowvol/polynomial.hpp"
#include "flowvol/rootsys.hpp"

namespace flowvol {

// Edge multiplicities m_{i,j} >= 1 of the complete DAG on l+1 nodes.
class MultiplicityMatrix {
 public:
  static MultiplicityMatrix uniform(int rank, int n);
  // Values for (i,j) in lexicographic order (1,2),(1,3),...,(1,l+1),(2,3),...
  static MultiplicityMatrix from_lex(int rank, std::span<const int> values);

  int rank() const { return rank_; }
  // 1-based, i < j <= rank+1.
  int at(int i, int j) const;
  // M = Σ m_{i,j}
  int total() const { return total_; }
  // M_i = Σ_{j>i} m_{i,j}
  int row_tail(int i) const;
  // M - l, the dimension of the flow polytope for h in the open cone.
  int dimension() const { return total_ - rank_; }
  std::optional<int> uniform_value() const;
  // (i, j, m_{i,j}) in lexicographic order.
  std::vector<std::tuple<int, int, int>> entries() const;

  friend bool operator==(const MultiplicityMatrix&, const MultiplicityMatrix&) = default;

 private:
  MultiplicityMatrix(int rank, std::vector<int> values);
  int index(int i, int j) const;

  int rank_;
  std::vector<int> values_;
  int total_;
};

// Lattice point counts p_{l,m}(q) for every q in the box 0 <= q <= bound
// (α-coordinates), filled by a coin-change recursion with one coin per edge
// copy: each copy of the root e_i - e_j contributes α_i + ... + α_{j-1}.
class PartitionTable {
 public:
  PartitionTable(const MultiplicityMatrix& mult, std::vector<int> bound);

  const std::vector<int>& bound() const { return bound_; }
  bool contains(std::span<const int> q) const;
  const Integer& at(std::span<const int> q) const;

 private:
  std::size_t flat(std::span<const int> q) const;

  std::vector<int> bound_;
  std::vector<std::size_t> strides_;
  std::vector<Integer> counts_;
};

// |P_{l,m}(h) ∩ Z^M|. h must lie in the root lattice; outside the cone the
// answer is 0.
Integer partition_count(const MultiplicityMatrix& mult, const Weight& h);

// p_{l,m}(k h) for k = 0..kmax from a single table.
std::vector<Integer> ehrhart_counts(const MultiplicityMatrix& mult, const Weight& h, int kmax);

// Leading coefficient of k -> p_{l,m}(k h), fitted through k = 0..d and
// checked at k = d+1, d+2. h must be integral with all coordinates > 0.
Rational ehrhart_volume(const MultiplicityMatrix& mult, const Weight& h);

// Volume polynomial on the nice chamber, in q_1..q_l.
//
// The counting function is a polynomial of degree d = M - l on the closed
// chamber. It is recovered by Newton forward differences on the lattice
// simplex q = (a_1, a_1+a_2, ..., a_1+...+a_l), |a| <= d, checked against
// the counts on the layers |a| = d+1, d+2, and its top-degree part is
// returned. Two interior Ehrhart evaluations are then compared with the
// result. Throws FalsificationError when any check fails.
Polynomial chamber_volume_polynomial(const MultiplicityMatrix& mult);

// Volume polynomial on the chamber containing the caller's integral samples,
// interpolated from Ehrhart volumes. Needs at least two samples beyond the
// number of degree-d monomials; inconsistent samples (straddling a wall) or a
// rank-deficient set raise ValidationError.
Polynomial chamber_volume_polynomial(const MultiplicityMatrix& mult, std::span<const Weight> samples);

// Integral points inside `chamber`, taken slice by slice (q_l = 1, 2, ...),
// keeping points that raise the rank of the degree-`degree` monomial
// evaluation matrix until it is full, then `surplus` more.
std::vector<Weight> chamber_samples(int rank, int degree, const std::function<bool(const Weight&)>& chamber,
                                    int surplus = 2);

}  // namespace flowvol
