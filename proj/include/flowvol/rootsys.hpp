#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flowvol/rational.hpp"

namespace flowvol {

// Element of the weight space of A_l, stored by its coordinates in the simple
// root basis α_1..α_l.
class Weight {
 public:
  explicit Weight(std::vector<Rational> alpha);

  static Weight zero(int rank);
  // α_i with a 1-based index.
  static Weight simple_root(int rank, int i);
  // e-coordinates must have length rank+1 and sum to zero.
  static Weight from_e_coords(std::span<const Rational> e);

  int rank() const { return static_cast<int>(alpha_.size()); }
  const std::vector<Rational>& alpha() const { return alpha_; }
  const Rational& operator[](int i) const { return alpha_[i]; }

  // Length rank+1, entries sum to zero: coordinate k is q_k - q_{k-1}.
  std::vector<Rational> e_coords() const;
  // Coordinates in the fundamental weight basis (Cartan matrix times alpha).
  std::vector<Rational> fundamental_coords() const;

  // Integer α-coordinates (root lattice).
  bool in_root_lattice() const;
  // Integer fundamental coordinates (weight lattice).
  bool is_integral() const;
  // Nonnegative fundamental coordinates.
  bool is_dominant() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight& operator*=(const Rational& c);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(Weight a, const Rational& c) { return a *= c; }
  friend Weight operator*(const Rational& c, Weight a) { return a *= c; }
  friend bool operator==(const Weight& a, const Weight& b) { return a.alpha_ == b.alpha_; }
  friend bool operator<(const Weight& a, const Weight& b) { return a.alpha_ < b.alpha_; }

 private:
  void check_rank(const Weight& o) const;
  std::vector<Rational> alpha_;
};

enum class Basis { alpha, fundamental };

// Σ coeffs_j Λ_j in α-coordinates, via the inverse Cartan matrix
// (C^{-1})_{ij} = min(i,j) - ij/(l+1).
Weight fundamental_to_alpha(int rank, std::span<const Rational> coeffs);

enum class RhoConvention {
  // Half-sum of positive roots, Σ Λ_j. Required by the Kostant multiplicity
  // formula.
  standard,
  // ½ Σ α_i; agrees with the standard choice only for rank 1.
  half_simple_roots,
};

Weight standard_rho(int rank, RhoConvention convention = RhoConvention::standard);

// Permutation of {1..l+1} acting on e-coordinates, with its signature.
class WeylElement {
 public:
  // perm is 0-based: perm[k] is the image of k.
  explicit WeylElement(std::vector<int> perm);

  static WeylElement identity(int rank);
  // s_i swaps i and i+1 (1-based), i.e. the reflection in α_i.
  static WeylElement simple_reflection(int rank, int i);
  // All (l+1)! elements; the identity comes first.
  static std::vector<WeylElement> all(int rank);

  int rank() const { return static_cast<int>(perm_.size()) - 1; }
  const std::vector<int>& perm() const { return perm_; }
  int sign() const { return sign_; }
  bool is_identity() const;

  // (a ∘ b)(k) = a(b(k)).
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.perm_ == b.perm_; }

 private:
  std::vector<int> perm_;
  int sign_;
};

// Moves e-coordinate k to position w(k).
Weight weyl_act(const WeylElement& w, const Weight& x);

// All α-coordinates >= 0.
bool in_positive_cone(const Weight& x);
// q_l > q_{l-1} > ... > q_1 > 0.
bool in_nice_chamber(const Weight& x);

// True iff among all (σ_1..σ_n) ∈ W^n the only one with
// Σ σ_i(λ_i+ρ) - (μ + nρ) in the positive cone is the identity tuple.
bool sufficiently_close(std::span<const Weight> lambdas, const Weight& mu,
                        RhoConvention convention = RhoConvention::standard);

std::string to_string(const Weight& w);
// Comma separated rationals interpreted in the given basis.
Weight parse_weight(std::string_view text, Basis basis);

}  // namespace flowvol
