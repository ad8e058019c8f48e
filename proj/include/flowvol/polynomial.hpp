#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flowvol/rational.hpp"

namespace flowvol {

using Exponent = std::vector<int>;

int total_degree(const Exponent& e);

// Graded lexicographic order, largest first: higher total degree first, ties
// broken lexicographically with variable 1 the most significant.
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

// All exponents of the given total degree in `nvars` variables, in
// GrlexGreater order.
std::vector<Exponent> monomials_of_degree(int nvars, int degree);

// Exact multivariate polynomial over Q. Terms with zero coefficient are never
// stored, so structural equality is mathematical equality.
class Polynomial {
 public:
  using TermMap = std::map<Exponent, Rational, GrlexGreater>;

  explicit Polynomial(int nvars = 1);

  static Polynomial constant(int nvars, const Rational& c);
  // x_index with a 0-based index.
  static Polynomial variable(int nvars, int index);
  static Polynomial monomial(Exponent e, const Rational& c);
  // Σ coeffs[i] x_i
  static Polynomial linear(std::span<const Rational> coeffs);

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  Rational coefficient(const Exponent& e) const;
  Polynomial homogeneous_part(int degree) const;

  void add_term(const Exponent& e, const Rational& c);

  Rational evaluate(std::span<const Rational> point) const;
  // Composition: every x_i is replaced by images[i]. All images must share a
  // variable count, which becomes the result's.
  Polynomial substitute(std::span<const Polynomial> images) const;
  Polynomial derivative(int var, int times = 1) const;
  Polynomial pow(unsigned k) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const Polynomial& o) const;

  int nvars_;
  TermMap terms_;
};

// {prefix}1 ... {prefix}n
std::vector<std::string> variable_names(std::string_view prefix, int n);

// Canonical text: "c x1^a x2^b" terms joined by " + " / " - " in grlex order,
// unit coefficients omitted, "0" for the zero polynomial.
std::string to_string(const Polynomial& p, const std::vector<std::string>& names);
std::string to_string(const Polynomial& p, std::string_view prefix = "q");

// Inverse of to_string. Also accepts '*' between factors and terms in any
// order. Throws ValidationError on unknown variables or malformed input.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names);
Polynomial parse_polynomial(std::string_view text, int nvars, std::string_view prefix = "q");

// Constant-coefficient differential operator, stored as its symbol: the
// polynomial obtained by reading ∂_i as the i-th variable.
class DiffOperator {
 public:
  explicit DiffOperator(Polynomial symbol) : symbol_(std::move(symbol)) {}

  static DiffOperator partial(int nvars, int index);

  const Polynomial& symbol() const { return symbol_; }
  int nvars() const { return symbol_.nvars(); }
  int degree() const { return symbol_.degree(); }

  Polynomial apply(const Polynomial& v) const;

  friend DiffOperator operator*(const DiffOperator& a, const DiffOperator& b) {
    return DiffOperator(a.symbol_ * b.symbol_);
  }
  friend DiffOperator operator+(const DiffOperator& a, const DiffOperator& b) {
    return DiffOperator(a.symbol_ + b.symbol_);
  }
  friend bool operator==(const DiffOperator& a, const DiffOperator& b) { return a.symbol_ == b.symbol_; }

 private:
  Polynomial symbol_;
};

// ∂^a applied to the monomial x^b: b!/(b-a)! x^(b-a), or zero.
Rational falling_factor(const Exponent& b, const Exponent& a);

std::string to_string(const DiffOperator& d, std::string_view prefix = "d");

}  // namespace flowvol
