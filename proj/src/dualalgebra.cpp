#include "flowvol/dualalgebra.hpp"

#include <stdexcept>

#include "flowvol/graded.hpp"

namespace flowvol {

namespace {

void require_homogeneous(const Polynomial& v) {
  if (v.is_zero()) throw ValidationError("volume polynomial must be nonzero");
  if (!v.is_homogeneous()) throw ValidationError("volume polynomial must be homogeneous");
}

Integer exponent_factorial(const Exponent& e) {
  Integer f = 1;
  for (int x : e) f *= factorial(x);
  return f;
}

Exponent add(const Exponent& a, const Exponent& b) {
  Exponent c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

// Columns: operator monomials of degree k. Rows: monomials of degree d-k.
// Entry: coefficient of x^b in ∂^a v.
RationalMatrix action_matrix(const Polynomial& v, int k) {
  const int n = v.nvars();
  const int d = v.degree();
  const auto ops = monomials_of_degree(n, k);
  const auto out = monomials_of_degree(n, d - k);
  RationalMatrix m(static_cast<int>(out.size()), static_cast<int>(ops.size()));
  for (std::size_t c = 0; c < ops.size(); ++c)
    for (std::size_t r = 0; r < out.size(); ++r) {
      Exponent g = add(ops[c], out[r]);
      Rational coef = v.coefficient(g);
      if (coef != 0) m(static_cast<int>(r), static_cast<int>(c)) = coef * falling_factor(g, ops[c]);
    }
  return m;
}

}  // namespace

std::vector<DiffOperator> annihilator_degree(const Polynomial& v, int k) {
  require_homogeneous(v);
  if (k < 0) throw ValidationError("operator degree must be nonnegative");
  const int n = v.nvars();
  const auto ops = monomials_of_degree(n, k);
  std::vector<DiffOperator> basis;
  if (k > v.degree()) {
    for (const auto& e : ops) basis.emplace_back(Polynomial::monomial(e, 1));
    return basis;
  }
  for (const auto& x : kernel_basis(action_matrix(v, k))) {
    Polynomial sym(n);
    for (std::size_t c = 0; c < ops.size(); ++c) sym.add_term(ops[c], x[c]);
    basis.emplace_back(std::move(sym));
  }
  return basis;
}

RationalMatrix pairing_matrix(const Polynomial& v, int k) {
  require_homogeneous(v);
  const int d = v.degree();
  if (k < 0 || k > d) throw ValidationError("pairing degree out of range");
  const auto left = monomials_of_degree(v.nvars(), k);
  const auto right = monomials_of_degree(v.nvars(), d - k);
  RationalMatrix m(static_cast<int>(left.size()), static_cast<int>(right.size()));
  for (std::size_t r = 0; r < left.size(); ++r)
    for (std::size_t c = 0; c < right.size(); ++c) {
      Exponent g = add(left[r], right[c]);
      Rational coef = v.coefficient(g);
      if (coef != 0) m(static_cast<int>(r), static_cast<int>(c)) = coef * exponent_factorial(g);
    }
  return m;
}

std::vector<int> betti_numbers(const Polynomial& v) {
  require_homogeneous(v);
  const int d = v.degree();
  std::vector<int> betti;
  for (int k = 0; k <= d; ++k) {
    const int monomials = static_cast<int>(monomials_of_degree(v.nvars(), k).size());
    const int by_kernel = monomials - static_cast<int>(annihilator_degree(v, k).size());
    const int by_pairing = rank(pairing_matrix(v, k));
    if (by_kernel != by_pairing)
      throw std::logic_error("degree " + std::to_string(k) + ": monomials - dim Ann = " + std::to_string(by_kernel) +
                             " but pairing rank = " + std::to_string(by_pairing));
    betti.push_back(by_kernel);
  }
  return betti;
}

std::string poincare_polynomial(const std::vector<int>& betti) {
  std::string out;
  for (std::size_t k = 0; k < betti.size(); ++k) {
    if (betti[k] == 0) continue;
    if (!out.empty()) out += "+";
    if (k == 0) {
      out += std::to_string(betti[k]);
      continue;
    }
    if (betti[k] != 1) out += std::to_string(betti[k]);
    out += "t^" + std::to_string(2 * k);
  }
  return out.empty() ? "0" : out;
}

GradedAlgebraReport dual_algebra_report(const Polynomial& v) {
  GradedAlgebraReport report;
  report.formal_dimension = 2 * v.degree();
  report.betti = betti_numbers(v);
  for (int k = 0; k <= v.degree(); ++k) {
    report.annihilator_bases.push_back(annihilator_degree(v, k));
    report.pairing_tables.push_back(pairing_matrix(v, k));
  }
  return report;
}

MergedCoordinateMap::MergedCoordinateMap(int rank, int factors) : rank_(rank), factors_(factors) {
  if (rank < 1 || factors < 1) throw ValidationError("merged coordinates need rank >= 1 and n >= 1");
}

int MergedCoordinateMap::p_index(int i, int j) const {
  if (i < 1 || i > factors_ || j < 1 || j > rank_) throw ValidationError("p index out of range");
  return (i - 1) * rank_ + (j - 1);
}

int MergedCoordinateMap::x_index(int j) const {
  if (j < 1 || j > rank_) throw ValidationError("x index out of range");
  return factors_ * rank_ + (j - 1);
}

std::vector<std::string> MergedCoordinateMap::names() const {
  std::vector<std::string> out;
  for (int i = 1; i <= factors_; ++i)
    for (int j = 1; j <= rank_; ++j) out.push_back("p" + std::to_string(i) + "_" + std::to_string(j));
  for (int j = 1; j <= rank_; ++j) out.push_back("x" + std::to_string(j));
  return out;
}

Polynomial MergedCoordinateMap::pullback(const Polynomial& v) const {
  if (v.nvars() != rank_) throw ValidationError("expected a polynomial in q_1..q_l");
  std::vector<Polynomial> images;
  for (int j = 1; j <= rank_; ++j) {
    Polynomial q(raw_variables());
    for (int i = 1; i <= factors_; ++i) q += Polynomial::variable(raw_variables(), p_index(i, j));
    q -= Polynomial::variable(raw_variables(), x_index(j));
    images.push_back(std::move(q));
  }
  return v.substitute(images);
}

Rational intersection_pairing(const Polynomial& v_raw, const Exponent& exponents) {
  if (static_cast<int>(exponents.size()) != v_raw.nvars())
    throw ValidationError("need one exponent per raw variable (" + std::to_string(v_raw.nvars()) + ")");
  for (int e : exponents)
    if (e < 0) throw ValidationError("exponents must be nonnegative");
  if (total_degree(exponents) != v_raw.degree())
    throw ValidationError("total exponent " + std::to_string(total_degree(exponents)) +
                          " must equal the volume degree " + std::to_string(v_raw.degree()));
  Polynomial r = DiffOperator(Polynomial::monomial(exponents, 1)).apply(v_raw);
  if (r.degree() > 0) throw ValidationError("volume polynomial is not homogeneous");
  return r.coefficient(Exponent(v_raw.nvars(), 0));
}

std::vector<DiffOperator> nst_operators(const MultiplicityMatrix& mult) {
  const int l = mult.rank();
  std::vector<DiffOperator> ops;
  for (int i = l; i >= 1; --i) {
    Polynomial op = Polynomial::constant(l, 1);
    Polynomial partial_sum(l);
    for (int j = i + 1; j <= l + 1; ++j) {
      partial_sum += Polynomial::variable(l, j - 2);
      op *= partial_sum.pow(static_cast<unsigned>(mult.at(i, j)));
    }
    ops.emplace_back(std::move(op));
  }
  return ops;
}

bool verify_nst_system(const MultiplicityMatrix& mult, const Polynomial& v) {
  if (v.nvars() != mult.rank()) throw ValidationError("volume polynomial has the wrong number of variables");
  for (const auto& op : nst_operators(mult))
    if (!op.apply(v).is_zero()) return false;
  return true;
}

NiceSolution solve_nice_volume_detailed(const MultiplicityMatrix& mult) {
  const int l = mult.rank();
  const int d = mult.dimension();
  const auto unknowns = monomials_of_degree(l, d);
  const auto ops = nst_operators(mult);

  RationalMatrix system(0, static_cast<int>(unknowns.size()));
  std::vector<Polynomial> images;
  for (const auto& op : ops) {
    images.clear();
    for (const auto& e : unknowns) images.push_back(op.apply(Polynomial::monomial(e, 1)));
    for (const auto& target : monomials_of_degree(l, d - op.degree())) {
      std::vector<Rational> row;
      row.reserve(unknowns.size());
      bool nonzero = false;
      for (const auto& img : images) {
        row.push_back(img.coefficient(target));
        nonzero = nonzero || row.back() != 0;
      }
      if (nonzero) system.append_row(row);
    }
  }
  auto kernel = system.rows() == 0 ? std::vector<std::vector<Rational>>{} : kernel_basis(system);
  if (system.rows() == 0)
    for (std::size_t c = 0; c < unknowns.size(); ++c) {
      std::vector<Rational> e(unknowns.size());
      e[c] = 1;
      kernel.push_back(e);
    }
  if (kernel.size() != 1)
    throw FalsificationError("degree-" + std::to_string(d) + " solutions of the nice-chamber operator system form a " +
                             std::to_string(kernel.size()) + "-dimensional space, expected 1");

  Polynomial generator(l);
  for (std::size_t c = 0; c < unknowns.size(); ++c) generator.add_term(unknowns[c], kernel[0][c]);

  std::vector<Rational> point(l);
  for (int t = 0; t < l; ++t) point[t] = t + 1;
  for (int bump = 0; bump < 8; ++bump, point[l - 1] += 1) {
    Rational g = generator.evaluate(point);
    if (g == 0) continue;
    Rational vol = ehrhart_volume(mult, Weight(point));
    return {generator * (vol / g), 1};
  }
  throw FalsificationError("operator-system solution vanishes at every probe point in the nice chamber");
}

Polynomial solve_nice_volume(const MultiplicityMatrix& mult) { return solve_nice_volume_detailed(mult).volume; }

bool GenerationReport::holds() const {
  if (!operators_annihilate || witness_coefficient == 0) return false;
  for (const auto& d : degrees)
    if (d.ann_dim != d.ideal_dim) return false;
  return true;
}

std::string GenerationReport::failure_summary() const {
  if (holds()) return "";
  std::string out;
  if (!operators_annihilate) out += "some generating operator does not annihilate v; ";
  if (witness_coefficient == 0) out += "witness coefficient vanishes; ";
  for (const auto& d : degrees)
    if (d.ann_dim != d.ideal_dim) {
      out += "degree " + std::to_string(d.degree) + ": dim Ann = " + std::to_string(d.ann_dim) +
             ", generated = " + std::to_string(d.ideal_dim);
      if (!d.missing.empty()) {
        out += ", missing";
        for (const auto& m : d.missing) out += " [" + to_string(m) + "]";
      }
      out += "; ";
    }
  return out;
}

GenerationReport verify_generation(const MultiplicityMatrix& mult, const Polynomial& v) {
  require_homogeneous(v);
  const int l = mult.rank();
  if (v.nvars() != l) throw ValidationError("volume polynomial has the wrong number of variables");
  const int d = v.degree();
  if (d != mult.dimension())
    throw ValidationError("volume polynomial has degree " + std::to_string(d) + ", expected M - l = " +
                          std::to_string(mult.dimension()));
  GenerationReport report;
  report.operators_annihilate = verify_nst_system(mult, v);

  Exponent witness(l);
  for (int i = 1; i <= l; ++i) witness[i - 1] = mult.row_tail(i) - 1;
  report.witness_coefficient = v.coefficient(witness);

  std::vector<Polynomial> generators;
  for (const auto& op : nst_operators(mult)) generators.push_back(op.symbol());

  for (int k = 0; k <= d + 1; ++k) {
    GenerationDegree entry;
    entry.degree = k;
    auto ann = annihilator_degree(v, k);
    entry.ann_dim = static_cast<int>(ann.size());
    RationalMatrix slice = ideal_slice(generators, l, k);
    entry.ideal_dim = slice.rows() == 0 ? 0 : rank(slice);
    if (entry.ann_dim != entry.ideal_dim) {
      const auto monomials = monomials_of_degree(l, k);
      int current = entry.ideal_dim;
      for (const auto& op : ann) {
        RationalMatrix trial = slice;
        trial.append_row(coefficient_row(op.symbol(), monomials));
        int r = rank(trial);
        if (r > current) {
          entry.missing.push_back(op);
          slice = std::move(trial);
          current = r;
        }
      }
    }
    report.degrees.push_back(std::move(entry));
  }
  return report;
}

bool verify_variable_merge(int rank, int factors, const Polynomial& raw_volume) {
  MergedCoordinateMap map(rank, factors);
  if (raw_volume.nvars() != map.raw_variables())
    throw ValidationError("raw volume must have n*l + l = " + std::to_string(map.raw_variables()) + " variables");
  for (int j = 1; j <= rank; ++j) {
    Polynomial dp1 = raw_volume.derivative(map.p_index(1, j));
    for (int i = 2; i <= factors; ++i)
      if (!(dp1 - raw_volume.derivative(map.p_index(i, j))).is_zero()) return false;
    if (!(dp1 + raw_volume.derivative(map.x_index(j))).is_zero()) return false;
  }
  return true;
}

}  // namespace flowvol
