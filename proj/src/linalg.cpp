#include "flowvol/linalg.hpp"

#include <utility>

namespace flowvol {

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  RationalMatrix m;
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void RationalMatrix::append_row(const std::vector<Rational>& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(row.size());
  if (static_cast<int>(row.size()) != cols_) throw ValidationError("ragged matrix row");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

std::vector<Rational> RationalMatrix::multiply(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != cols_) throw ValidationError("matrix-vector size mismatch");
  std::vector<Rational> out(rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if ((*this)(r, c) != 0) out[r] += (*this)(r, c) * x[c];
  return out;
}

Echelon bareiss_echelon(const RationalMatrix& m) {
  Echelon e;
  e.cols = m.cols();
  std::vector<std::vector<Integer>> a;
  a.reserve(m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    Integer den = 1;
    bool nonzero = false;
    for (int c = 0; c < m.cols(); ++c) {
      if (m(r, c) == 0) continue;
      nonzero = true;
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(r, c).get_den_mpz_t());
    }
    if (!nonzero) continue;
    std::vector<Integer> row(m.cols());
    for (int c = 0; c < m.cols(); ++c) {
      if (m(r, c) == 0) continue;
      row[c] = m(r, c).get_num() * (den / m(r, c).get_den());
    }
    a.push_back(std::move(row));
  }

  const int nrows = static_cast<int>(a.size());
  const int ncols = m.cols();
  Integer prev = 1;
  Integer tmp;
  int k = 0;
  for (int c = 0; c < ncols && k < nrows; ++c) {
    int pivot = -1;
    for (int r = k; r < nrows; ++r)
      if (a[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[k], a[pivot]);
    const Integer& p = a[k][c];
    for (int r = k + 1; r < nrows; ++r) {
      const Integer factor = a[r][c];
      for (int j = c + 1; j < ncols; ++j) {
        // a[r][j] = (p*a[r][j] - factor*a[k][j]) / prev, exact by Sylvester's identity.
        tmp = p * a[r][j];
        if (factor != 0 && a[k][j] != 0) tmp -= factor * a[k][j];
        if (prev != 1) mpz_divexact(tmp.get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
        a[r][j] = tmp;
      }
      a[r][c] = 0;
    }
    prev = a[k][c];
    e.pivots.push_back(c);
    ++k;
  }
  a.resize(k);
  e.rows = std::move(a);
  return e;
}

int rank(const RationalMatrix& m) { return bareiss_echelon(m).rank(); }

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m) {
  Echelon e = bareiss_echelon(m);
  const int ncols = m.cols();
  std::vector<bool> is_pivot(ncols, false);
  for (int p : e.pivots) is_pivot[p] = true;

  std::vector<std::vector<Rational>> basis;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(ncols);
    x[f] = 1;
    for (int r = e.rank() - 1; r >= 0; --r) {
      int pc = e.pivots[r];
      Rational s = 0;
      for (int c = pc + 1; c < ncols; ++c)
        if (e.rows[r][c] != 0 && x[c] != 0) s += Rational(e.rows[r][c]) * x[c];
      x[pc] = -s / Rational(e.rows[r][pc]);
    }
    Integer den = 1, g = 0;
    for (const auto& v : x)
      if (v != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    for (auto& v : x) {
      v *= den;
      if (v != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num_mpz_t());
    }
    int sign = 1;
    for (const auto& v : x)
      if (v != 0) {
        sign = v < 0 ? -1 : 1;
        break;
      }
    for (auto& v : x) v = v * sign / g;
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace flowvol
