#include "flowvol/flowpoly.hpp"

#include <algorithm>
#include <numeric>

#include "flowvol/interpolate.hpp"
#include "flowvol/linalg.hpp"

namespace flowvol {

MultiplicityMatrix::MultiplicityMatrix(int rank, std::vector<int> values) : rank_(rank), values_(std::move(values)) {
  if (rank < 1) throw ValidationError("rank must be at least 1");
  const int expected = rank * (rank + 1) / 2;
  if (static_cast<int>(values_.size()) != expected)
    throw ValidationError("rank " + std::to_string(rank) + " needs " + std::to_string(expected) +
                          " multiplicities, got " + std::to_string(values_.size()));
  for (int v : values_)
    if (v < 1) throw ValidationError("multiplicities must be positive integers");
  total_ = std::accumulate(values_.begin(), values_.end(), 0);
}

MultiplicityMatrix MultiplicityMatrix::uniform(int rank, int n) {
  if (rank < 1) throw ValidationError("rank must be at least 1");
  return MultiplicityMatrix(rank, std::vector<int>(rank * (rank + 1) / 2, n));
}

MultiplicityMatrix MultiplicityMatrix::from_lex(int rank, std::span<const int> values) {
  return MultiplicityMatrix(rank, std::vector<int>(values.begin(), values.end()));
}

int MultiplicityMatrix::index(int i, int j) const {
  if (i < 1 || j <= i || j > rank_ + 1) throw ValidationError("edge index out of range");
  // Entries before row i: Σ_{r<i} (l+1-r).
  int before = 0;
  for (int r = 1; r < i; ++r) before += rank_ + 1 - r;
  return before + (j - i - 1);
}

int MultiplicityMatrix::at(int i, int j) const { return values_[index(i, j)]; }

int MultiplicityMatrix::row_tail(int i) const {
  int s = 0;
  for (int j = i + 1; j <= rank_ + 1; ++j) s += at(i, j);
  return s;
}

std::optional<int> MultiplicityMatrix::uniform_value() const {
  if (std::all_of(values_.begin(), values_.end(), [&](int v) { return v == values_.front(); })) return values_.front();
  return std::nullopt;
}

std::vector<std::tuple<int, int, int>> MultiplicityMatrix::entries() const {
  std::vector<std::tuple<int, int, int>> out;
  for (int i = 1; i <= rank_; ++i)
    for (int j = i + 1; j <= rank_ + 1; ++j) out.emplace_back(i, j, at(i, j));
  return out;
}

PartitionTable::PartitionTable(const MultiplicityMatrix& mult, std::vector<int> bound) : bound_(std::move(bound)) {
  const int l = mult.rank();
  if (static_cast<int>(bound_.size()) != l) throw ValidationError("table bound has wrong rank");
  for (int b : bound_)
    if (b < 0) throw ValidationError("table bound must be nonnegative");
  strides_.assign(l, 1);
  for (int t = l - 2; t >= 0; --t) strides_[t] = strides_[t + 1] * (bound_[t + 1] + 1);
  const std::size_t size = strides_[0] * (bound_[0] + 1);
  counts_.assign(size, Integer(0));
  counts_[0] = 1;

  std::vector<int> q(l);
  for (auto [i, j, m] : mult.entries()) {
    // Root e_i - e_j covers α-indices i-1 .. j-2 (0-based).
    const int lo = i - 1, hi = j - 2;
    std::size_t offset = 0;
    for (int t = lo; t <= hi; ++t) offset += strides_[t];
    for (int copy = 0; copy < m; ++copy) {
      std::fill(q.begin(), q.end(), 0);
      for (std::size_t s = 0; s < size; ++s) {
        bool fits = true;
        for (int t = lo; t <= hi; ++t)
          if (q[t] == 0) {
            fits = false;
            break;
          }
        if (fits) counts_[s] += counts_[s - offset];
        for (int t = l - 1; t >= 0; --t) {
          if (++q[t] <= bound_[t]) break;
          q[t] = 0;
        }
      }
    }
  }
}

bool PartitionTable::contains(std::span<const int> q) const {
  if (q.size() != bound_.size()) return false;
  for (std::size_t t = 0; t < q.size(); ++t)
    if (q[t] < 0 || q[t] > bound_[t]) return false;
  return true;
}

std::size_t PartitionTable::flat(std::span<const int> q) const {
  if (!contains(q)) throw ValidationError("point outside the partition table");
  std::size_t idx = 0;
  for (std::size_t t = 0; t < q.size(); ++t) idx += strides_[t] * q[t];
  return idx;
}

const Integer& PartitionTable::at(std::span<const int> q) const { return counts_[flat(q)]; }

namespace {

std::vector<int> integral_coords(const Weight& h) {
  if (!h.in_root_lattice()) throw ValidationError("h = (" + to_string(h) + ") is not in the root lattice");
  std::vector<int> q(h.rank());
  for (int t = 0; t < h.rank(); ++t) q[t] = static_cast<int>(h[t].get_num().get_si());
  return q;
}

void check_rank(const MultiplicityMatrix& mult, const Weight& h) {
  if (mult.rank() != h.rank())
    throw ValidationError("rank mismatch: multiplicities for rank " + std::to_string(mult.rank()) +
                          ", weight of rank " + std::to_string(h.rank()));
}

}  // namespace

Integer partition_count(const MultiplicityMatrix& mult, const Weight& h) {
  check_rank(mult, h);
  auto q = integral_coords(h);
  if (std::any_of(q.begin(), q.end(), [](int x) { return x < 0; })) return 0;
  PartitionTable table(mult, q);
  return table.at(q);
}

std::vector<Integer> ehrhart_counts(const MultiplicityMatrix& mult, const Weight& h, int kmax) {
  check_rank(mult, h);
  if (kmax < 0) throw ValidationError("kmax must be nonnegative");
  auto q = integral_coords(h);
  if (std::any_of(q.begin(), q.end(), [](int x) { return x < 0; })) {
    std::vector<Integer> out(kmax + 1, Integer(0));
    out[0] = 1;
    return out;
  }
  std::vector<int> bound(q.size());
  for (std::size_t t = 0; t < q.size(); ++t) bound[t] = q[t] * kmax;
  PartitionTable table(mult, bound);
  std::vector<Integer> out;
  std::vector<int> kq(q.size());
  for (int k = 0; k <= kmax; ++k) {
    for (std::size_t t = 0; t < q.size(); ++t) kq[t] = k * q[t];
    out.push_back(table.at(kq));
  }
  return out;
}

Rational ehrhart_volume(const MultiplicityMatrix& mult, const Weight& h) {
  check_rank(mult, h);
  integral_coords(h);
  for (int t = 0; t < h.rank(); ++t)
    if (h[t] <= 0)
      throw ValidationError("h = (" + to_string(h) + ") is on the boundary of the positive cone; "
                            "the flow polytope is not full-dimensional");
  const int d = mult.dimension();
  auto counts = ehrhart_counts(mult, h, d + 2);
  // Forward differences at k = 0.
  std::vector<Integer> diff(counts);
  std::vector<Integer> delta0;
  for (int order = 0; order <= d + 2; ++order) {
    delta0.push_back(diff[0]);
    for (std::size_t k = 0; k + 1 < diff.size(); ++k) diff[k] = diff[k + 1] - diff[k];
    diff.pop_back();
  }
  if (delta0[d + 1] != 0 || delta0[d + 2] != 0)
    throw ValidationError("counts p(k h) at k = " + std::to_string(d + 1) + ", " + std::to_string(d + 2) +
                          " disagree with the degree-" + std::to_string(d) + " fit through k = 0.." +
                          std::to_string(d));
  return ratio(delta0[d], factorial(d));
}

namespace {

// Iterates every a in Z_{>=0}^l with |a| == total.
template <class F>
void for_each_composition(int l, int total, F&& f) {
  std::vector<int> a(l, 0);
  auto rec = [&](auto&& self, int t, int remaining) -> void {
    if (t == l - 1) {
      a[t] = remaining;
      f(a);
      return;
    }
    for (int x = remaining; x >= 0; --x) {
      a[t] = x;
      self(self, t + 1, remaining - x);
    }
  };
  rec(rec, 0, total);
}

std::vector<int> chamber_point(const std::vector<int>& a) {
  std::vector<int> q(a.size());
  int s = 0;
  for (std::size_t t = 0; t < a.size(); ++t) q[t] = (s += a[t]);
  return q;
}

}  // namespace

Polynomial chamber_volume_polynomial(const MultiplicityMatrix& mult) {
  const int l = mult.rank();
  const int d = mult.dimension();
  const int top = d + 2;
  PartitionTable table(mult, std::vector<int>(l, top));

  // Differences live on the simplex |a| <= d, stored in a (d+1)^l box.
  std::vector<std::size_t> strides(l, 1);
  for (int t = l - 2; t >= 0; --t) strides[t] = strides[t + 1] * (d + 1);
  auto flat = [&](const std::vector<int>& a) {
    std::size_t idx = 0;
    for (int t = 0; t < l; ++t) idx += strides[t] * a[t];
    return idx;
  };
  std::vector<Integer> delta(strides[0] * (d + 1));
  std::vector<std::vector<int>> simplex;
  for (int s = 0; s <= d; ++s) for_each_composition(l, s, [&](const std::vector<int>& a) { simplex.push_back(a); });
  for (const auto& a : simplex) delta[flat(a)] = table.at(chamber_point(a));

  // Δ along each axis in turn; the simplex is downward closed so every
  // value needed is present. Processing a descending in that axis keeps the
  // update in place.
  for (int t = 0; t < l; ++t) {
    for (int order = 1; order <= d; ++order) {
      for (auto it = simplex.rbegin(); it != simplex.rend(); ++it) {
        const auto& a = *it;
        if (a[t] < order) continue;
        auto b = a;
        b[t] -= 1;
        delta[flat(a)] -= delta[flat(b)];
      }
    }
  }

  auto newton_value = [&](const std::vector<int>& a) {
    Integer sum = 0;
    for (const auto& idx : simplex) {
      const Integer& c = delta[flat(idx)];
      if (c == 0) continue;
      Integer term = c;
      for (int t = 0; t < l && term != 0; ++t) term *= binomial(a[t], idx[t]);
      sum += term;
    }
    return sum;
  };
  int checked = 0;
  for (int s = d + 1; s <= top && checked < 40; ++s)
    for_each_composition(l, s, [&](const std::vector<int>& a) {
      if (checked >= 40) return;
      ++checked;
      auto q = chamber_point(a);
      if (newton_value(a) != table.at(q))
        throw FalsificationError("partition function is not a degree-" + std::to_string(d) +
                                 " polynomial on the closed nice chamber (mismatch at q = " +
                                 to_string(Weight(std::vector<Rational>(q.begin(), q.end()))) + ")");
    });

  // Top-degree part in the a-variables, then a_1 = q_1, a_t = q_t - q_{t-1}.
  Polynomial in_a(l);
  for (const auto& idx : simplex) {
    if (total_degree(idx) != d) continue;
    Integer denom = 1;
    for (int x : idx) denom *= factorial(x);
    in_a.add_term(idx, ratio(delta[flat(idx)], denom));
  }
  std::vector<Polynomial> images;
  for (int t = 0; t < l; ++t) {
    Polynomial img = Polynomial::variable(l, t);
    if (t > 0) img -= Polynomial::variable(l, t - 1);
    images.push_back(img);
  }
  Polynomial v = in_a.substitute(images);

  std::vector<Rational> probe(l);
  for (int t = 0; t < l; ++t) probe[t] = t + 1;
  for (int variant = 0; variant < 2; ++variant) {
    if (variant == 1) probe[l - 1] += 1;
    Weight h(probe);
    Rational expected = ehrhart_volume(mult, h);
    if (v.evaluate(probe) != expected)
      throw FalsificationError("nice-chamber polynomial gives " + to_string(v.evaluate(probe)) + " at (" +
                               to_string(h) + ") but the Ehrhart volume is " + to_string(expected));
  }
  return v;
}

Polynomial chamber_volume_polynomial(const MultiplicityMatrix& mult, std::span<const Weight> samples) {
  const int l = mult.rank();
  const int d = mult.dimension();
  const long needed = homogeneous_dimension(l, d) + 2;
  if (static_cast<long>(samples.size()) < needed)
    throw ValidationError("custom chamber needs at least " + std::to_string(needed) +
                          " integral samples (including two surplus checks), got " + std::to_string(samples.size()));
  std::vector<Sample> data;
  for (const auto& h : samples) data.push_back({h.alpha(), ehrhart_volume(mult, h)});
  try {
    return interpolate_homogeneous(l, d, data);
  } catch (const ValidationError& e) {
    throw ValidationError(std::string("custom chamber: ") + e.what());
  }
}

std::vector<Weight> chamber_samples(int rank, int degree, const std::function<bool(const Weight&)>& chamber,
                                    int surplus) {
  const auto monomials = monomials_of_degree(rank, degree);
  const int needed = static_cast<int>(monomials.size());
  auto row_of = [&](const std::vector<Rational>& q) {
    std::vector<Rational> row;
    for (const auto& e : monomials) {
      Rational t = 1;
      for (int i = 0; i < rank; ++i)
        for (int k = 0; k < e[i]; ++k) t *= q[i];
      row.push_back(t);
    }
    return row;
  };
  std::vector<Weight> picked, spare;
  RationalMatrix rows;
  int current_rank = 0;
  for (int c = 1; c <= 256 && (current_rank < needed || static_cast<int>(spare.size()) < surplus); ++c) {
    // Slice q_l = c with the other coordinates in [1, 2c].
    std::vector<int> q(rank - 1, 1);
    while (true) {
      std::vector<Rational> point(q.begin(), q.end());
      point.push_back(c);
      Weight w(point);
      if (chamber(w)) {
        if (current_rank < needed) {
          RationalMatrix trial = rows;
          trial.append_row(row_of(point));
          int r = flowvol::rank(trial);
          if (r > current_rank) {
            rows = std::move(trial);
            current_rank = r;
            picked.push_back(w);
          } else {
            spare.push_back(w);
          }
        } else {
          spare.push_back(w);
        }
      }
      int t = rank - 2;
      while (t >= 0 && ++q[t] > 2 * c) q[t--] = 1;
      if (t < 0) break;
    }
  }
  if (current_rank < needed || static_cast<int>(spare.size()) < surplus)
    throw ValidationError("could not find enough integral points in the chamber");
  for (int i = 0; i < surplus; ++i) picked.push_back(spare[i]);
  return picked;
}

}  // namespace flowvol
