#include "flowvol/rootsys.hpp"

#include <algorithm>
#include <numeric>

namespace flowvol {

Weight::Weight(std::vector<Rational> alpha) : alpha_(std::move(alpha)) {
  if (alpha_.empty()) throw ValidationError("weight rank must be at least 1");
}

Weight Weight::zero(int rank) {
  if (rank < 1) throw ValidationError("rank must be at least 1");
  return Weight(std::vector<Rational>(rank));
}

Weight Weight::simple_root(int rank, int i) {
  if (i < 1 || i > rank) throw ValidationError("simple root index out of range");
  Weight w = zero(rank);
  w.alpha_[i - 1] = 1;
  return w;
}

Weight Weight::from_e_coords(std::span<const Rational> e) {
  if (e.size() < 2) throw ValidationError("e-coordinates need at least two entries");
  Rational total = std::accumulate(e.begin(), e.end(), Rational(0));
  if (total != 0) throw ValidationError("e-coordinates must sum to zero");
  std::vector<Rational> q(e.size() - 1);
  Rational running = 0;
  for (std::size_t k = 0; k + 1 < e.size(); ++k) {
    running += e[k];
    q[k] = running;
  }
  return Weight(std::move(q));
}

std::vector<Rational> Weight::e_coords() const {
  const int l = rank();
  std::vector<Rational> e(l + 1);
  for (int k = 0; k <= l; ++k) {
    Rational cur = k < l ? alpha_[k] : Rational(0);
    Rational prev = k > 0 ? alpha_[k - 1] : Rational(0);
    e[k] = cur - prev;
  }
  return e;
}

std::vector<Rational> Weight::fundamental_coords() const {
  const int l = rank();
  std::vector<Rational> f(l);
  for (int i = 0; i < l; ++i) {
    f[i] = 2 * alpha_[i];
    if (i > 0) f[i] -= alpha_[i - 1];
    if (i + 1 < l) f[i] -= alpha_[i + 1];
  }
  return f;
}

bool Weight::in_root_lattice() const {
  return std::all_of(alpha_.begin(), alpha_.end(), [](const Rational& r) { return is_integer(r); });
}

bool Weight::is_integral() const {
  auto f = fundamental_coords();
  return std::all_of(f.begin(), f.end(), [](const Rational& r) { return is_integer(r); });
}

bool Weight::is_dominant() const {
  auto f = fundamental_coords();
  return std::all_of(f.begin(), f.end(), [](const Rational& r) { return r >= 0; });
}

void Weight::check_rank(const Weight& o) const {
  if (o.rank() != rank())
    throw ValidationError("rank mismatch: " + std::to_string(rank()) + " vs " + std::to_string(o.rank()));
}

Weight& Weight::operator+=(const Weight& o) {
  check_rank(o);
  for (int i = 0; i < rank(); ++i) alpha_[i] += o.alpha_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  check_rank(o);
  for (int i = 0; i < rank(); ++i) alpha_[i] -= o.alpha_[i];
  return *this;
}

Weight& Weight::operator*=(const Rational& c) {
  for (auto& a : alpha_) a *= c;
  return *this;
}

Weight fundamental_to_alpha(int rank, std::span<const Rational> coeffs) {
  if (rank < 1) throw ValidationError("rank must be at least 1");
  if (static_cast<int>(coeffs.size()) != rank)
    throw ValidationError("expected " + std::to_string(rank) + " fundamental coordinates, got " +
                          std::to_string(coeffs.size()));
  std::vector<Rational> q(rank);
  for (int i = 1; i <= rank; ++i)
    for (int j = 1; j <= rank; ++j) {
      Rational inv = Rational(std::min(i, j)) - ratio(i * j, rank + 1);
      q[i - 1] += inv * coeffs[j - 1];
    }
  for (auto& x : q) x.canonicalize();
  return Weight(std::move(q));
}

Weight standard_rho(int rank, RhoConvention convention) {
  if (rank < 1) throw ValidationError("rank must be at least 1");
  std::vector<Rational> q(rank);
  for (int i = 1; i <= rank; ++i)
    q[i - 1] = convention == RhoConvention::standard ? ratio(i * (rank + 1 - i), 2) : ratio(1, 2);
  for (auto& x : q) x.canonicalize();
  return Weight(std::move(q));
}

WeylElement::WeylElement(std::vector<int> perm) : perm_(std::move(perm)) {
  const int n = static_cast<int>(perm_.size());
  if (n < 2) throw ValidationError("Weyl element needs a permutation of at least 2 points");
  std::vector<bool> hit(n, false);
  for (int p : perm_) {
    if (p < 0 || p >= n || hit[p]) throw ValidationError("not a permutation");
    hit[p] = true;
  }
  int inversions = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (perm_[i] > perm_[j]) ++inversions;
  sign_ = inversions % 2 == 0 ? 1 : -1;
}

WeylElement WeylElement::identity(int rank) {
  std::vector<int> p(rank + 1);
  std::iota(p.begin(), p.end(), 0);
  return WeylElement(std::move(p));
}

WeylElement WeylElement::simple_reflection(int rank, int i) {
  if (i < 1 || i > rank) throw ValidationError("simple reflection index out of range");
  std::vector<int> p(rank + 1);
  std::iota(p.begin(), p.end(), 0);
  std::swap(p[i - 1], p[i]);
  return WeylElement(std::move(p));
}

std::vector<WeylElement> WeylElement::all(int rank) {
  if (rank < 1) throw ValidationError("rank must be at least 1");
  std::vector<int> p(rank + 1);
  std::iota(p.begin(), p.end(), 0);
  std::vector<WeylElement> out;
  do {
    out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool WeylElement::is_identity() const {
  for (int k = 0; k < static_cast<int>(perm_.size()); ++k)
    if (perm_[k] != k) return false;
  return true;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  if (a.perm_.size() != b.perm_.size()) throw ValidationError("rank mismatch in Weyl composition");
  std::vector<int> p(a.perm_.size());
  for (std::size_t k = 0; k < p.size(); ++k) p[k] = a.perm_[b.perm_[k]];
  return WeylElement(std::move(p));
}

Weight weyl_act(const WeylElement& w, const Weight& x) {
  if (w.rank() != x.rank())
    throw ValidationError("rank mismatch: Weyl element of rank " + std::to_string(w.rank()) + ", weight of rank " +
                          std::to_string(x.rank()));
  auto e = x.e_coords();
  std::vector<Rational> moved(e.size());
  for (std::size_t k = 0; k < e.size(); ++k) moved[w.perm()[k]] = e[k];
  return Weight::from_e_coords(moved);
}

bool in_positive_cone(const Weight& x) {
  return std::all_of(x.alpha().begin(), x.alpha().end(), [](const Rational& r) { return r >= 0; });
}

bool in_nice_chamber(const Weight& x) {
  if (x[0] <= 0) return false;
  for (int i = 1; i < x.rank(); ++i)
    if (x[i] <= x[i - 1]) return false;
  return true;
}

bool sufficiently_close(std::span<const Weight> lambdas, const Weight& mu, RhoConvention convention) {
  if (lambdas.empty()) throw ValidationError("need at least one lambda");
  const int l = mu.rank();
  for (const auto& lam : lambdas)
    if (lam.rank() != l) throw ValidationError("rank mismatch between lambda and mu");
  const int n = static_cast<int>(lambdas.size());
  const Weight rho = standard_rho(l, convention);
  const auto group = WeylElement::all(l);

  std::vector<std::vector<Weight>> orbits(n);
  for (int i = 0; i < n; ++i)
    for (const auto& w : group) orbits[i].push_back(weyl_act(w, lambdas[i] + rho));
  const Weight shift = mu + Rational(n) * rho;

  std::vector<std::size_t> idx(n, 0);
  while (true) {
    Weight sum = Weight::zero(l);
    for (int i = 0; i < n; ++i) sum += orbits[i][idx[i]];
    sum -= shift;
    bool all_identity = std::all_of(idx.begin(), idx.end(), [](std::size_t k) { return k == 0; });
    bool inside = in_positive_cone(sum);
    if (all_identity != inside) return false;
    int pos = 0;
    while (pos < n && ++idx[pos] == group.size()) idx[pos++] = 0;
    if (pos == n) break;
  }
  return true;
}

std::string to_string(const Weight& w) {
  std::string out;
  for (int i = 0; i < w.rank(); ++i) {
    if (i > 0) out += ",";
    out += to_string(w[i]);
  }
  return out;
}

Weight parse_weight(std::string_view text, Basis basis) {
  auto coeffs = parse_rational_list(text);
  if (coeffs.empty()) throw ValidationError("empty weight");
  if (basis == Basis::alpha) return Weight(std::move(coeffs));
  return fundamental_to_alpha(static_cast<int>(coeffs.size()), coeffs);
}

}  // namespace flowvol
