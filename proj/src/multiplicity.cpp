#include "flowvol/multiplicity.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "flowvol/flowpoly.hpp"

namespace flowvol {

Weight MultiplicityQuery::lambda_sum() const {
  Weight s = Weight::zero(rank());
  for (const auto& lam : lambdas) s += lam;
  return s;
}

void MultiplicityQuery::validate() const {
  if (lambdas.empty()) throw ValidationError("need at least one lambda");
  for (const auto& lam : lambdas) {
    if (lam.rank() != mu.rank()) throw ValidationError("rank mismatch between lambda and mu");
    if (!lam.is_integral()) throw ValidationError("lambda (" + to_string(lam) + ") is not an integral weight");
    if (!lam.is_dominant()) throw ValidationError("lambda (" + to_string(lam) + ") is not dominant");
  }
  if (!mu.is_integral()) throw ValidationError("mu (" + to_string(mu) + ") is not an integral weight");
}

namespace {

// Counts p_{l,m} at many arguments from one table sized to their maximum.
std::vector<Integer> batch_partition_counts(const MultiplicityMatrix& mult, const std::vector<Weight>& args) {
  const int l = mult.rank();
  std::vector<int> bound(l, 0);
  std::vector<std::optional<std::vector<int>>> coords;
  for (const auto& a : args) {
    if (!a.in_root_lattice() || !in_positive_cone(a)) {
      coords.emplace_back();
      continue;
    }
    std::vector<int> q(l);
    for (int t = 0; t < l; ++t) {
      q[t] = static_cast<int>(a[t].get_num().get_si());
      bound[t] = std::max(bound[t], q[t]);
    }
    coords.emplace_back(std::move(q));
  }
  std::vector<Integer> out(args.size(), Integer(0));
  if (std::none_of(coords.begin(), coords.end(), [](const auto& c) { return c.has_value(); })) return out;
  PartitionTable table(mult, bound);
  for (std::size_t k = 0; k < args.size(); ++k)
    if (coords[k]) out[k] = table.at(*coords[k]);
  return out;
}

}  // namespace

std::vector<KostantTerm> kostant_terms(const MultiplicityQuery& q, RhoConvention convention) {
  q.validate();
  const int l = q.rank();
  const int n = q.factors();
  const Weight rho = standard_rho(l, convention);
  const auto group = WeylElement::all(l);

  std::vector<std::vector<Weight>> orbits(n);
  for (int i = 0; i < n; ++i)
    for (const auto& w : group) orbits[i].push_back(weyl_act(w, q.lambdas[i] + rho));
  const Weight shift = q.mu + Rational(n) * rho;

  std::vector<KostantTerm> terms;
  std::vector<int> idx(n, 0);
  while (true) {
    Weight arg = Weight::zero(l);
    int sign = 1;
    for (int i = 0; i < n; ++i) {
      arg += orbits[i][idx[i]];
      sign *= group[idx[i]].sign();
    }
    arg -= shift;
    terms.push_back(KostantTerm{idx, sign, arg, Integer(0)});
    int pos = 0;
    while (pos < n && ++idx[pos] == static_cast<int>(group.size())) idx[pos++] = 0;
    if (pos == n) break;
  }

  std::vector<Weight> args;
  for (const auto& t : terms) args.push_back(t.argument);
  auto counts = batch_partition_counts(MultiplicityMatrix::uniform(l, n), args);
  for (std::size_t k = 0; k < terms.size(); ++k) terms[k].count = counts[k];
  return terms;
}

Integer tensor_weight_multiplicity(const MultiplicityQuery& q, RhoConvention convention) {
  Integer sum = 0;
  for (const auto& t : kostant_terms(q, convention)) {
    if (t.sign > 0)
      sum += t.count;
    else
      sum -= t.count;
  }
  if (sum < 0 && convention == RhoConvention::standard)
    throw std::logic_error("negative alternating Kostant sum " + to_string(sum) + ": rho convention bug");
  return sum;
}

std::map<Weight, Integer> weight_multiplicities(const Weight& lambda) {
  if (!lambda.is_integral() || !lambda.is_dominant())
    throw ValidationError("lambda (" + to_string(lambda) + ") must be integral dominant");
  const int l = lambda.rank();
  const auto group = WeylElement::all(l);
  // Lowest weight is w_0 λ, the reversal of the e-coordinates.
  auto e = lambda.e_coords();
  std::reverse(e.begin(), e.end());
  const Weight span = lambda - Weight::from_e_coords(e);

  std::vector<int> extent(l);
  for (int t = 0; t < l; ++t) extent[t] = static_cast<int>(span[t].get_num().get_si());

  const Weight rho = standard_rho(l);
  std::vector<Weight> shifted;
  for (const auto& w : group) shifted.push_back(weyl_act(w, lambda + rho) - rho);

  // Every argument σ(λ+ρ) - ρ - μ' is bounded by λ - w_0 λ, so one table
  // covers all candidates.
  PartitionTable table(MultiplicityMatrix::uniform(l, 1), extent);

  std::map<Weight, Integer> out;
  std::vector<int> beta(l, 0);
  std::vector<int> arg(l);
  while (true) {
    std::vector<Rational> b(beta.begin(), beta.end());
    Weight mu = lambda - Weight(b);
    Integer m = 0;
    for (std::size_t s = 0; s < group.size(); ++s) {
      Weight a = shifted[s] - mu;
      bool ok = true;
      for (int t = 0; t < l && ok; ++t) {
        if (a[t] < 0) ok = false;
        else arg[t] = static_cast<int>(a[t].get_num().get_si());
      }
      if (!ok) continue;
      if (group[s].sign() > 0)
        m += table.at(arg);
      else
        m -= table.at(arg);
    }
    if (m < 0) throw std::logic_error("negative weight multiplicity");
    if (m > 0) out.emplace(mu, m);
    int t = l - 1;
    while (t >= 0 && ++beta[t] > extent[t]) beta[t--] = 0;
    if (t < 0) break;
  }
  return out;
}

std::map<Weight, Integer> tensor_character(const std::vector<Weight>& lambdas) {
  if (lambdas.empty()) throw ValidationError("need at least one lambda");
  std::map<Weight, Integer> acc{{Weight::zero(lambdas.front().rank()), Integer(1)}};
  for (const auto& lam : lambdas) {
    auto factor = weight_multiplicities(lam);
    std::map<Weight, Integer> next;
    for (const auto& [w1, c1] : acc)
      for (const auto& [w2, c2] : factor) next[w1 + w2] += c1 * c2;
    acc = std::move(next);
  }
  return acc;
}

Integer convolution_oracle(const MultiplicityQuery& q) {
  q.validate();
  auto character = tensor_character(q.lambdas);
  auto it = character.find(q.mu);
  return it == character.end() ? Integer(0) : it->second;
}

bool sufficiently_close_reduction_check(const MultiplicityQuery& q) {
  q.validate();
  if (!sufficiently_close(q.lambdas, q.mu))
    throw ValidationError("mu is not sufficiently close to lambda_1 + ... + lambda_n");
  Integer lhs = tensor_weight_multiplicity(q);
  Integer rhs = partition_count(MultiplicityMatrix::uniform(q.rank(), q.factors()), q.lambda_sum() - q.mu);
  return lhs == rhs;
}

std::vector<Rational> asymptotic_volume_probe(const MultiplicityQuery& q, int kmax) {
  q.validate();
  if (kmax < 1) throw ValidationError("kmax must be at least 1");
  if (!sufficiently_close(q.lambdas, q.mu))
    throw ValidationError("mu is not sufficiently close to lambda_1 + ... + lambda_n");
  const int l = q.rank();
  const int d = q.factors() * l * (l + 1) / 2 - l;
  std::vector<Rational> out;
  for (int k = 1; k <= kmax; ++k) {
    MultiplicityQuery scaled{{}, q.mu * Rational(k)};
    for (const auto& lam : q.lambdas) scaled.lambdas.push_back(lam * Rational(k));
    Integer kd;
    mpz_ui_pow_ui(kd.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(d));
    Rational r(tensor_weight_multiplicity(scaled), kd);
    r.canonicalize();
    out.push_back(r);
  }
  return out;
}

}  // namespace flowvol
