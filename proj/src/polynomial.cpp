#include "flowvol/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace flowvol {

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return b < a;
}

namespace {

void fill_monomials(int var, int remaining, Exponent& cur, std::vector<Exponent>& out) {
  int n = static_cast<int>(cur.size());
  if (var == n - 1) {
    cur[var] = remaining;
    out.push_back(cur);
    return;
  }
  for (int a = remaining; a >= 0; --a) {
    cur[var] = a;
    fill_monomials(var + 1, remaining - a, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<Exponent> monomials_of_degree(int nvars, int degree) {
  std::vector<Exponent> out;
  if (nvars <= 0 || degree < 0) return out;
  Exponent cur(nvars, 0);
  fill_monomials(0, degree, cur, out);
  return out;
}

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
  if (nvars < 1) throw ValidationError("polynomial needs at least one variable");
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
  Exponent e(nvars, 0);
  e.at(index) = 1;
  return monomial(std::move(e), 1);
}

Polynomial Polynomial::monomial(Exponent e, const Rational& c) {
  Polynomial p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::linear(std::span<const Rational> coeffs) {
  int n = static_cast<int>(coeffs.size());
  Polynomial p(n);
  for (int i = 0; i < n; ++i) {
    Exponent e(n, 0);
    e[i] = 1;
    p.add_term(e, coeffs[i]);
  }
  return p;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return total_degree(terms_.begin()->first);
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  return total_degree(terms_.begin()->first) == total_degree(terms_.rbegin()->first);
}

Rational Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial Polynomial::homogeneous_part(int degree) const {
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) == degree) out.terms_.emplace(e, c);
  return out;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_) throw ValidationError("exponent length does not match variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != nvars_) throw ValidationError("evaluation point has wrong dimension");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    sum += t;
  }
  return sum;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (static_cast<int>(images.size()) != nvars_) throw ValidationError("substitution needs one image per variable");
  int target = images.front().nvars();
  for (const auto& im : images)
    if (im.nvars() != target) throw ValidationError("substitution images disagree on variable count");
  std::vector<std::vector<Polynomial>> powers(nvars_);
  for (int i = 0; i < nvars_; ++i) powers[i].push_back(Polynomial::constant(target, 1));
  auto power = [&](int i, int k) -> const Polynomial& {
    while (static_cast<int>(powers[i].size()) <= k) powers[i].push_back(powers[i].back() * images[i]);
    return powers[i][k];
  };
  Polynomial out(target);
  for (const auto& [e, c] : terms_) {
    Polynomial t = Polynomial::constant(target, c);
    for (int i = 0; i < nvars_; ++i)
      if (e[i] > 0) t *= power(i, e[i]);
    out += t;
  }
  return out;
}

Polynomial Polynomial::derivative(int var, int times) const {
  Exponent a(nvars_, 0);
  a.at(var) = times;
  return DiffOperator(monomial(a, 1)).apply(*this);
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial out = constant(nvars_, 1);
  for (unsigned i = 0; i < k; ++i) out *= *this;
  return out;
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (o.nvars_ != nvars_)
    throw ValidationError("variable count mismatch: " + std::to_string(nvars_) + " vs " + std::to_string(o.nvars_));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  check_compatible(o);
  Polynomial out(nvars_);
  Exponent e(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  terms_ = std::move(out.terms_);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coef] : terms_) coef *= c;
  return *this;
}

std::vector<std::string> variable_names(std::string_view prefix, int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(std::string(prefix) + std::to_string(i));
  return out;
}

std::string to_string(const Polynomial& p, const std::vector<std::string>& names) {
  if (static_cast<int>(names.size()) != p.nvars()) throw ValidationError("need one name per variable");
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    bool negative = c < 0;
    Rational mag = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string vars;
    for (int i = 0; i < p.nvars(); ++i) {
      if (e[i] == 0) continue;
      if (!vars.empty()) vars += " ";
      vars += names[i];
      if (e[i] > 1) vars += "^" + std::to_string(e[i]);
    }
    if (vars.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += vars;
    } else {
      out += to_string(mag) + " " + vars;
    }
  }
  return out;
}

std::string to_string(const Polynomial& p, std::string_view prefix) {
  return to_string(p, variable_names(prefix, p.nvars()));
}

namespace {

bool is_number_start(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names) {
  int n = static_cast<int>(names.size());
  std::string s(text);
  for (char& c : s)
    if (c == '*') c = ' ';
  // Split "+"/"-" that are glued to operands so that every sign is its own
  // token unless it is the sign of a leading coefficient.
  std::vector<std::string> tokens;
  {
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
      std::size_t pos = 0;
      while (pos < tok.size() && (tok[pos] == '+' || tok[pos] == '-')) {
        if (pos + 1 < tok.size()) break;
        tokens.emplace_back(1, tok[pos]);
        ++pos;
      }
      if (pos < tok.size()) tokens.push_back(tok.substr(pos));
    }
  }
  Polynomial out(n);
  if (tokens.size() == 1 && tokens[0] == "0") return out;
  if (tokens.empty()) throw ValidationError("empty polynomial text");

  int sign = 1;
  bool have_term = false;
  Rational coef = 1;
  Exponent exp(n, 0);
  auto flush = [&]() {
    if (!have_term) throw ValidationError("malformed polynomial '" + std::string(text) + "'");
    out.add_term(exp, coef * sign);
    sign = 1;
    coef = 1;
    std::fill(exp.begin(), exp.end(), 0);
    have_term = false;
  };
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    std::string tok = tokens[i];
    if (tok == "+" || tok == "-") {
      if (have_term) flush();
      if (tok == "-") sign = -sign;
      continue;
    }
    if (tok[0] == '-' || tok[0] == '+') {
      if (have_term) flush();
      if (tok[0] == '-') sign = -sign;
      tok = tok.substr(1);
    }
    if (is_number_start(tok[0])) {
      if (have_term) throw ValidationError("coefficient must lead its term in '" + std::string(text) + "'");
      coef = parse_rational(tok);
      have_term = true;
      continue;
    }
    auto caret = tok.find('^');
    std::string name = tok.substr(0, caret);
    int power = 1;
    if (caret != std::string::npos) {
      auto p = parse_rational(tok.substr(caret + 1));
      if (!is_integer(p) || p < 0) throw ValidationError("bad exponent in '" + tok + "'");
      power = static_cast<int>(p.get_num().get_si());
    }
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw ValidationError("unknown variable '" + name + "'");
    exp[it - names.begin()] += power;
    have_term = true;
  }
  flush();
  return out;
}

Polynomial parse_polynomial(std::string_view text, int nvars, std::string_view prefix) {
  return parse_polynomial(text, variable_names(prefix, nvars));
}

DiffOperator DiffOperator::partial(int nvars, int index) {
  return DiffOperator(Polynomial::variable(nvars, index));
}

Rational falling_factor(const Exponent& b, const Exponent& a) {
  Integer f = 1;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] < a[i]) return 0;
    for (int k = 0; k < a[i]; ++k) f *= b[i] - k;
  }
  return Rational(f);
}

Polynomial DiffOperator::apply(const Polynomial& v) const {
  if (v.nvars() != nvars())
    throw ValidationError("operator acts on " + std::to_string(nvars()) + " variables, polynomial has " +
                          std::to_string(v.nvars()));
  Polynomial out(v.nvars());
  Exponent r(v.nvars());
  for (const auto& [a, ca] : symbol_.terms())
    for (const auto& [b, cb] : v.terms()) {
      Rational f = falling_factor(b, a);
      if (f == 0) continue;
      for (int i = 0; i < v.nvars(); ++i) r[i] = b[i] - a[i];
      out.add_term(r, ca * cb * f);
    }
  return out;
}

std::string to_string(const DiffOperator& d, std::string_view prefix) { return to_string(d.symbol(), prefix); }

}  // namespace flowvol
