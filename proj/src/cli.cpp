#include "flowvol/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "flowvol/cohomring.hpp"
#include "flowvol/dualalgebra.hpp"
#include "flowvol/flowpoly.hpp"
#include "flowvol/multiplicity.hpp"

namespace flowvol::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Params {
  std::optional<int> l;
  std::optional<int> n;
  std::string m;
  std::string h;
  std::vector<std::string> lambdas;
  std::string mu;
  std::string basis = "fundamental";
  std::string chamber = "nice";
  std::string samples;
  std::optional<int> kmax;
  std::string format = "text";
  std::optional<int> degree;
  std::string exponents;
};

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

int require_rank(const Params& p) {
  if (!p.l) throw ValidationError("--l is required");
  if (*p.l < 1) throw ValidationError("--l must be at least 1");
  return *p.l;
}

MultiplicityMatrix require_mult(const Params& p) {
  const int l = require_rank(p);
  if (!p.m.empty()) {
    std::vector<int> values;
    for (const auto& r : parse_rational_list(p.m)) {
      if (!is_integer(r) || !r.get_num().fits_sint_p()) throw ValidationError("--m entries must be integers");
      values.push_back(static_cast<int>(r.get_num().get_si()));
    }
    return MultiplicityMatrix::from_lex(l, values);
  }
  if (p.n) {
    if (*p.n < 1) throw ValidationError("--n must be at least 1");
    return MultiplicityMatrix::uniform(l, *p.n);
  }
  throw ValidationError("either --n or --m is required");
}

int require_factors(const Params& p, const MultiplicityMatrix& mult) {
  if (p.n) return *p.n;
  if (auto u = mult.uniform_value()) return *u;
  throw ValidationError("this subcommand needs uniform multiplicities (--n)");
}

Weight require_alpha_weight(const std::string& text, const std::string& flag, int l) {
  if (text.empty()) throw ValidationError(flag + " is required");
  Weight w = parse_weight(text, Basis::alpha);
  if (w.rank() != l) throw ValidationError(flag + " has " + std::to_string(w.rank()) + " coordinates, expected " +
                                           std::to_string(l));
  return w;
}

Basis require_basis(const Params& p) {
  if (p.basis == "alpha") return Basis::alpha;
  if (p.basis == "fundamental") return Basis::fundamental;
  throw ValidationError("--basis must be alpha or fundamental");
}

MultiplicityQuery require_query(const Params& p) {
  const int l = require_rank(p);
  const Basis basis = require_basis(p);
  if (p.lambdas.empty()) throw ValidationError("at least one --lambda is required");
  if (p.mu.empty()) throw ValidationError("--mu is required");
  MultiplicityQuery q{{}, parse_weight(p.mu, basis)};
  for (const auto& text : p.lambdas) q.lambdas.push_back(parse_weight(text, basis));
  if (q.mu.rank() != l) throw ValidationError("--mu has the wrong number of coordinates for --l");
  for (const auto& lam : q.lambdas)
    if (lam.rank() != l) throw ValidationError("--lambda has the wrong number of coordinates for --l");
  q.validate();
  return q;
}

std::vector<Weight> parse_samples(const std::string& text, int l) {
  std::vector<Weight> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    out.push_back(require_alpha_weight(item, "--samples", l));
  }
  return out;
}

Polynomial volume_polynomial(const Params& p, const MultiplicityMatrix& mult) {
  if (p.chamber == "nice") {
    if (!p.samples.empty()) throw ValidationError("--samples only applies to --chamber custom");
    return chamber_volume_polynomial(mult);
  }
  if (p.chamber == "custom") {
    if (p.samples.empty()) throw ValidationError("--chamber custom needs --samples \"q1,q2;q1,q2;...\"");
    auto samples = parse_samples(p.samples, mult.rank());
    return chamber_volume_polynomial(mult, samples);
  }
  throw ValidationError("--chamber must be nice or custom");
}

Json mult_json(const MultiplicityMatrix& mult) {
  Json arr = Json::array();
  for (auto [i, j, m] : mult.entries()) arr.push_back(Json::array({i, j, m}));
  return arr;
}

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

struct Report {
  Json json = Json::object();
  std::vector<std::string> text;
  int status = kOk;
};

Report cmd_partition(const Params& p) {
  auto mult = require_mult(p);
  Weight h = require_alpha_weight(p.h, "--h", mult.rank());
  Integer count = partition_count(mult, h);
  Report r;
  r.json["l"] = mult.rank();
  r.json["m"] = mult_json(mult);
  r.json["h"] = to_string(h);
  r.json["count"] = integer_json(count);
  r.text.push_back(to_string(count));
  return r;
}

Report cmd_volume(const Params& p) {
  auto mult = require_mult(p);
  Weight h = require_alpha_weight(p.h, "--h", mult.rank());
  Rational vol = ehrhart_volume(mult, h);
  Report r;
  r.json["l"] = mult.rank();
  r.json["m"] = mult_json(mult);
  r.json["h"] = to_string(h);
  r.json["volume"] = to_string(vol);
  r.text.push_back(to_string(vol));
  return r;
}

Report cmd_volpoly(const Params& p) {
  auto mult = require_mult(p);
  Polynomial v = volume_polynomial(p, mult);
  Report r;
  r.json["l"] = mult.rank();
  r.json["m"] = mult_json(mult);
  r.json["chamber"] = p.chamber;
  r.json["polynomial"] = to_string(v);
  r.text.push_back(to_string(v));
  return r;
}

Report cmd_multiplicity(const Params& p) {
  auto q = require_query(p);
  Report r;
  Integer mult = tensor_weight_multiplicity(q);
  bool reduced = sufficiently_close(q.lambdas, q.mu);
  r.json["multiplicity"] = integer_json(mult);
  r.json["reduced_to_partition_function"] = reduced;
  r.text.push_back("multiplicity: " + to_string(mult));
  r.text.push_back(std::string("reduced_to_partition_function: ") + (reduced ? "true" : "false"));
  if (reduced) {
    Integer count = partition_count(MultiplicityMatrix::uniform(q.rank(), q.factors()), q.lambda_sum() - q.mu);
    r.json["partition_count"] = integer_json(count);
    if (count != mult) {
      r.status = kFalsified;
      r.text.push_back("FALSIFIED: multiplicity differs from p_{l,n}(lambda - mu) = " + to_string(count));
    }
    if (p.kmax) {
      Json probe = Json::array();
      std::string line = "probe:";
      for (const auto& x : asymptotic_volume_probe(q, *p.kmax)) {
        probe.push_back(to_string(x));
        line += " " + to_string(x);
      }
      r.json["asymptotic_probe"] = probe;
      r.text.push_back(line);
    }
  }
  return r;
}

Report cmd_close_check(const Params& p) {
  const Basis basis = require_basis(p);
  const int l = require_rank(p);
  if (p.lambdas.empty() || p.mu.empty()) throw ValidationError("--lambda and --mu are required");
  std::vector<Weight> lambdas;
  for (const auto& t : p.lambdas) lambdas.push_back(parse_weight(t, basis));
  Weight mu = parse_weight(p.mu, basis);
  if (mu.rank() != l) throw ValidationError("--mu has the wrong number of coordinates for --l");
  bool close = sufficiently_close(lambdas, mu);
  Weight diff = Weight::zero(l);
  for (const auto& lam : lambdas) diff += lam;
  diff -= mu;
  Report r;
  r.json["sufficiently_close"] = close;
  r.json["lambda_minus_mu"] = to_string(diff);
  r.json["in_positive_cone"] = in_positive_cone(diff);
  r.json["in_nice_chamber"] = in_nice_chamber(diff);
  r.text.push_back(std::string("sufficiently_close: ") + (close ? "true" : "false"));
  r.text.push_back("lambda - mu (alpha): " + to_string(diff));
  r.text.push_back(std::string("in_nice_chamber: ") + (in_nice_chamber(diff) ? "true" : "false"));
  return r;
}

Report cmd_betti(const Params& p) {
  auto mult = require_mult(p);
  Polynomial v = volume_polynomial(p, mult);
  auto betti = betti_numbers(v);
  Report r;
  r.json["formal_dimension"] = 2 * v.degree();
  r.json["betti"] = betti;
  r.json["poincare_polynomial"] = poincare_polynomial(betti);
  r.text.push_back(join(betti));
  r.text.push_back(poincare_polynomial(betti));
  return r;
}

Report cmd_pairings(const Params& p) {
  auto mult = require_mult(p);
  const int n = require_factors(p, mult);
  Polynomial v = volume_polynomial(p, mult);
  MergedCoordinateMap map(mult.rank(), n);
  Polynomial raw = map.pullback(v);
  const auto names = map.names();
  std::vector<Exponent> patterns;
  if (!p.exponents.empty()) {
    Exponent e;
    for (const auto& x : parse_rational_list(p.exponents)) {
      if (!is_integer(x) || x < 0) throw ValidationError("--exponents must be nonnegative integers");
      e.push_back(static_cast<int>(x.get_num().get_si()));
    }
    if (static_cast<int>(e.size()) != map.raw_variables())
      throw ValidationError("--exponents needs " + std::to_string(map.raw_variables()) + " entries");
    patterns.push_back(e);
  } else {
    // p_{1,1}^{d-1} against every raw generator.
    for (int k = 0; k < map.raw_variables(); ++k) {
      Exponent e(map.raw_variables(), 0);
      e[map.p_index(1, 1)] = v.degree() - 1;
      e[k] += 1;
      patterns.push_back(e);
    }
  }
  Report r;
  r.json["variables"] = names;
  r.json["pairings"] = Json::array();
  for (const auto& e : patterns) {
    Rational value = intersection_pairing(raw, e);
    r.json["pairings"].push_back(Json{{"exponents", e}, {"value", to_string(value)}});
    std::string label;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!label.empty()) label += " ";
      label += names[k] + (e[k] > 1 ? "^" + std::to_string(e[k]) : "");
    }
    r.text.push_back(label + ": " + to_string(value));
  }
  return r;
}

Report cmd_annihilator(const Params& p) {
  auto mult = require_mult(p);
  Polynomial v = volume_polynomial(p, mult);
  std::vector<int> degrees;
  if (p.degree) {
    if (*p.degree < 0) throw ValidationError("--degree must be nonnegative");
    degrees.push_back(*p.degree);
  } else {
    for (int k = 0; k <= v.degree(); ++k) degrees.push_back(k);
  }
  Report r;
  Json all = Json::array();
  for (int k : degrees) {
    Json basis = Json::array();
    std::string line = "degree " + std::to_string(k) + ":";
    for (const auto& op : annihilator_degree(v, k)) {
      basis.push_back(to_string(op));
      line += " [" + to_string(op) + "]";
    }
    all.push_back(Json{{"degree", k}, {"basis", basis}});
    r.text.push_back(line);
  }
  if (p.degree)
    r.json = all[0];
  else
    r.json["annihilator"] = all;
  return r;
}

Report cmd_solve_ode(const Params& p) {
  auto mult = require_mult(p);
  auto solution = solve_nice_volume_detailed(mult);
  Polynomial chamber = chamber_volume_polynomial(mult);
  Report r;
  bool matches = solution.volume == chamber;
  r.json["polynomial"] = to_string(solution.volume);
  r.json["kernel_dimension"] = solution.kernel_dimension;
  r.json["matches_chamber_polynomial"] = matches;
  r.text.push_back(to_string(solution.volume));
  if (!matches) {
    r.status = kFalsified;
    r.text.push_back("FALSIFIED: differs from the nice-chamber volume " + to_string(chamber));
  }
  return r;
}

Report cmd_verify_gen(const Params& p) {
  auto mult = require_mult(p);
  Polynomial v = volume_polynomial(p, mult);
  auto report = verify_generation(mult, v);
  Report r;
  Json rows = Json::array();
  for (const auto& d : report.degrees) {
    rows.push_back(Json{{"degree", d.degree}, {"ann_dim", d.ann_dim}, {"ideal_dim", d.ideal_dim}});
    r.text.push_back("degree " + std::to_string(d.degree) + ": ann " + std::to_string(d.ann_dim) + ", ideal " +
                     std::to_string(d.ideal_dim));
  }
  r.json["generation_check"] = rows;
  r.json["operators_annihilate"] = report.operators_annihilate;
  r.json["witness_coefficient"] = to_string(report.witness_coefficient);
  r.json["holds"] = report.holds();
  r.text.push_back("witness coefficient: " + to_string(report.witness_coefficient));
  if (!report.holds()) {
    r.status = kFalsified;
    r.text.push_back("FALSIFIED: " + report.failure_summary());
  }
  return r;
}

Report cmd_presentation(const Params& p) {
  const int l = require_rank(p);
  if (!p.n) throw ValidationError("--n is required");
  auto ideal = presentation_ideal(l, *p.n);
  Report r;
  Json expanded = Json::array();
  for (const auto& g : ideal.generators) expanded.push_back(to_string(g, "z"));
  auto h = hilbert_function(ideal);
  r.json["generators"] = ideal.factored;
  r.json["expanded"] = expanded;
  r.json["hilbert"] = h;
  for (std::size_t i = 0; i < ideal.generators.size(); ++i)
    r.text.push_back(ideal.factored[i] + " = " + to_string(ideal.generators[i], "z"));
  r.text.push_back("hilbert: " + join(h));
  return r;
}

Report cmd_cross_validate(const Params& p) {
  const int l = require_rank(p);
  if (!p.n) throw ValidationError("--n is required");
  if (*p.n < 1) throw ValidationError("--n must be at least 1");
  auto ideal = presentation_ideal(l, *p.n);
  auto cv = cross_validate(l, *p.n);
  Report r;
  r.json["generators"] = ideal.factored;
  r.json["hilbert"] = cv.hilbert;
  r.json["betti"] = cv.betti;
  r.json["relations_annihilate"] = cv.relations_annihilate;
  r.json["matches_dual_algebra"] = cv.hilbert_matches;
  r.text.push_back("hilbert: " + join(cv.hilbert));
  r.text.push_back("betti:   " + join(cv.betti));
  r.text.push_back(std::string("relations annihilate v: ") + (cv.relations_annihilate ? "true" : "false"));
  r.text.push_back(std::string("matches dual algebra: ") + (cv.hilbert_matches ? "true" : "false"));
  if (!cv.passed()) {
    r.status = kFalsified;
    r.text.push_back("FALSIFIED" + (cv.offending_degree ? " at degree " + std::to_string(*cv.offending_degree)
                                                         : std::string()));
  }
  return r;
}

void add_options(CLI::App* sub, Params& p) {
  sub->set_help_flag("--help", "print this help");
  sub->add_option("--l", p.l, "rank l of A_l");
  sub->add_option("--n", p.n, "uniform multiplicity / number of factors");
  sub->add_option("--m", p.m, "multiplicities m_{i,j}, comma list in (i,j) lexicographic order");
  sub->add_option("--h", p.h, "h in alpha coordinates (q-vector)");
  sub->add_option("--lambda", p.lambdas, "highest weight, repeatable");
  sub->add_option("--mu", p.mu, "weight mu");
  sub->add_option("--basis", p.basis, "basis of --lambda/--mu: alpha|fundamental");
  sub->add_option("--chamber", p.chamber, "nice|custom");
  sub->add_option("--samples", p.samples, "custom chamber points \"q1,q2;q1,q2;...\" in alpha coordinates");
  sub->add_option("--kmax", p.kmax, "largest scale for the asymptotic probe");
  sub->add_option("--format", p.format, "text|json");
  sub->add_option("--degree", p.degree, "operator degree (annihilator)");
  sub->add_option("--exponents", p.exponents, "pairing exponents over p_{i,j}, x_j");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Flow polytope volumes, Kostant partition functions and weight-variety cohomology"};
  app.set_help_flag("--help", "print this help");
  app.require_subcommand(1);
  Params p;
  using Handler = Report (*)(const Params&);
  const std::vector<std::pair<std::string, Handler>> commands = {
      {"partition", cmd_partition},     {"volume", cmd_volume},
      {"volpoly", cmd_volpoly},         {"multiplicity", cmd_multiplicity},
      {"close-check", cmd_close_check}, {"betti", cmd_betti},
      {"pairings", cmd_pairings},       {"annihilator", cmd_annihilator},
      {"solve-ode", cmd_solve_ode},     {"verify-gen", cmd_verify_gen},
      {"presentation", cmd_presentation}, {"cross-validate", cmd_cross_validate},
  };
  std::vector<CLI::App*> subs;
  for (const auto& [name, handler] : commands) {
    auto* sub = app.add_subcommand(name);
    add_options(sub, p);
    subs.push_back(sub);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kValidationError;
  }

  try {
    if (p.format != "text" && p.format != "json") throw ValidationError("--format must be text or json");
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (!subs[i]->parsed()) continue;
      Report r = commands[i].second(p);
      if (p.format == "json") {
        out << r.json.dump(2) << "\n";
      } else {
        for (const auto& line : r.text) out << line << "\n";
      }
      return r.status;
    }
    return kValidationError;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kValidationError;
  } catch (const FalsificationError& e) {
    err << "FALSIFIED: " << e.what() << "\n";
    return kFalsified;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace flowvol::cli
