#include "jv/render.hpp"

#include <algorithm>

#include "jv/error.hpp"
#include "jv/parse.hpp"

namespace jv {

namespace {

bool is_latex(const RenderOptions& opt) { return opt.notation == Notation::Latex; }

std::string latex_rat(const Rat& r) {
  if (r.is_integer()) return r.str();
  const Rat a = r.abs();
  const std::string f = "\\frac{" + a.numerator().get_str() + "}{" + a.denominator().get_str() + "}";
  return r.sign() < 0 ? "-" + f : f;
}

std::string index_pair(int i, int j, bool latex) {
  if (latex) {
    if (i < 10 && j < 10) return "_{" + std::to_string(i) + std::to_string(j) + "}";
    return "_{" + std::to_string(i) + "," + std::to_string(j) + "}";
  }
  return "[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

std::string alias(const Generator& g, bool latex) {
  const bool plus = g.family == Family::KPlus;
  const std::string sign = latex ? (plus ? "^+" : "^-") : (plus ? "+" : "-");
  switch (g.family) {
    case Family::KPlus:
    case Family::KMinus:
      if (g.i == g.j) return "b" + sign + (latex ? "_" : "") + std::to_string(g.i);
      return "c" + sign;
    case Family::KZero:
      if (g.i == g.j) return "h" + std::string(latex ? "_" : "") + std::to_string(g.i);
      return g.i < g.j ? (latex ? "d^+" : "d+") : (latex ? "d^-" : "d-");
    default:
      return {};
  }
}

bool needs_parens(const std::string& name) { return name.find_first_of("+-[") != std::string::npos; }

// Whether a coefficient reads as a signed monomial, so it can be printed
// with the sign pulled out and without parentheses.
bool is_monomial_coeff(const RatFunc& c) { return c.den().is_constant() && c.num().terms().size() == 1; }

// Sum of coefficient * monomial-name terms with signs folded into the joins.
std::string join_terms(const std::vector<std::pair<RatFunc, std::string>>& terms, const RenderOptions& opt) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [coeff, name] : terms) {
    RatFunc c = coeff;
    bool negative = false;
    if (is_monomial_coeff(c) && c.num().leading_coefficient().sign() < 0) {
      negative = true;
      c = -c;
    }
    std::string body;
    if (name.empty()) {
      body = render(c, opt);
      if (!is_monomial_coeff(c) && !first) body = "(" + body + ")";
    } else if (c == RatFunc(1)) {
      body = name;
    } else if (is_monomial_coeff(c) || !c.den().is_constant()) {
      body = render(c, opt) + " " + name;
    } else {
      body = "(" + render(c, opt) + ") " + name;
    }
    if (first)
      out = negative ? "-" + body : body;
    else
      out += (negative ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

// Terms of a vector in the ansatz listing order.
std::vector<std::pair<PbwMonomial, Poly>> graded_terms(const JacobiAlgebra& alg, const VermaVector& v) {
  std::vector<std::pair<PbwMonomial, Poly>> terms(v.terms().begin(), v.terms().end());
  std::stable_sort(terms.begin(), terms.end(),
                   [&](const auto& a, const auto& b) { return graded_less(alg, a.first, b.first); });
  return terms;
}

nlohmann::ordered_json vector_entries(const JacobiAlgebra& alg, const VermaVector& v) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [m, c] : graded_terms(alg, v)) arr.push_back({{"monomial", render(alg, m)}, {"coeff", c.str()}});
  return arr;
}

}  // namespace

std::string render(const JacobiAlgebra& alg, const Generator& g, const RenderOptions& opt) {
  const bool latex = is_latex(opt);
  const bool use_alias = alg.n() == 2 && g.family != Family::APlus && g.family != Family::AMinus &&
                         (!latex || opt.short_names);
  if (use_alias) return alias(g, latex);
  switch (g.family) {
    case Family::APlus:
    case Family::AMinus: {
      const bool plus = g.family == Family::APlus;
      if (latex) return std::string(plus ? "a^+" : "a^-") + "_{" + std::to_string(g.i) + "}";
      const std::string idx = g.i < 10 ? std::to_string(g.i) : "[" + std::to_string(g.i) + "]";
      return std::string(plus ? "a+" : "a-") + idx;
    }
    case Family::KPlus:
      return (latex ? "K^+" : "K+") + index_pair(g.i, g.j, latex);
    case Family::KMinus:
      return (latex ? "K^-" : "K-") + index_pair(g.i, g.j, latex);
    case Family::KZero:
      return (latex ? "K^0" : "K0") + index_pair(g.i, g.j, latex);
  }
  throw ConsistencyError("unknown generator family");
}

std::string render(const JacobiAlgebra& alg, const PbwMonomial& m, const RenderOptions& opt) {
  if (m.empty()) return "1";
  std::string out;
  for (const auto& [gen, power] : m.powers()) {
    if (!out.empty()) out += ' ';
    const std::string name = render(alg, alg.generator(gen), opt);
    if (power == 1) {
      out += name;
    } else if (is_latex(opt)) {
      out += "(" + name + ")^{" + std::to_string(power) + "}";
    } else {
      out += (needs_parens(name) ? "(" + name + ")" : name) + "^" + std::to_string(power);
    }
  }
  return out;
}

std::string render(const Poly& p, const RenderOptions& opt) { return is_latex(opt) ? p.latex() : p.str(); }

std::string render(const RatFunc& f, const RenderOptions& opt) { return is_latex(opt) ? f.latex() : f.str(); }

std::string render(const JacobiAlgebra& alg, const UElement& u, const RenderOptions& opt) {
  std::vector<std::pair<RatFunc, std::string>> terms;
  for (const auto& [m, c] : u.terms()) terms.emplace_back(c, m.empty() ? std::string() : render(alg, m, opt));
  return join_terms(terms, opt);
}

std::string render(const JacobiAlgebra& alg, const VermaVector& v, const RenderOptions& opt) {
  if (v.is_zero()) return "0";
  const std::string unit = is_latex(opt) ? "v_0" : "v0";
  std::vector<std::pair<RatFunc, std::string>> terms;
  for (const auto& [m, c] : graded_terms(alg, v))
    terms.emplace_back(c, m.empty() ? std::string() : render(alg, m, opt));
  const std::string body = join_terms(terms, opt);
  if (terms.size() == 1 && terms.front().second.empty() && terms.front().first == RatFunc(1)) return unit;
  // A lone term already brackets a compound coefficient: "(L1 + 1/2) d+ v0".
  if (terms.size() == 1 && (is_monomial_coeff(terms.front().first) || !terms.front().second.empty()))
    return body + " " + unit;
  return "(" + body + ") " + unit;
}

std::string render_weight(const Weight& w, const RenderOptions& opt) {
  std::string out;
  for (Eigen::Index k = 0; k < w.size(); ++k) {
    const Rat& c = w[k];
    if (c.is_zero()) continue;
    const std::string sym = is_latex(opt) ? "\\delta_{" + std::to_string(k + 1) + "}" : "d" + std::to_string(k + 1);
    const Rat mag = c.abs();
    if (c.sign() < 0)
      out += is_latex(opt) && !out.empty() ? " - " : "-";
    else if (!out.empty())
      out += is_latex(opt) ? " + " : "+";
    if (!mag.is_one()) out += is_latex(opt) ? latex_rat(mag) : mag.str();
    out += sym;
  }
  return out.empty() ? "0" : out;
}

std::string render_constraint(const Poly& p, const RenderOptions& opt) {
  if (p.total_degree() <= 1) return render(p, opt);
  const LinearSplit split = split_linear_factors(p);
  if (!split.rest.is_constant() || split.linear.size() < 2) return render(p, opt);
  std::string out;
  const Rat scale = split.rest.constant_term();
  if (!scale.is_one()) out += is_latex(opt) ? latex_rat(scale) : scale.str() + "*";
  for (std::size_t k = 0; k < split.linear.size(); ++k) {
    if (k > 0 && !is_latex(opt)) out += "*";
    out += "(" + render(split.linear[k], opt) + ")";
  }
  return out;
}

std::vector<std::string> render_solved_form(const ConstraintSet& c, const RenderOptions& opt) {
  std::vector<std::string> out;
  if (!c.has_solved_form()) return out;
  for (const auto& [var, rhs] : c.solved_form()) out.push_back(render(Poly::lambda(var), opt) + " = " + render(rhs, opt));
  return out;
}

std::string render_combination(const JacobiAlgebra& alg, const std::vector<PbwMonomial>& monomials,
                               const Vector<RatFunc>& coeffs, const RenderOptions& opt) {
  std::vector<std::pair<RatFunc, std::string>> terms;
  for (std::size_t k = 0; k < monomials.size(); ++k) {
    const RatFunc& c = coeffs[static_cast<Eigen::Index>(k)];
    if (c.is_zero()) continue;
    terms.emplace_back(c, monomials[k].empty() ? std::string() : render(alg, monomials[k], opt));
  }
  return join_terms(terms, opt);
}

nlohmann::ordered_json to_json(const JacobiAlgebra& alg, const VermaVector& v) { return vector_entries(alg, v); }

nlohmann::ordered_json to_json(const JacobiAlgebra& alg, const UElement& u) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [m, c] : u.terms()) arr.push_back({{"monomial", render(alg, m)}, {"coeff", c.str()}});
  return arr;
}

nlohmann::ordered_json to_json(const ConstraintSet& c) {
  nlohmann::ordered_json j;
  auto eqs = nlohmann::ordered_json::array();
  for (const auto& e : c.equations()) eqs.push_back(render_constraint(e));
  j["equations"] = eqs;
  if (c.has_solved_form()) j["solved_form"] = render_solved_form(c);
  return j;
}

nlohmann::ordered_json to_json(const JacobiAlgebra& alg, const SingularityReport& r) {
  nlohmann::ordered_json j;
  j["verifiable"] = r.verifiable;
  j["singular"] = r.singular;
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"generator", render(alg, alg.generator(c.generator))},
                      {"vanishes", c.vanishes},
                      {"residual", vector_entries(alg, c.residual)}});
  }
  j["checks"] = checks;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

nlohmann::ordered_json to_json(const JacobiAlgebra& alg, const SingularReport& r) {
  nlohmann::ordered_json j;
  auto weight = nlohmann::ordered_json::array();
  for (Eigen::Index k = 0; k < r.weight.size(); ++k) weight.push_back(r.weight[k].str());
  j["weight"] = weight;
  auto monomials = nlohmann::ordered_json::array();
  for (const auto& m : r.monomials) monomials.push_back(render(alg, m));
  j["monomials"] = monomials;
  auto branches = nlohmann::ordered_json::array();
  for (const auto& b : r.branches) {
    nlohmann::ordered_json jb;
    auto cons = nlohmann::ordered_json::array();
    for (const auto& e : b.branch.constraints.equations()) cons.push_back(render_constraint(e));
    jb["constraints"] = cons;
    jb["solved_form"] = render_solved_form(b.branch.constraints);
    auto vectors = nlohmann::ordered_json::array();
    auto rendered = nlohmann::ordered_json::array();
    for (const auto& kv : b.branch.kernel) {
      auto coeffs = nlohmann::ordered_json::array();
      for (Eigen::Index k = 0; k < kv.size(); ++k) coeffs.push_back(kv[k].str());
      vectors.push_back(coeffs);
      rendered.push_back(render_combination(alg, r.monomials, kv));
    }
    jb["vectors"] = vectors;
    jb["verified"] = b.verified;
    jb["rendered"] = rendered;
    branches.push_back(jb);
  }
  j["branches"] = branches;
  j["trivial"] = r.trivial;
  return j;
}

VermaVector vector_from_json(const nlohmann::json& j, const JacobiAlgebra& alg) {
  if (!j.is_array()) throw ParseError("vector JSON must be a list of {monomial, coeff} objects");
  VermaVector v;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("monomial") || !t.contains("coeff") || !t["monomial"].is_string() ||
        !t["coeff"].is_string())
      throw ParseError("vector JSON entry needs string fields 'monomial' and 'coeff': " + t.dump());
    const PbwMonomial m = parse_monomial(t["monomial"].get<std::string>(), alg);
    for (auto g : m.factors())
      if (alg.gen_class(g) != GenClass::Positive)
        throw ParseError("monomial " + t["monomial"].get<std::string>() + " is not positive-only");
    v.add_term(m, parse_poly(t["coeff"].get<std::string>()));
  }
  return v;
}

ConstraintSet constraints_from_json(const nlohmann::json& j) {
  const nlohmann::json* list = &j;
  if (j.is_object()) {
    if (j.contains("equations"))
      list = &j["equations"];
    else if (j.contains("solved_form"))
      list = &j["solved_form"];
    else
      throw ParseError("constraint JSON object needs 'equations' or 'solved_form'");
  }
  if (!list->is_array()) throw ParseError("constraint JSON must be a list of polynomial strings");
  std::string joined;
  for (const auto& e : *list) {
    if (!e.is_string()) throw ParseError("constraint JSON entries must be strings: " + e.dump());
    const std::string s = e.get<std::string>();
    if (s.find_first_of(",;") != std::string::npos) throw ParseError("unexpected separator in constraint '" + s + "'");
    joined += s + ";";
  }
  return parse_constraints(joined);
}

}  // namespace jv
