#include "jv/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <string>

#include "jv/error.hpp"
#include "jv/parse.hpp"
#include "jv/render.hpp"

namespace jv {

namespace {

struct Globals {
  int n = 2;
  std::string format = "text";
  bool short_names = false;

  RenderOptions options() const {
    RenderOptions o;
    o.notation = format == "latex" ? Notation::Latex : Notation::Text;
    o.short_names = short_names;
    return o;
  }
  bool json() const { return format == "json"; }
};

bool looks_like_json(const std::string& s) {
  const auto p = s.find_first_not_of(" \t\n");
  return p != std::string::npos && (s[p] == '[' || s[p] == '{');
}

nlohmann::json parse_json(const std::string& s) {
  try {
    return nlohmann::json::parse(s);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

VermaVector read_vector(const std::string& s, const JacobiAlgebra& alg) {
  return looks_like_json(s) ? vector_from_json(parse_json(s), alg) : parse_vector(s, alg);
}

ConstraintSet read_constraints(const std::string& s) {
  return looks_like_json(s) ? constraints_from_json(parse_json(s)) : parse_constraints(s);
}

std::string as_vector(const std::string& combination, std::size_t terms, const RenderOptions& opt) {
  const std::string unit = opt.notation == Notation::Latex ? "v_0" : "v0";
  return terms > 1 ? "(" + combination + ") " + unit : combination + " " + unit;
}

void print_singular(const JacobiAlgebra& alg, const SingularReport& r, const Globals& g, std::ostream& out) {
  if (g.json()) {
    out << to_json(alg, r).dump(2) << '\n';
    return;
  }
  const RenderOptions opt = g.options();
  out << "weight: " << render_weight(r.weight, opt) << '\n';
  if (r.trivial) {
    out << "trivial: the lowest vector v0 itself, excluded from the search\n";
    out << "no singular vector\n";
    return;
  }
  out << "ansatz (" << r.monomials.size() << "):";
  for (std::size_t k = 0; k < r.monomials.size(); ++k)
    out << (k ? ", " : " ") << render(alg, r.monomials[k], opt);
  out << '\n';
  if (r.branches.empty()) {
    out << "no singular vector\n";
    return;
  }
  for (std::size_t b = 0; b < r.branches.size(); ++b) {
    const BranchReport& br = r.branches[b];
    out << "branch " << b + 1 << ":\n";
    for (const auto& e : br.branch.constraints.equations())
      out << "  constraint: " << render_constraint(e, opt) << " = 0\n";
    for (const auto& s : render_solved_form(br.branch.constraints, opt)) out << "  solved: " << s << '\n';
    for (const auto& kv : br.branch.kernel) {
      std::size_t terms = 0;
      for (Eigen::Index k = 0; k < kv.size(); ++k) terms += kv[k].is_zero() ? 0 : 1;
      out << "  vector: " << as_vector(render_combination(alg, r.monomials, kv, opt), terms, opt) << '\n';
    }
    std::string verdict = br.verified ? "yes" : "no";
    if (!br.branch.constraints.has_solved_form()) verdict = "unverifiable (no affine solved form)";
    out << "  verified: " << verdict << '\n';
  }
}

void print_verify(const JacobiAlgebra& alg, const SingularityReport& r, const Globals& g, std::ostream& out) {
  if (g.json()) {
    out << to_json(alg, r).dump(2) << '\n';
    return;
  }
  const RenderOptions opt = g.options();
  if (!r.verifiable) {
    out << r.note << '\n';
    return;
  }
  out << "singular: " << (r.singular ? "yes" : "no") << '\n';
  if (!r.note.empty()) out << "note: " << r.note << '\n';
  for (const auto& c : r.checks)
    out << render(alg, alg.generator(c.generator), opt) << ": " << render(alg, c.residual, opt) << '\n';
}

}  // namespace

int run_cli(int argc, const char* const argv[], std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact singular vectors of lowest-weight Verma modules over the Jacobi algebra", "jv"};
  Globals g;
  app.add_option("--n", g.n, "Rank n of the Jacobi algebra")->check(CLI::Range(1, 9))->capture_default_str();
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "latex", "json"}))
      ->capture_default_str();
  app.add_flag("--short-names", g.short_names, "Use b/c/d/h aliases in LaTeX output (n = 2)");
  app.require_subcommand(1);

  std::string x, y, word, vector, weight, constraints;
  std::size_t budget = SolveOptions{}.branch_budget;

  auto* cmd_bracket = app.add_subcommand("bracket", "Lie bracket [X, Y]")->fallthrough();
  cmd_bracket->add_option("X", x)->required();
  cmd_bracket->add_option("Y", y)->required();

  auto* cmd_order = app.add_subcommand("normal-order", "PBW normal form of an expression")->fallthrough();
  cmd_order->add_option("WORD", word)->required();

  auto* cmd_act = app.add_subcommand("act", "Action of a generator on a Verma module vector")->fallthrough();
  cmd_act->add_option("X", x)->required();
  cmd_act->add_option("VECTOR", vector)->required();

  auto* cmd_singular = app.add_subcommand("singular", "Search singular vectors of a given weight")->fallthrough();
  cmd_singular->add_option("--weight", weight, "e.g. 2d1, d1-d2, 2,0")->required();
  cmd_singular->add_option("--branch-budget", budget, "Maximum number of case-split branches")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* cmd_verify = app.add_subcommand("verify", "Check the lowest-weight conditions for a vector")->fallthrough();
  cmd_verify->add_option("VECTOR", vector)->required();
  cmd_verify->add_option("--constraints", constraints, "e.g. \"L2 = L1\" or a JSON constraint object");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "jv: usage error: " << e.what() << '\n';
    return kExitParse;
  }

  try {
    const JacobiAlgebra alg(g.n);
    const RenderOptions opt = g.options();
    if (cmd_bracket->parsed()) {
      const Generator gx = parse_generator(x, g.n), gy = parse_generator(y, g.n);
      const UElement r = lift(alg, alg.bracket(gx, gy));
      if (g.json()) {
        nlohmann::ordered_json j;
        j["x"] = render(alg, gx);
        j["y"] = render(alg, gy);
        j["terms"] = to_json(alg, r);
        j["rendered"] = render(alg, r);
        out << j.dump(2) << '\n';
      } else {
        out << render(alg, r, opt) << '\n';
      }
    } else if (cmd_order->parsed()) {
      const UElement r = parse_element(word, alg);
      if (g.json()) {
        nlohmann::ordered_json j;
        j["terms"] = to_json(alg, r);
        j["rendered"] = render(alg, r);
        out << j.dump(2) << '\n';
      } else {
        out << render(alg, r, opt) << '\n';
      }
    } else if (cmd_act->parsed()) {
      const Generator gx = parse_generator(x, g.n);
      const VermaVector r = act(alg, gx, read_vector(vector, alg));
      if (g.json()) {
        nlohmann::ordered_json j;
        j["generator"] = render(alg, gx);
        j["vector"] = to_json(alg, r);
        j["rendered"] = render(alg, r);
        out << j.dump(2) << '\n';
      } else {
        out << render(alg, r, opt) << '\n';
      }
    } else if (cmd_singular->parsed()) {
      const Weight w = parse_weight(weight, g.n);
      SolveOptions so;
      so.branch_budget = budget;
      print_singular(alg, find_singular_vectors(alg, w, so), g, out);
    } else if (cmd_verify->parsed()) {
      const VermaVector v = read_vector(vector, alg);
      const ConstraintSet c = read_constraints(constraints);
      print_verify(alg, is_singular(alg, v, c), g, out);
    }
  } catch (const ParseError& e) {
    err << "jv: parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const BudgetExceeded& e) {
    err << "jv: " << e.what() << " (" << e.partial().size() << " branch(es) finished; raise --branch-budget)\n";
    return kExitBudget;
  } catch (const Error& e) {
    err << "jv: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace jv
