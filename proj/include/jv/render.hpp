#ifndef JV_RENDER_HPP
#define JV_RENDER_HPP

#include <string>

#include <json.hpp>

#include "jv/singular.hpp"

namespace jv {

enum class Notation { Text, Latex };

/// Text output always uses the n = 2 aliases (b+1, c+, d+, h1, ...) and
/// bracket syntax otherwise, so it parses back. LaTeX uses K^+_{12} style
/// names unless `short_names` asks for the aliases.
struct RenderOptions {
  Notation notation = Notation::Text;
  bool short_names = false;
};

std::string render(const JacobiAlgebra& alg, const Generator& g, const RenderOptions& opt = {});
std::string render(const JacobiAlgebra& alg, const PbwMonomial& m, const RenderOptions& opt = {});
std::string render(const Poly& p, const RenderOptions& opt = {});
std::string render(const RatFunc& f, const RenderOptions& opt = {});
std::string render(const JacobiAlgebra& alg, const UElement& u, const RenderOptions& opt = {});
/// "u v0" or "(u) v0"; "0" for the zero vector.
std::string render(const JacobiAlgebra& alg, const VermaVector& v, const RenderOptions& opt = {});
/// "2d1", "d1-d2", "3/2d1", "0".
std::string render_weight(const Weight& w, const RenderOptions& opt = {});

/// Constraint polynomial, factored when it splits into rational linear forms.
std::string render_constraint(const Poly& p, const RenderOptions& opt = {});
/// "L2 = L1", one string per solved variable.
std::vector<std::string> render_solved_form(const ConstraintSet& c, const RenderOptions& opt = {});

/// The vector sum_k coeffs[k] monomials[k] as an element of U(g_n), e.g.
/// "(a+2)^2 - 2 b+2".
std::string render_combination(const JacobiAlgebra& alg, const std::vector<PbwMonomial>& monomials,
                               const Vector<RatFunc>& coeffs, const RenderOptions& opt = {});

nlohmann::ordered_json to_json(const JacobiAlgebra& alg, const VermaVector& v);
nlohmann::ordered_json to_json(const JacobiAlgebra& alg, const UElement& u);
nlohmann::ordered_json to_json(const ConstraintSet& c);
nlohmann::ordered_json to_json(const JacobiAlgebra& alg, const SingularityReport& r);
nlohmann::ordered_json to_json(const JacobiAlgebra& alg, const SingularReport& r);

/// Inverses of the VermaVector and constraint JSON shapes.
VermaVector vector_from_json(const nlohmann::json& j, const JacobiAlgebra& alg);
ConstraintSet constraints_from_json(const nlohmann::json& j);

}  // namespace jv

#endif  // JV_RENDER_HPP
