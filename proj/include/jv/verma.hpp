#ifndef JV_VERMA_HPP
#define JV_VERMA_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jv/error.hpp"
#include "jv/pbw.hpp"
#include "jv/polynomial.hpp"

namespace jv {

/// Vector of the lowest-weight Verma module V^Lambda with formal weight:
/// a combination of positive-only PBW monomials applied to v0, with
/// polynomial coefficients in L1..Ln (Li = Lambda(H_i)).
class VermaVector {
 public:
  using TermMap = std::map<PbwMonomial, Poly>;

  VermaVector() = default;
  /// v0 itself.
  static VermaVector lowest();
  static VermaVector term(const PbwMonomial& m, const Poly& c);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const PbwMonomial& m, const Poly& c);
  /// Coefficient of m (zero when absent).
  Poly coefficient(const PbwMonomial& m) const;

  /// Applies a polynomial map to every coefficient (substitution, evaluation).
  template <class F>
  VermaVector map_coefficients(F&& f) const {
    VermaVector out;
    for (const auto& [m, c] : terms_) out.add_term(m, f(c));
    return out;
  }

  VermaVector& operator+=(const VermaVector& o);
  VermaVector& operator-=(const VermaVector& o);
  VermaVector& operator*=(const Poly& c);
  friend VermaVector operator+(VermaVector a, const VermaVector& b) { return a += b; }
  friend VermaVector operator-(VermaVector a, const VermaVector& b) { return a -= b; }
  friend VermaVector operator*(VermaVector a, const Poly& c) { return a *= c; }
  friend VermaVector operator*(const Poly& c, VermaVector a) { return a *= c; }
  friend bool operator==(const VermaVector&, const VermaVector&) = default;

 private:
  TermMap terms_;
};

/// Raised by vector_weight for vectors whose monomials differ in weight.
class InhomogeneousError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// x . v, computed by normal-ordering x * m for each monomial m of v and
/// evaluating on v0: terms ending in a negative generator vanish, Cartan
/// factors K0_ii become Li.
VermaVector act(const JacobiAlgebra& alg, std::size_t gen, const VermaVector& v);
VermaVector act(NormalOrderer& orderer, std::size_t gen, const VermaVector& v);
VermaVector act(const JacobiAlgebra& alg, const Generator& x, const VermaVector& v);

/// u . v for an element of U(g_n). Every coefficient of u must be a
/// polynomial; throws DomainError otherwise.
VermaVector apply(const JacobiAlgebra& alg, const UElement& u, const VermaVector& v);

/// Common weight of all monomials (relative to v0). Throws DomainError for
/// the zero vector and InhomogeneousError naming two disagreeing monomials.
Weight vector_weight(const JacobiAlgebra& alg, const VermaVector& v);

/// Polynomial conditions on L1..Ln.
///
/// Equations are stored squarefree, content-free and sorted. When the
/// equations can be solved by successive affine eliminations, `solved_form`
/// maps each eliminated variable to an affine expression in the variables
/// that remain; each right-hand side is fully reduced, so one substitution
/// pass per variable is enough. With a solved form, the stored equations are
/// its rows Li - rhs (made content-free), which makes them canonical.
class ConstraintSet {
 public:
  ConstraintSet() : solved_(std::map<std::size_t, Poly>{}) {}
  /// Canonicalizes and attempts the affine solve. Throws DomainError if the
  /// equations are inconsistent (a nonzero constant appears).
  explicit ConstraintSet(std::vector<Poly> equations);

  const std::vector<Poly>& equations() const { return equations_; }
  bool empty() const { return equations_.empty(); }
  bool has_solved_form() const { return solved_.has_value(); }
  /// Throws DomainError when there is no solved form.
  const std::map<std::size_t, Poly>& solved_form() const;

  /// Substitutes the solved form. Throws DomainError when there is none.
  Poly reduce(const Poly& p) const;
  RatFunc reduce(const RatFunc& p) const;
  /// Whether every equation vanishes at the point (point[k] = value of L(k+1)).
  bool satisfied_by(std::span<const Rat> point) const;
  /// A point on the solution set: free variables take the given values and
  /// solved variables are computed from them. Requires a solved form.
  std::vector<Rat> complete_point(std::vector<Rat> free_values) const;

 private:
  std::vector<Poly> equations_;
  std::optional<std::map<std::size_t, Poly>> solved_;
};

/// Result of checking X . v = 0 for every negative generator X.
struct SingularCheck {
  std::size_t generator = 0;
  VermaVector residual;  // act(X, v) after substituting the constraints
  bool vanishes = false;
};

struct SingularityReport {
  bool verifiable = true;
  bool singular = false;
  std::vector<SingularCheck> checks;
  std::string note;
};

/// Verifies the lowest-weight conditions for v under the constraints.
/// Without a solved form the report is marked unverifiable.
SingularityReport is_singular(const JacobiAlgebra& alg, const VermaVector& v, const ConstraintSet& c);

}  // namespace jv

#endif  // JV_VERMA_HPP
