#ifndef JV_SINGULAR_HPP
#define JV_SINGULAR_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jv/eigen_support.hpp"
#include "jv/verma.hpp"

namespace jv {

/// Positive-only PBW monomials of weight w, sorted by graded_less.
///
/// Enumeration is bounded by the height functional
/// phi(w) = sum_k (n + 1 - k) w_k, which is a positive integer on every
/// positive generator (K0_ij with i < j included), so no monomial of weight w
/// has more than phi(w) factors.
std::vector<PbwMonomial> enumerate_ansatz(const JacobiAlgebra& alg, const Weight& w);

/// Homogeneous linear system M(L) nu = 0 for the ansatz sum_k nu_k m_k v0.
/// Row r is the coefficient of `rows[r].second` in act(X, .) with X the
/// negative generator `rows[r].first`; zero rows are not stored.
struct AnsatzSystem {
  Weight weight;
  std::vector<PbwMonomial> monomials;
  Matrix<Poly> matrix;
  std::vector<std::pair<std::size_t, PbwMonomial>> rows;
};

AnsatzSystem assemble_system(const JacobiAlgebra& alg, const Weight& w);

/// One leaf of the case tree: the locus where `constraints` hold and every
/// polynomial in `nonvanishing` is nonzero, with a basis of the kernel there.
struct SolutionBranch {
  ConstraintSet constraints;
  /// Kernel basis over the function field of the locus; each vector is
  /// scaled so its last non-vanishing coordinate is 1.
  std::vector<Vector<RatFunc>> kernel;
  std::vector<Poly> nonvanishing;
};

struct SolveOptions {
  std::size_t branch_budget = 64;
};

/// Raised when the case tree needs more branches than the budget allows.
/// Carries the branches finished so far and the constraint sets of the
/// branches that were never explored.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::vector<SolutionBranch> partial, std::vector<std::vector<Poly>> unexplored);
  const std::vector<SolutionBranch>& partial() const { return partial_; }
  const std::vector<std::vector<Poly>>& unexplored() const { return unexplored_; }

 private:
  std::vector<SolutionBranch> partial_;
  std::vector<std::vector<Poly>> unexplored_;
};

/// Fraction-free elimination with case splitting on pivots.
///
/// Pivots are chosen by lowest total degree, then smallest column, then
/// smallest row. A constant pivot never splits. A nonconstant pivot p yields
/// the branch "p != 0", explored first, plus one branch "l = 0" for each
/// rational affine factor l of p, where l is solved for its highest-index
/// variable and substituted. A factor of p without rational affine factors
/// gives a single branch that keeps it as a curve constraint; on that branch
/// zero-testing is divisibility by the curve polynomial and no further
/// splitting happens. Only branches with a nontrivial kernel are returned,
/// in canonical order.
std::vector<SolutionBranch> solve_parametric(const AnsatzSystem& sys, const SolveOptions& options = {});

/// Verification outcome of one kernel vector of a branch.
struct VectorCheck {
  VermaVector vector;  // denominators cleared
  SingularityReport report;
};

struct BranchReport {
  SolutionBranch branch;
  std::vector<VectorCheck> checks;
  bool verified = false;
};

struct SingularReport {
  Weight weight;
  std::vector<PbwMonomial> monomials;
  std::vector<BranchReport> branches;
  /// True for the zero weight: v0 itself, excluded from the search.
  bool trivial = false;
};

/// enumerate -> assemble -> solve -> verify every branch with is_singular.
SingularReport find_singular_vectors(const JacobiAlgebra& alg, const Weight& w,
                                     const SolveOptions& options = {});

/// Kernel vector with denominators cleared, as an element of V^Lambda.
VermaVector to_verma_vector(const std::vector<PbwMonomial>& monomials, const Vector<RatFunc>& coeffs);

}  // namespace jv

#endif  // JV_SINGULAR_HPP
