#include "jv/singular.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

namespace jv {

namespace {

// Height functional; positive integer on every positive generator.
Rat height(const Weight& w) {
  const auto n = w.size();
  Rat h;
  for (Eigen::Index k = 0; k < n; ++k) h += Rat(static_cast<long>(n - k)) * w[k];
  return h;
}

bool is_zero_weight(const Weight& w) {
  for (Eigen::Index k = 0; k < w.size(); ++k)
    if (!w[k].is_zero()) return false;
  return true;
}

bool is_integral(const Weight& w) {
  for (Eigen::Index k = 0; k < w.size(); ++k)
    if (!w[k].is_integer()) return false;
  return true;
}

void enumerate(const JacobiAlgebra& alg, std::size_t pos, const Weight& remaining,
               std::vector<std::pair<std::size_t, unsigned>>& powers, std::vector<PbwMonomial>& out) {
  const auto& positives = alg.positives();
  if (pos == positives.size()) {
    if (is_zero_weight(remaining)) out.push_back(PbwMonomial::from_powers(powers));
    return;
  }
  const std::size_t gen = positives[pos];
  const Weight& gw = alg.weight(gen);
  const Rat budget = height(remaining);
  const Rat step = height(gw);
  Weight rest = remaining;
  for (unsigned e = 0; Rat(static_cast<long>(e)) * step <= budget; ++e) {
    if (e > 0) powers.emplace_back(gen, e);
    enumerate(alg, pos + 1, rest, powers, out);
    if (e > 0) powers.pop_back();
    rest -= gw;
  }
}

// State of one path through the case tree.
struct Branch {
  Matrix<Poly> m;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
  Poly prev_pivot = Poly(1);
  std::vector<Poly> affine;                  // canonical affine constraints
  std::map<std::size_t, Poly> solved;        // variable -> affine rhs
  std::optional<Poly> curve;                 // constraint without affine factors
  std::vector<Poly> nonvanishing;
};

bool vanishes(const Branch& b, const Poly& p) {
  if (p.is_zero()) return true;
  return b.curve && divide_exact(p, *b.curve).has_value();
}

bool vanishes(const Branch& b, const RatFunc& p) { return vanishes(b, p.num()); }

// Adds l = 0 (affine, already reduced) and substitutes it everywhere.
// Returns false when the branch becomes empty.
bool add_affine(Branch& b, const Poly& l) {
  const Poly lin = content_free(l);
  const std::size_t var = lin.max_variable();
  const Poly rhs = Poly::lambda(var) - lin;
  for (auto& [v, r] : b.solved) r = r.substitute(var, rhs);
  b.solved[var] = rhs;
  b.affine.push_back(lin);
  b.m = substitute(b.m, var, rhs);
  b.prev_pivot = b.prev_pivot.substitute(var, rhs);
  for (auto& g : b.nonvanishing) {
    g = g.substitute(var, rhs);
    if (g.is_zero()) return false;
  }
  return !b.prev_pivot.is_zero();
}

bool add_curve(Branch& b, const Poly& q) {
  b.curve = q;
  for (const auto& g : b.nonvanishing)
    if (vanishes(b, g)) return false;
  return true;
}

void eliminate(Branch& b, Eigen::Index r, Eigen::Index c) {
  const auto top = static_cast<Eigen::Index>(b.rank);
  if (r != top) b.m.row(r).swap(b.m.row(top));
  const Poly p = b.m(top, c);
  for (Eigen::Index i = top + 1; i < b.m.rows(); ++i) {
    const Poly f = b.m(i, c);
    for (Eigen::Index j = 0; j < b.m.cols(); ++j) {
      Poly v = p * b.m(i, j);
      if (!f.is_zero()) v -= f * b.m(top, j);
      if (!b.prev_pivot.is_constant()) {
        auto q = divide_exact(v, b.prev_pivot);
        if (!q) throw ConsistencyError("fraction-free elimination: inexact division");
        v = std::move(*q);
      } else {
        v *= b.prev_pivot.constant_term().inverse();
      }
      b.m(i, j) = std::move(v);
    }
  }
  b.prev_pivot = p;
  b.pivot_cols.push_back(static_cast<std::size_t>(c));
  ++b.rank;
}

std::vector<Vector<RatFunc>> kernel_of(const Branch& b) {
  const auto cols = static_cast<std::size_t>(b.m.cols());
  std::vector<bool> is_pivot(cols, false);
  for (auto c : b.pivot_cols) is_pivot[c] = true;
  std::vector<Vector<RatFunc>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector<RatFunc> x = Vector<RatFunc>::Constant(b.m.cols(), RatFunc(0));
    x[f] = RatFunc(1);
    for (std::size_t k = b.rank; k-- > 0;) {
      const std::size_t pc = b.pivot_cols[k];
      RatFunc sum;
      for (std::size_t j = 0; j < cols; ++j) {
        if (j == pc || x[j].is_zero()) continue;
        const Poly& a = b.m(k, j);
        if (vanishes(b, a)) continue;
        sum += RatFunc(a) * x[j];
      }
      x[pc] = -sum / RatFunc(b.m(k, pc));
    }
    Eigen::Index last = x.size() - 1;
    while (last >= 0 && vanishes(b, x[last])) --last;
    const RatFunc scale = x[last];
    for (auto& e : x) e = vanishes(b, e) ? RatFunc(0) : e / scale;
    basis.push_back(std::move(x));
  }
  return basis;
}

SolutionBranch finish(const Branch& b) {
  std::vector<Poly> eqs = b.affine;
  if (b.curve) eqs.push_back(*b.curve);
  SolutionBranch out{ConstraintSet(std::move(eqs)), kernel_of(b), b.nonvanishing};
  std::sort(out.nonvanishing.begin(), out.nonvanishing.end());
  out.nonvanishing.erase(std::unique(out.nonvanishing.begin(), out.nonvanishing.end()),
                         out.nonvanishing.end());
  return out;
}

std::pair<std::size_t, std::vector<std::string>> branch_key(const SolutionBranch& b) {
  std::vector<std::string> eqs;
  for (const auto& e : b.constraints.equations()) eqs.push_back(e.str());
  return {eqs.size(), eqs};
}

// a's constraints all hold on b's locus and a's kernel restricts to b's.
bool subsumes(const SolutionBranch& a, const SolutionBranch& b) {
  if (!b.constraints.has_solved_form()) {
    for (const auto& e : a.constraints.equations())
      if (std::find(b.constraints.equations().begin(), b.constraints.equations().end(), e) ==
          b.constraints.equations().end())
        return false;
  } else {
    for (const auto& e : a.constraints.equations())
      if (!b.constraints.reduce(e).is_zero()) return false;
  }
  if (a.kernel.size() != b.kernel.size()) return false;
  for (std::size_t k = 0; k < a.kernel.size(); ++k) {
    for (Eigen::Index i = 0; i < a.kernel[k].size(); ++i) {
      RatFunc x = a.kernel[k][i];
      if (b.constraints.has_solved_form()) {
        if (x.den().is_zero()) return false;
        const Poly den = b.constraints.reduce(x.den());
        if (den.is_zero()) return false;
        x = RatFunc(b.constraints.reduce(x.num()), den);
      }
      if (!(x == b.kernel[k][i])) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<PbwMonomial> enumerate_ansatz(const JacobiAlgebra& alg, const Weight& w) {
  if (w.size() != alg.n()) throw DomainError("weight has " + std::to_string(w.size()) +
                                             " coordinates, expected " + std::to_string(alg.n()));
  std::vector<PbwMonomial> out;
  if (!is_integral(w) || height(w).sign() < 0) return out;
  std::vector<std::pair<std::size_t, unsigned>> powers;
  enumerate(alg, 0, w, powers, out);
  std::sort(out.begin(), out.end(),
            [&](const PbwMonomial& a, const PbwMonomial& b) { return graded_less(alg, a, b); });
  return out;
}

AnsatzSystem assemble_system(const JacobiAlgebra& alg, const Weight& w) {
  AnsatzSystem sys;
  sys.weight = w;
  sys.monomials = enumerate_ansatz(alg, w);
  const auto cols = static_cast<Eigen::Index>(sys.monomials.size());

  NormalOrderer orderer(alg);
  std::map<std::pair<std::size_t, PbwMonomial>, std::map<Eigen::Index, Poly>> rows;
  for (auto x : alg.negatives()) {
    for (Eigen::Index k = 0; k < cols; ++k) {
      const VermaVector image = act(orderer, x, VermaVector::term(sys.monomials[k], Poly(1)));
      for (const auto& [b, c] : image.terms()) rows[{x, b}][k] = c;
    }
  }
  sys.matrix = Matrix<Poly>::Constant(static_cast<Eigen::Index>(rows.size()), cols, Poly());
  Eigen::Index r = 0;
  for (const auto& [label, entries] : rows) {
    for (const auto& [k, c] : entries) sys.matrix(r, k) = c;
    sys.rows.push_back(label);
    ++r;
  }
  return sys;
}

BudgetExceeded::BudgetExceeded(std::vector<SolutionBranch> partial,
                               std::vector<std::vector<Poly>> unexplored)
    : Error("branch budget exhausted with " + std::to_string(unexplored.size()) +
            " unexplored branch(es)"),
      partial_(std::move(partial)),
      unexplored_(std::move(unexplored)) {}

std::vector<SolutionBranch> solve_parametric(const AnsatzSystem& sys, const SolveOptions& options) {
  std::vector<SolutionBranch> found;
  std::vector<std::vector<Poly>> unexplored;
  std::size_t created = 1;

  std::vector<Branch> stack;
  Branch root;
  root.m = sys.matrix;
  stack.push_back(std::move(root));

  auto spawn = [&](Branch child, std::vector<Poly> label) {
    if (created >= options.branch_budget) {
      unexplored.push_back(std::move(label));
      return;
    }
    ++created;
    stack.push_back(std::move(child));
  };

  while (!stack.empty()) {
    Branch b = std::move(stack.back());
    stack.pop_back();
    while (true) {
      std::optional<std::tuple<int, Eigen::Index, Eigen::Index>> best;
      for (Eigen::Index r = static_cast<Eigen::Index>(b.rank); r < b.m.rows(); ++r)
        for (Eigen::Index c = 0; c < b.m.cols(); ++c) {
          if (std::find(b.pivot_cols.begin(), b.pivot_cols.end(), static_cast<std::size_t>(c)) !=
              b.pivot_cols.end())
            continue;
          if (vanishes(b, b.m(r, c))) continue;
          const std::tuple<int, Eigen::Index, Eigen::Index> key{b.m(r, c).total_degree(), c, r};
          if (!best || key < *best) best = key;
        }
      if (!best) {
        if (b.rank < static_cast<std::size_t>(b.m.cols())) found.push_back(finish(b));
        break;
      }
      const auto [deg, c, r] = *best;
      const Poly p = b.m(r, c);
      if (deg > 0 && !b.curve) {
        const LinearSplit split = split_linear_factors(squarefree_part(p));
        for (const auto& l : split.linear) {
          Branch child = b;
          std::vector<Poly> label = child.affine;
          label.push_back(l);
          if (add_affine(child, l)) spawn(std::move(child), std::move(label));
        }
        if (!split.rest.is_constant()) {
          Branch child = b;
          std::vector<Poly> label = child.affine;
          label.push_back(split.rest);
          if (add_curve(child, split.rest)) spawn(std::move(child), std::move(label));
        }
      }
      if (deg > 0) b.nonvanishing.push_back(squarefree_part(p));
      eliminate(b, r, c);
    }
  }

  // Drop branches subsumed by a branch with fewer constraints.
  std::sort(found.begin(), found.end(), [](const SolutionBranch& a, const SolutionBranch& b) {
    return branch_key(a) < branch_key(b);
  });
  std::vector<SolutionBranch> kept;
  for (auto& b : found) {
    const bool redundant = std::any_of(kept.begin(), kept.end(), [&](const SolutionBranch& a) {
      return a.constraints.equations().size() <= b.constraints.equations().size() && subsumes(a, b);
    });
    if (!redundant) kept.push_back(std::move(b));
  }
  if (!unexplored.empty()) throw BudgetExceeded(std::move(kept), std::move(unexplored));
  return kept;
}

VermaVector to_verma_vector(const std::vector<PbwMonomial>& monomials, const Vector<RatFunc>& coeffs) {
  Poly common(1);
  for (const auto& c : coeffs) {
    if (c.den().is_constant()) continue;
    const Poly g = gcd(common, c.den());
    common = *divide_exact(common * c.den(), g);
  }
  VermaVector v;
  for (std::size_t k = 0; k < monomials.size(); ++k) {
    const RatFunc scaled = coeffs[static_cast<Eigen::Index>(k)] * RatFunc(common);
    if (!scaled.is_polynomial()) throw ConsistencyError("denominator clearing failed");
    v.add_term(monomials[k], scaled.num() * scaled.den().constant_term().inverse());
  }
  return v;
}

SingularReport find_singular_vectors(const JacobiAlgebra& alg, const Weight& w, const SolveOptions& options) {
  SingularReport report;
  report.weight = w;
  if (w.size() != alg.n()) throw DomainError("weight dimension does not match n");
  if (is_zero_weight(w)) {
    report.trivial = true;
    report.monomials = {PbwMonomial()};
    return report;
  }
  const AnsatzSystem sys = assemble_system(alg, w);
  report.monomials = sys.monomials;
  if (sys.monomials.empty()) return report;
  for (auto& branch : solve_parametric(sys, options)) {
    BranchReport br;
    br.verified = true;
    for (const auto& k : branch.kernel) {
      VectorCheck check;
      check.vector = to_verma_vector(sys.monomials, k);
      check.report = is_singular(alg, check.vector, branch.constraints);
      br.verified = br.verified && check.report.verifiable && check.report.singular;
      br.checks.push_back(std::move(check));
    }
    br.branch = std::move(branch);
    report.branches.push_back(std::move(br));
  }
  return report;
}

}  // namespace jv
