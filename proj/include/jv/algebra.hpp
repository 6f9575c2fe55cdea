#ifndef JV_ALGEBRA_HPP
#define JV_ALGEBRA_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "jv/eigen_support.hpp"
#include "jv/rational.hpp"

namespace jv {

/// Generator families of the Jacobi algebra g_n = h_n + sp(n):
/// a+_i / a-_i span the Heisenberg part, K+_ij, K-_ij, K0_ij span sp(n).
enum class Family : std::uint8_t { APlus, AMinus, KPlus, KMinus, KZero };

/// Triangular decomposition g_n = g_n^+ + k_n + g_n^-.
enum class GenClass : std::uint8_t { Positive, Cartan, Negative };

/// One basis element. Indices are 1-based; `j` is 0 for a+/a-.
/// K+ and K- are symmetric in (i, j) and always stored with i <= j.
struct Generator {
  Family family = Family::APlus;
  int i = 1;
  int j = 0;

  static Generator a_plus(int i) { return {Family::APlus, i, 0}; }
  static Generator a_minus(int i) { return {Family::AMinus, i, 0}; }
  static Generator k_plus(int i, int j) { return {Family::KPlus, std::min(i, j), std::max(i, j)}; }
  static Generator k_minus(int i, int j) { return {Family::KMinus, std::min(i, j), std::max(i, j)}; }
  static Generator k_zero(int i, int j) { return {Family::KZero, i, j}; }

  friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// Weight in the delta basis; coordinate k is the coefficient of delta_(k+1).
/// With delta_i(H_j) = 1/2 delta_ij, coordinate k equals twice the eigenvalue
/// of ad h_(k+1).
using Weight = Vector<Rat>;

Weight zero_weight(int n);
bool same_weight(const Weight& a, const Weight& b);
/// Strict total order for use as a map key.
bool weight_less(const Weight& a, const Weight& b);

/// [x, y] = scalar * 1 + sum terms[g] * g.
struct BracketResult {
  Rat scalar;
  std::map<Generator, Rat> terms;

  bool is_zero() const { return scalar.is_zero() && terms.empty(); }
  void add(const Generator& g, const Rat& c);
  BracketResult& operator+=(const BracketResult& o);
  BracketResult& operator*=(const Rat& c);
  friend BracketResult operator-(BracketResult r) { return r *= Rat(-1); }
  friend bool operator==(const BracketResult&, const BracketResult&) = default;
};

GenClass classify(const Generator& g);

/// Positive <-> negative partner: a+_i <-> a-_i, K+_ij <-> K-_ij,
/// K0_ij <-> K0_ji. Cartan generators are their own mirror.
Generator mirror(const Generator& g);

/// Structure constants of g_n. The formulas involve only Kronecker deltas of
/// the indices, so they do not depend on n.
BracketResult bracket(const Generator& x, const Generator& y);

/// Basis of g_n in the canonical global order used for PBW monomials:
///   positives: a+_i, then K+_ij (i <= j), then K0_ij (i < j), index-lex;
///   Cartan:    K0_ii;
///   negatives: mirrors of the positives, in the same order.
/// Throws DomainError for n < 1.
std::vector<Generator> generators(int n);

/// Immutable description of g_n with its basis, bracket table and weights
/// indexed by position in the global order.
class JacobiAlgebra {
 public:
  /// Bracket of two basis elements by index: scalar plus sparse index terms.
  struct IndexedBracket {
    Rat scalar;
    std::vector<std::pair<std::size_t, Rat>> terms;
  };

  explicit JacobiAlgebra(int n);

  int n() const { return n_; }
  std::size_t size() const { return basis_.size(); }
  std::span<const Generator> basis() const { return basis_; }
  const Generator& generator(std::size_t idx) const { return basis_[idx]; }

  bool contains(const Generator& g) const;
  /// Position in the global order; throws DomainError if g is not a basis
  /// element of this g_n (wrong n or non-canonical indices).
  std::size_t index(const Generator& g) const;

  GenClass gen_class(std::size_t idx) const { return classes_[idx]; }
  const Weight& weight(std::size_t idx) const { return weights_[idx]; }
  Weight weight(const Generator& g) const { return weights_[index(g)]; }
  std::size_t mirror_index(std::size_t idx) const { return mirrors_[idx]; }

  /// Indices of the Positive / Cartan / Negative generators, in global order.
  const std::vector<std::size_t>& positives() const { return positives_; }
  const std::vector<std::size_t>& cartans() const { return cartans_; }
  const std::vector<std::size_t>& negatives() const { return negatives_; }

  /// [x, y] after checking that both belong to this g_n.
  BracketResult bracket(const Generator& x, const Generator& y) const;
  const IndexedBracket& bracket(std::size_t a, std::size_t b) const { return table_[a * size() + b]; }

 private:
  int n_;
  std::vector<Generator> basis_;
  std::map<Generator, std::size_t> lookup_;
  std::vector<GenClass> classes_;
  std::vector<Weight> weights_;
  std::vector<std::size_t> mirrors_;
  std::vector<std::size_t> positives_, cartans_, negatives_;
  std::vector<IndexedBracket> table_;
};

/// Weight of a generator of g_n, read off from [h_k, g] for k = 1..n.
/// Throws ConsistencyError if g is not an eigenvector of some ad h_k.
Weight weight(const Generator& g, int n);

}  // namespace jv

#endif  // JV_ALGEBRA_HPP
