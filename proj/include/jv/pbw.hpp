#ifndef JV_PBW_HPP
#define JV_PBW_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "jv/algebra.hpp"
#include "jv/rational_function.hpp"

namespace jv {

/// Ordered monomial in U(g_n): generator indices (positions in the global
/// order of JacobiAlgebra) listed in nondecreasing order, repeated according
/// to multiplicity. The empty monomial is the unit.
class PbwMonomial {
 public:
  PbwMonomial() = default;
  /// Throws DomainError if `factors` is not sorted.
  explicit PbwMonomial(std::vector<std::uint16_t> factors);
  /// From (generator index, multiplicity) pairs in any order.
  static PbwMonomial from_powers(std::span<const std::pair<std::size_t, unsigned>> powers);

  std::span<const std::uint16_t> factors() const { return factors_; }
  std::size_t degree() const { return factors_.size(); }
  bool empty() const { return factors_.empty(); }
  unsigned exponent(std::size_t gen) const;
  /// (generator index, multiplicity) in global order.
  std::vector<std::pair<std::size_t, unsigned>> powers() const;

  friend auto operator<=>(const PbwMonomial&, const PbwMonomial&) = default;

 private:
  std::vector<std::uint16_t> factors_;
};

/// Sum of multiplicity * weight(generator).
Weight monomial_weight(const JacobiAlgebra& alg, const PbwMonomial& m);

/// Order used to list ansatz monomials: fewer Heisenberg factors first, then
/// lower total degree, then larger exponents of earlier generators first.
bool graded_less(const JacobiAlgebra& alg, const PbwMonomial& a, const PbwMonomial& b);

/// Element of U(g_n) in PBW normal form.
class UElement {
 public:
  using TermMap = std::map<PbwMonomial, RatFunc>;

  UElement() = default;
  static UElement one() { return scalar(RatFunc(1)); }
  static UElement scalar(const RatFunc& c);
  static UElement generator(std::size_t gen);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const PbwMonomial& m, const RatFunc& c);

  UElement& operator+=(const UElement& o);
  UElement& operator-=(const UElement& o);
  UElement& operator*=(const RatFunc& c);
  friend UElement operator+(UElement a, const UElement& b) { return a += b; }
  friend UElement operator-(UElement a, const UElement& b) { return a -= b; }
  friend UElement operator*(UElement a, const RatFunc& c) { return a *= c; }
  friend UElement operator*(const RatFunc& c, UElement a) { return a *= c; }
  friend bool operator==(const UElement&, const UElement&) = default;

 private:
  TermMap terms_;
};

/// Rewrites words into PBW normal form, memoizing every subword it meets.
///
/// The rewrite step is leftmost-first: the first adjacent pair (x, y) with x
/// after y in the global order becomes y x + [x, y]. The swapped word has one
/// inversion fewer and the bracket terms are shorter, so the recursion ends.
/// Structure constants are rational, so normal forms are cached with Rat
/// coefficients. Not safe to share between threads; make one per thread.
class NormalOrderer {
 public:
  using Word = std::vector<std::uint16_t>;
  using RationalForm = std::map<PbwMonomial, Rat>;

  explicit NormalOrderer(const JacobiAlgebra& alg) : alg_(&alg) {}

  const JacobiAlgebra& algebra() const { return *alg_; }
  /// Normal form of a word of generator indices.
  const RationalForm& order(const Word& word);
  /// Number of rewrite steps performed so far.
  std::size_t steps() const { return steps_; }
  /// Limits the total number of rewrite steps; exceeding it throws
  /// ConsistencyError. Zero means unlimited.
  void set_fuel(std::size_t fuel) { fuel_ = fuel; }

 private:
  const JacobiAlgebra* alg_;
  std::map<Word, RationalForm> memo_;
  std::size_t steps_ = 0;
  std::size_t fuel_ = 0;
};

/// PBW normal form of prefactor * g_1 g_2 ... g_k (generator indices).
UElement normal_order(const JacobiAlgebra& alg, std::span<const std::size_t> word,
                      const RatFunc& prefactor = RatFunc(1));
UElement normal_order(NormalOrderer& orderer, std::span<const std::size_t> word,
                      const RatFunc& prefactor = RatFunc(1));

/// Product in U(g_n), returned in normal form.
UElement multiply(const JacobiAlgebra& alg, const UElement& a, const UElement& b);
UElement multiply(NormalOrderer& orderer, const UElement& a, const UElement& b);

/// A bracket result viewed as an element of U(g_n).
UElement lift(const JacobiAlgebra& alg, const BracketResult& r);

}  // namespace jv

#endif  // JV_PBW_HPP
