#ifndef JV_POLYNOMIAL_HPP
#define JV_POLYNOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jv/rational.hpp"

namespace jv {

/// Exponent vector of a monomial in L1..Ln. Entry k holds the power of L(k+1).
/// Trailing zeros are always trimmed, so the constant monomial is empty and
/// polynomials built over different variable counts compare equal when they
/// agree.
using Exponents = std::vector<std::uint32_t>;

/// Graded order in which higher-index variables are more significant:
/// total degree first, then exponents compared from the last variable down.
/// Under this order L2^2 > L1*L2 > L1^2 > L2 > L1 > 1.
struct GradedOrder {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Multivariate polynomial over Q in the weight variables L1..Ln
/// (Li stands for Lambda(H_i)). Variable indices are 1-based throughout the
/// public interface.
class Poly {
 public:
  using TermMap = std::map<Exponents, Rat, GradedOrder>;

  Poly() = default;
  Poly(const Rat& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Rat(c)) {}  // NOLINT(google-explicit-constructor)

  /// The variable Li.
  static Poly lambda(std::size_t i);
  static Poly monomial(Exponents e, const Rat& c);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the constant monomial.
  Rat constant_term() const;

  /// Total degree; -1 for the zero polynomial.
  int total_degree() const;
  unsigned degree_in(std::size_t var) const;
  /// Highest variable index that occurs (0 for constants).
  std::size_t max_variable() const;
  /// Sorted list of variable indices that occur.
  std::vector<std::size_t> variables() const;

  /// Leading monomial / coefficient under GradedOrder. Undefined for zero.
  const Exponents& leading_monomial() const { return terms_.rbegin()->first; }
  const Rat& leading_coefficient() const { return terms_.rbegin()->second; }

  /// Full evaluation; point[k] is the value of L(k+1). Throws DomainError if
  /// a variable occurring in the polynomial has no value.
  Rat eval(std::span<const Rat> point) const;
  /// Partial evaluation: variables absent from the map stay symbolic.
  Poly eval(const std::map<std::size_t, Rat>& values) const;
  /// Replaces L(var) by an arbitrary polynomial.
  Poly substitute(std::size_t var, const Poly& value) const;
  Poly derivative(std::size_t var) const;
  Poly pow(unsigned e) const;

  /// Coefficients with respect to L(var): element k multiplies L(var)^k.
  std::vector<Poly> coefficients_in(std::size_t var) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rat& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
  friend Poly operator*(Poly a, long c) { return a *= Rat(c); }
  friend Poly operator*(long c, Poly a) { return a *= Rat(c); }
  friend Poly operator-(const Poly& a);

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  /// Text form, e.g. "2*L2^2 - 4*L1*L2 + 2*L1^2 - L2 + L1".
  std::string str() const;
  /// LaTeX form using \Lambda(H_i).
  std::string latex() const;

 private:
  void add_term(const Exponents& e, const Rat& c);

  TermMap terms_;
};

/// Total order used for canonical sorting: compares term by term from the
/// leading monomial down. Returns <0, 0, >0.
int compare(const Poly& a, const Poly& b);
inline bool operator<(const Poly& a, const Poly& b) { return compare(a, b) < 0; }

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// Quotient a / b when b divides a exactly, otherwise nullopt.
/// Throws DomainError when b is zero.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

/// Divides out the rational content and fixes the sign so that the leading
/// coefficient is 1. Zero maps to zero.
Poly content_free(const Poly& a);

/// Greatest common divisor, normalized by content_free. Throws DomainError
/// if both inputs are zero.
Poly gcd(const Poly& a, const Poly& b);

/// Product of the distinct irreducible factors of a, normalized by
/// content_free.
Poly squarefree_part(const Poly& a);

/// Degree at most one.
bool is_affine(const Poly& a);

/// Factors of a that are affine over Q, plus the remaining cofactor.
/// Every returned factor is content_free; the product of all factors and the
/// rest equals content_free(a). The rest is 1 when a splits completely.
struct LinearSplit {
  std::vector<Poly> linear;
  Poly rest;
};
LinearSplit split_linear_factors(const Poly& a);

/// Rational roots of a polynomial in the single variable L(var).
/// Throws DomainError if other variables occur.
std::vector<Rat> rational_roots(const Poly& a, std::size_t var);

}  // namespace jv

#endif  // JV_POLYNOMIAL_HPP
