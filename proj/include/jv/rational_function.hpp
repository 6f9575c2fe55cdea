#ifndef JV_RATIONAL_FUNCTION_HPP
#define JV_RATIONAL_FUNCTION_HPP

#include <iosfwd>
#include <map>
#include <string>

#include "jv/polynomial.hpp"

namespace jv {

/// Element of Q(L1..Ln), kept as num/den with gcd(num, den) = 1 and a monic
/// denominator (leading coefficient 1 under GradedOrder).
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const Poly& num);  // NOLINT(google-explicit-constructor)
  RatFunc(const Rat& c) : RatFunc(Poly(c)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(long c) : RatFunc(Poly(c)) {}  // NOLINT(google-explicit-constructor)
  /// Throws DomainError when den is zero.
  RatFunc(const Poly& num, const Poly& den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RatFunc inverse() const;
  RatFunc substitute(std::size_t var, const Poly& value) const;
  RatFunc eval(const std::map<std::size_t, Rat>& values) const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_); }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// "num" when the denominator is 1, otherwise "(num)/(den)".
  std::string str() const;
  std::string latex() const;

 private:
  void normalize();

  Poly num_;
  Poly den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& r);

}  // namespace jv

#endif  // JV_RATIONAL_FUNCTION_HPP
