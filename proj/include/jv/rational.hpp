#ifndef JV_RATIONAL_HPP
#define JV_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <gmpxx.h>
#include <iosfwd>
#include <string>
#include <string_view>

namespace jv {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Thin value wrapper over `mpq_class`. The wrapper exists so that every
/// arithmetic result is a concrete `Rat` (no GMP expression templates leak
/// into `auto` variables or Eigen expressions).
class Rat {
 public:
  Rat() = default;
  Rat(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  Rat(long num, long den);
  explicit Rat(const mpq_class& value) : v_(value) { v_.canonicalize(); }
  explicit Rat(const mpz_class& value) : v_(value) {}

  /// Parses "3", "-7/4", "+2". Throws ParseError.
  static Rat parse(std::string_view text);

  const mpq_class& value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  Rat abs() const;
  Rat inverse() const;
  double to_double() const { return v_.get_d(); }

  /// "3/4", "-2", "0".
  std::string str() const;

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace jv

#endif  // JV_RATIONAL_HPP
