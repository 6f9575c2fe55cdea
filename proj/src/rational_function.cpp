#include "jv/rational_function.hpp"

#include <ostream>

#include "jv/error.hpp"

namespace jv {

namespace {

std::string wrap(const Poly& p) {
  return p.terms().size() > 1 ? "(" + p.str() + ")" : p.str();
}

}  // namespace

RatFunc::RatFunc(const Poly& num) : num_(num), den_(1) {}

RatFunc::RatFunc(const Poly& num, const Poly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (!den_.is_constant()) {
    const Poly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *divide_exact(num_, g);
      den_ = *divide_exact(den_, g);
    }
  }
  const Rat lc = den_.leading_coefficient().inverse();
  num_ *= lc;
  den_ *= lc;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DomainError("division by zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::substitute(std::size_t var, const Poly& value) const {
  return RatFunc(num_.substitute(var, value), den_.substitute(var, value));
}

RatFunc RatFunc::eval(const std::map<std::size_t, Rat>& values) const {
  return RatFunc(num_.eval(values), den_.eval(values));
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

std::string RatFunc::str() const {
  if (den_.is_constant()) return num_.str();
  return wrap(num_) + "/" + wrap(den_);
}

std::string RatFunc::latex() const {
  if (den_.is_constant()) return num_.latex();
  return "\\frac{" + num_.latex() + "}{" + den_.latex() + "}";
}

std::ostream& operator<<(std::ostream& os, const RatFunc& r) { return os << r.str(); }

}  // namespace jv
