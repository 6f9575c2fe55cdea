#include "jv/rational.hpp"

#include <ostream>

#include "jv/error.hpp"

namespace jv {

Rat::Rat(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  if (s.empty()) throw ParseError("empty rational literal");
  const auto slash = s.find('/');
  auto digits_ok = [](std::string_view part, bool allow_sign) {
    std::size_t k = 0;
    if (allow_sign && !part.empty() && part[0] == '-') k = 1;
    if (k >= part.size()) return false;
    for (; k < part.size(); ++k)
      if (part[k] < '0' || part[k] > '9') return false;
    return true;
  };
  const std::string_view whole(s);
  if (slash == std::string::npos) {
    if (!digits_ok(whole, true)) throw ParseError("malformed rational '" + std::string(text) + "'");
    return Rat(mpz_class(s));
  }
  const auto num = whole.substr(0, slash);
  const auto den = whole.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false))
    throw ParseError("malformed rational '" + std::string(text) + "'");
  mpz_class d{std::string(den)};
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rat(mpq_class(mpz_class(std::string(num)), d));
}

Rat Rat::abs() const { return Rat(mpq_class(::abs(v_))); }

Rat Rat::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  return Rat(mpq_class(1 / v_));
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rat::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace jv
