#include "jv/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "jv/error.hpp"

namespace jv {

namespace {

void trim(Exponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

unsigned degree_of(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

std::uint32_t exponent(const Exponents& e, std::size_t var) {
  return var - 1 < e.size() ? e[var - 1] : 0;
}

Exponents product(const Exponents& a, const Exponents& b) {
  Exponents r(std::max(a.size(), b.size()), 0);
  for (std::size_t k = 0; k < a.size(); ++k) r[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) r[k] += b[k];
  return r;
}

// a / b for monomials, if b divides a.
std::optional<Exponents> quotient(const Exponents& a, const Exponents& b) {
  if (b.size() > a.size()) return std::nullopt;
  Exponents r = a;
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (r[k] < b[k]) return std::nullopt;
    r[k] -= b[k];
  }
  trim(r);
  return r;
}

Exponents power_of(std::size_t var, std::uint32_t k) {
  Exponents e(var, 0);
  e[var - 1] = k;
  trim(e);
  return e;
}

// Leading coefficient of a with respect to L(var).
Poly leading_coefficient_in(const Poly& a, std::size_t var) {
  return a.coefficients_in(var).back();
}

Poly content_in(const Poly& a, std::size_t var);

// Primitive pseudo-remainder sequence gcd in L(var); both inputs are
// primitive with respect to var.
Poly primitive_gcd(Poly a, Poly b, std::size_t var) {
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.degree_in(var) == 0) return Poly(1);
    const Poly lc = leading_coefficient_in(b, var);
    const unsigned db = b.degree_in(var);
    Poly r = a;
    while (!r.is_zero() && r.degree_in(var) >= db) {
      const unsigned dr = r.degree_in(var);
      const Poly t = leading_coefficient_in(r, var) * Poly::monomial(power_of(var, dr - db), Rat(1));
      r = lc * r - t * b;
    }
    a = std::move(b);
    if (r.is_zero()) {
      b = Poly();
    } else {
      b = *divide_exact(r, content_in(r, var));
    }
  }
  return a;
}

Poly content_in(const Poly& a, std::size_t var) {
  Poly g;
  for (const auto& c : a.coefficients_in(var)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? content_free(c) : gcd(g, c);
    if (g.is_constant()) return Poly(1);
  }
  return g;
}

mpz_class lcm_of_denominators(const std::vector<Rat>& coeffs) {
  mpz_class l = 1;
  for (const auto& c : coeffs) {
    mpz_class d = c.denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

// Positive divisors of |v|; empty when |v| is too large to enumerate.
std::vector<mpz_class> positive_divisors(mpz_class v) {
  v = abs(v);
  std::vector<mpz_class> small, large;
  if (v == 0) return {};
  if (v > mpz_class("1000000000000")) return {};
  for (mpz_class d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      small.push_back(d);
      if (d * d != v) large.push_back(v / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Candidate linear factor L(var) - rho0 - sum c_k (L(k) - base_k) found by
// matching rational roots across shifted specializations.
std::optional<Poly> find_linear_factor(const Poly& q, std::size_t var) {
  std::vector<std::size_t> others;
  for (auto v : q.variables())
    if (v != var) others.push_back(v);
  const Poly lc = leading_coefficient_in(q, var);

  static const long kProbe[] = {0, 1, -1, 2, -2, 3, -3, 4, -4, 5, -5, 7, -7, 11};
  std::map<std::size_t, Rat> base;
  bool found_base = false;
  for (long t : kProbe) {
    base.clear();
    for (std::size_t k = 0; k < others.size(); ++k) base[others[k]] = Rat(t + static_cast<long>(k));
    if (!lc.eval(base).is_zero()) {
      found_base = true;
      break;
    }
  }
  if (!found_base) return std::nullopt;

  const auto roots0 = rational_roots(q.eval(base), var);
  if (roots0.empty()) return std::nullopt;

  std::vector<Rat> shifts;
  std::vector<std::vector<Rat>> shifted_roots;
  for (auto k : others) {
    std::optional<Rat> shift;
    for (long s = 1; s <= 8; ++s) {
      auto point = base;
      point[k] += Rat(s);
      if (!lc.eval(point).is_zero()) {
        shift = Rat(s);
        break;
      }
    }
    if (!shift) return std::nullopt;
    auto point = base;
    point[k] += *shift;
    shifts.push_back(*shift);
    shifted_roots.push_back(rational_roots(q.eval(point), var));
    if (shifted_roots.back().empty()) return std::nullopt;
  }

  for (const auto& rho0 : roots0) {
    std::vector<std::size_t> pick(others.size(), 0);
    while (true) {
      Poly cand = Poly::lambda(var) - Poly(rho0);
      for (std::size_t k = 0; k < others.size(); ++k) {
        const Rat slope = (shifted_roots[k][pick[k]] - rho0) / shifts[k];
        cand -= slope * (Poly::lambda(others[k]) - Poly(base[others[k]]));
      }
      if (divide_exact(q, cand)) return cand;
      std::size_t k = 0;
      for (; k < others.size(); ++k) {
        if (++pick[k] < shifted_roots[k].size()) break;
        pick[k] = 0;
      }
      if (k == others.size()) break;
    }
  }
  return std::nullopt;
}

void append_monomial_text(std::ostringstream& os, const Exponents& e) {
  bool first = true;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << 'L' << (k + 1);
    if (e[k] > 1) os << '^' << e[k];
  }
}

std::string latex_rat(const Rat& r) {
  if (r.is_integer()) return r.str();
  return "\\frac{" + r.numerator().get_str() + "}{" + r.denominator().get_str() + "}";
}

}  // namespace

bool GradedOrder::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned da = degree_of(a), db = degree_of(b);
  if (da != db) return da < db;
  const std::size_t len = std::max(a.size(), b.size());
  for (std::size_t k = len; k-- > 0;) {
    const auto ea = k < a.size() ? a[k] : 0u;
    const auto eb = k < b.size() ? b[k] : 0u;
    if (ea != eb) return ea < eb;
  }
  return false;
}

Poly::Poly(const Rat& c) {
  if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

Poly Poly::lambda(std::size_t i) {
  if (i == 0) throw DomainError("variable indices start at 1");
  return monomial(power_of(i, 1), Rat(1));
}

Poly Poly::monomial(Exponents e, const Rat& c) {
  trim(e);
  Poly p;
  if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
  return p;
}

void Poly::add_term(const Exponents& e, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rat Poly::constant_term() const {
  auto it = terms_.find(Exponents{});
  return it == terms_.end() ? Rat(0) : it->second;
}

int Poly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(degree_of(leading_monomial()));
}

unsigned Poly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max<unsigned>(d, exponent(e, var));
  return d;
}

std::size_t Poly::max_variable() const {
  std::size_t m = 0;
  for (const auto& [e, c] : terms_) m = std::max(m, e.size());
  return m;
}

std::vector<std::size_t> Poly::variables() const {
  std::set<std::size_t> vars;
  for (const auto& [e, c] : terms_)
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k] != 0) vars.insert(k + 1);
  return {vars.begin(), vars.end()};
}

Rat Poly::eval(std::span<const Rat> point) const {
  Rat sum;
  for (const auto& [e, c] : terms_) {
    if (e.size() > point.size())
      throw DomainError("evaluation point has no value for L" + std::to_string(e.size()));
    Rat t = c;
    for (std::size_t k = 0; k < e.size(); ++k)
      for (std::uint32_t p = 0; p < e[k]; ++p) t *= point[k];
    sum += t;
  }
  return sum;
}

Poly Poly::eval(const std::map<std::size_t, Rat>& values) const {
  Poly r;
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    Rat t = c;
    for (const auto& [var, value] : values) {
      if (var - 1 >= rest.size()) continue;
      for (std::uint32_t p = 0; p < rest[var - 1]; ++p) t *= value;
      rest[var - 1] = 0;
    }
    trim(rest);
    r.add_term(rest, t);
  }
  return r;
}

Poly Poly::substitute(std::size_t var, const Poly& value) const {
  const auto coeffs = coefficients_in(var);
  // Horner in L(var).
  Poly r;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * value + *it;
  return r;
}

Poly Poly::derivative(std::size_t var) const {
  Poly r;
  for (const auto& [e, c] : terms_) {
    const auto k = exponent(e, var);
    if (k == 0) continue;
    Exponents d = e;
    d[var - 1] -= 1;
    trim(d);
    r.add_term(d, c * Rat(static_cast<long>(k)));
  }
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly r(1);
  for (unsigned k = 0; k < e; ++k) r *= *this;
  return r;
}

std::vector<Poly> Poly::coefficients_in(std::size_t var) const {
  std::vector<Poly> coeffs(degree_in(var) + 1);
  for (const auto& [e, c] : terms_) {
    const auto k = exponent(e, var);
    Exponents rest = e;
    if (k != 0) {
      rest[var - 1] = 0;
      trim(rest);
    }
    coeffs[k].add_term(rest, c);
  }
  return coeffs;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly& Poly::operator*=(const Rat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(product(ea, eb), ca * cb);
  return r;
}

Poly operator-(const Poly& a) {
  Poly r = a;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const Rat mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (e.empty()) {
      os << mag.str();
      continue;
    }
    if (!mag.is_one()) os << mag.str() << '*';
    append_monomial_text(os, e);
  }
  return os.str();
}

std::string Poly::latex() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const Rat mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (e.empty() || !mag.is_one()) os << latex_rat(mag);
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      os << "\\Lambda(H_" << (k + 1) << ")";
      if (e[k] > 1) os << "^{" << e[k] << "}";
    }
  }
  return os.str();
}

int compare(const Poly& a, const Poly& b) {
  auto ia = a.terms().rbegin(), ib = b.terms().rbegin();
  const GradedOrder less;
  for (; ia != a.terms().rend() && ib != b.terms().rend(); ++ia, ++ib) {
    if (less(ia->first, ib->first)) return -1;
    if (less(ib->first, ia->first)) return 1;
    if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
  }
  if (ia == a.terms().rend() && ib == b.terms().rend()) return 0;
  return ia == a.terms().rend() ? -1 : 1;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  Poly q, r = a;
  const auto& lb = b.leading_monomial();
  const Rat lcb = b.leading_coefficient();
  while (!r.is_zero()) {
    auto m = quotient(r.leading_monomial(), lb);
    if (!m) return std::nullopt;
    const Poly t = Poly::monomial(*m, r.leading_coefficient() / lcb);
    q += t;
    r -= t * b;
  }
  return q;
}

Poly content_free(const Poly& a) {
  if (a.is_zero()) return a;
  return a * a.leading_coefficient().inverse();
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
  if (a.is_zero()) return content_free(b);
  if (b.is_zero()) return content_free(a);
  if (a.is_constant() || b.is_constant()) return Poly(1);
  const std::size_t var = std::max(a.max_variable(), b.max_variable());
  const Poly ca = content_in(a, var), cb = content_in(b, var);
  const Poly pa = *divide_exact(a, ca), pb = *divide_exact(b, cb);
  const Poly c = gcd(ca, cb);
  Poly g;
  if (pa.degree_in(var) == 0 || pb.degree_in(var) == 0) {
    g = Poly(1);
  } else {
    g = primitive_gcd(pa, pb, var);
    g = *divide_exact(g, content_in(g, var));
  }
  return content_free(c * g);
}

Poly squarefree_part(const Poly& a) {
  if (a.is_zero()) return a;
  if (a.is_constant()) return Poly(1);
  Poly g = a;
  for (auto var : a.variables()) {
    g = gcd(g, a.derivative(var));
    if (g.is_constant()) break;
  }
  return content_free(*divide_exact(a, g));
}

bool is_affine(const Poly& a) { return a.total_degree() <= 1; }

LinearSplit split_linear_factors(const Poly& a) {
  LinearSplit out;
  out.rest = content_free(a);
  if (out.rest.is_zero()) return out;
  while (!out.rest.is_constant()) {
    if (out.rest.total_degree() == 1) {
      out.linear.push_back(out.rest);
      out.rest = Poly(1);
      break;
    }
    std::optional<Poly> factor;
    const auto vars = out.rest.variables();
    for (auto it = vars.rbegin(); it != vars.rend() && !factor; ++it)
      factor = find_linear_factor(out.rest, *it);
    if (!factor) break;
    out.linear.push_back(content_free(*factor));
    out.rest = content_free(*divide_exact(out.rest, *factor));
  }
  return out;
}

std::vector<Rat> rational_roots(const Poly& a, std::size_t var) {
  for (auto v : a.variables())
    if (v != var) throw DomainError("rational_roots expects a univariate polynomial");
  if (a.is_zero()) throw DomainError("rational_roots of the zero polynomial");
  auto coeffs = a.coefficients_in(var);
  std::vector<Rat> values;
  values.reserve(coeffs.size());
  for (const auto& c : coeffs) values.push_back(c.constant_term());

  std::vector<Rat> roots;
  std::size_t low = 0;
  while (low < values.size() && values[low].is_zero()) ++low;
  if (low > 0) roots.push_back(Rat(0));
  if (values.size() - low <= 1) return roots;

  const mpz_class scale = lcm_of_denominators(values);
  const mpz_class a0 = (values[low] * Rat(scale)).numerator();
  const mpz_class an = (values.back() * Rat(scale)).numerator();
  const auto ps = positive_divisors(a0);
  const auto qs = positive_divisors(an);

  auto horner = [&](const Rat& x) {
    Rat s;
    for (std::size_t k = values.size(); k-- > low;) s = s * x + values[k];
    return s;
  };
  std::set<Rat> found;
  for (const auto& p : ps)
    for (const auto& q : qs)
      for (int sign : {1, -1}) {
        const mpz_class num = sign > 0 ? p : mpz_class(-p);
        const Rat x(mpq_class(num, q));
        if (!found.count(x) && horner(x).is_zero()) found.insert(x);
      }
  roots.insert(roots.end(), found.begin(), found.end());
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace jv
