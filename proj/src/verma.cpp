#include "jv/verma.hpp"

#include <algorithm>

namespace jv {

VermaVector VermaVector::lowest() { return term(PbwMonomial(), Poly(1)); }

VermaVector VermaVector::term(const PbwMonomial& m, const Poly& c) {
  VermaVector v;
  v.add_term(m, c);
  return v;
}

void VermaVector::add_term(const PbwMonomial& m, const Poly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly VermaVector::coefficient(const PbwMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Poly() : it->second;
}

VermaVector& VermaVector::operator+=(const VermaVector& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

VermaVector& VermaVector::operator-=(const VermaVector& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

VermaVector& VermaVector::operator*=(const Poly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

VermaVector act(NormalOrderer& orderer, std::size_t gen, const VermaVector& v) {
  const JacobiAlgebra& alg = orderer.algebra();
  if (gen >= alg.size()) throw DomainError("generator index out of range");
  VermaVector out;
  NormalOrderer::Word word;
  for (const auto& [m, coeff] : v.terms()) {
    word.assign(1, static_cast<std::uint16_t>(gen));
    word.insert(word.end(), m.factors().begin(), m.factors().end());
    for (const auto& [nm, c] : orderer.order(word)) {
      // Global order is positive < Cartan < negative, so a negative factor
      // can only sit at the end, where it annihilates v0.
      const auto factors = nm.factors();
      if (!factors.empty() && alg.gen_class(factors.back()) == GenClass::Negative) continue;
      std::vector<std::uint16_t> positive;
      Poly value(c);
      for (auto g : factors) {
        if (alg.gen_class(g) == GenClass::Cartan)
          value *= Poly::lambda(static_cast<std::size_t>(alg.generator(g).i));
        else
          positive.push_back(g);
      }
      out.add_term(PbwMonomial(std::move(positive)), value * coeff);
    }
  }
  return out;
}

VermaVector act(const JacobiAlgebra& alg, std::size_t gen, const VermaVector& v) {
  NormalOrderer orderer(alg);
  return act(orderer, gen, v);
}

VermaVector act(const JacobiAlgebra& alg, const Generator& x, const VermaVector& v) {
  return act(alg, alg.index(x), v);
}

VermaVector apply(const JacobiAlgebra& alg, const UElement& u, const VermaVector& v) {
  NormalOrderer orderer(alg);
  VermaVector out;
  for (const auto& [m, c] : u.terms()) {
    if (!c.is_polynomial()) throw DomainError("coefficient " + c.str() + " is not a polynomial");
    VermaVector w = v;
    const auto f = m.factors();
    for (auto it = f.rbegin(); it != f.rend() && !w.is_zero(); ++it) w = act(orderer, *it, w);
    out += w * c.num();
  }
  return out;
}

Weight vector_weight(const JacobiAlgebra& alg, const VermaVector& v) {
  if (v.is_zero()) throw DomainError("the zero vector has no weight");
  const auto& first = *v.terms().begin();
  const Weight w = monomial_weight(alg, first.first);
  for (const auto& [m, c] : v.terms()) {
    if (!same_weight(monomial_weight(alg, m), w)) {
      auto describe = [&](const PbwMonomial& mono) {
        std::string s = "[";
        for (auto g : mono.factors()) s += (s.size() > 1 ? "," : "") + std::to_string(g);
        return s + "]";
      };
      throw InhomogeneousError("inhomogeneous vector: monomials " + describe(first.first) + " and " +
                               describe(m) + " have different weights");
    }
  }
  return w;
}

ConstraintSet::ConstraintSet(std::vector<Poly> equations) {
  for (auto& e : equations) {
    if (e.is_zero()) continue;
    if (e.is_constant()) throw DomainError("inconsistent constraint " + e.str() + " = 0");
    equations_.push_back(squarefree_part(e));
  }
  std::sort(equations_.begin(), equations_.end());
  equations_.erase(std::unique(equations_.begin(), equations_.end()), equations_.end());

  std::map<std::size_t, Poly> solved;
  auto reduce_with = [&](Poly p) {
    for (const auto& [var, rhs] : solved) p = p.substitute(var, rhs);
    return p;
  };
  std::vector<Poly> pending = equations_;
  bool progress = true;
  while (progress && !pending.empty()) {
    progress = false;
    for (auto it = pending.begin(); it != pending.end(); ++it) {
      const Poly p = reduce_with(*it);
      if (p.is_zero()) {
        pending.erase(it);
        progress = true;
        break;
      }
      if (p.is_constant()) throw DomainError("inconsistent constraints");
      if (!is_affine(p)) continue;
      const Poly lin = content_free(p);
      const std::size_t var = lin.max_variable();
      const Poly rhs = Poly::lambda(var) - lin;
      for (auto& [v, r] : solved) r = r.substitute(var, rhs);
      solved[var] = rhs;
      pending.erase(it);
      progress = true;
      break;
    }
  }
  if (!pending.empty()) return;
  // Every equation follows from the solved form, so its reduced rows are a
  // canonical presentation of the same locus.
  equations_.clear();
  for (const auto& [var, rhs] : solved) equations_.push_back(content_free(Poly::lambda(var) - rhs));
  std::sort(equations_.begin(), equations_.end());
  solved_ = std::move(solved);
}

const std::map<std::size_t, Poly>& ConstraintSet::solved_form() const {
  if (!solved_) throw DomainError("constraints have no affine solved form");
  return *solved_;
}

Poly ConstraintSet::reduce(const Poly& p) const {
  Poly r = p;
  for (const auto& [var, rhs] : solved_form()) r = r.substitute(var, rhs);
  return r;
}

RatFunc ConstraintSet::reduce(const RatFunc& p) const { return RatFunc(reduce(p.num()), reduce(p.den())); }

bool ConstraintSet::satisfied_by(std::span<const Rat> point) const {
  return std::all_of(equations_.begin(), equations_.end(),
                     [&](const Poly& e) { return e.eval(point).is_zero(); });
}

std::vector<Rat> ConstraintSet::complete_point(std::vector<Rat> values) const {
  for (const auto& [var, rhs] : solved_form()) {
    if (values.size() < var) values.resize(var);
  }
  std::map<std::size_t, Rat> free;
  for (std::size_t k = 0; k < values.size(); ++k)
    if (!solved_form().count(k + 1)) free[k + 1] = values[k];
  for (const auto& [var, rhs] : solved_form()) {
    const Poly v = rhs.eval(free);
    if (!v.is_constant()) throw DomainError("point does not fix every free variable");
    values[var - 1] = v.constant_term();
  }
  return values;
}

SingularityReport is_singular(const JacobiAlgebra& alg, const VermaVector& v, const ConstraintSet& c) {
  SingularityReport report;
  if (!c.has_solved_form()) {
    report.verifiable = false;
    report.note = "unverifiable constraints: no affine solved form";
    return report;
  }
  NormalOrderer orderer(alg);
  const VermaVector reduced = v.map_coefficients([&](const Poly& p) { return c.reduce(p); });
  report.singular = !reduced.is_zero();
  if (reduced.is_zero()) report.note = "vector vanishes under the constraints";
  for (auto gen : alg.negatives()) {
    SingularCheck check;
    check.generator = gen;
    check.residual = act(orderer, gen, reduced).map_coefficients([&](const Poly& p) { return c.reduce(p); });
    check.vanishes = check.residual.is_zero();
    report.singular = report.singular && check.vanishes;
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace jv
