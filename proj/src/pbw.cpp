#include "jv/pbw.hpp"

#include <algorithm>

#include "jv/error.hpp"

namespace jv {

namespace {

void accumulate(NormalOrderer::RationalForm& into, const NormalOrderer::RationalForm& from,
                const Rat& scale) {
  for (const auto& [m, c] : from) {
    auto [it, inserted] = into.try_emplace(m, c * scale);
    if (!inserted) {
      it->second += c * scale;
      if (it->second.is_zero()) into.erase(it);
    }
  }
}

}  // namespace

PbwMonomial::PbwMonomial(std::vector<std::uint16_t> factors) : factors_(std::move(factors)) {
  if (!std::is_sorted(factors_.begin(), factors_.end()))
    throw DomainError("PBW monomial factors must be in global order");
}

PbwMonomial PbwMonomial::from_powers(std::span<const std::pair<std::size_t, unsigned>> powers) {
  std::vector<std::uint16_t> f;
  for (const auto& [gen, mult] : powers) f.insert(f.end(), mult, static_cast<std::uint16_t>(gen));
  std::sort(f.begin(), f.end());
  return PbwMonomial(std::move(f));
}

unsigned PbwMonomial::exponent(std::size_t gen) const {
  return static_cast<unsigned>(std::count(factors_.begin(), factors_.end(), gen));
}

std::vector<std::pair<std::size_t, unsigned>> PbwMonomial::powers() const {
  std::vector<std::pair<std::size_t, unsigned>> out;
  for (auto g : factors_) {
    if (!out.empty() && out.back().first == g)
      ++out.back().second;
    else
      out.emplace_back(g, 1u);
  }
  return out;
}

Weight monomial_weight(const JacobiAlgebra& alg, const PbwMonomial& m) {
  Weight w = zero_weight(alg.n());
  for (auto g : m.factors()) w += alg.weight(g);
  return w;
}

bool graded_less(const JacobiAlgebra& alg, const PbwMonomial& a, const PbwMonomial& b) {
  auto heisenberg_degree = [&](const PbwMonomial& m) {
    return std::count_if(m.factors().begin(), m.factors().end(), [&](std::uint16_t g) {
      const Family f = alg.generator(g).family;
      return f == Family::APlus || f == Family::AMinus;
    });
  };
  const auto ha = heisenberg_degree(a), hb = heisenberg_degree(b);
  if (ha != hb) return ha < hb;
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t g = 0; g < alg.size(); ++g) {
    const unsigned ea = a.exponent(g), eb = b.exponent(g);
    if (ea != eb) return ea > eb;
  }
  return false;
}

UElement UElement::scalar(const RatFunc& c) {
  UElement u;
  u.add_term(PbwMonomial(), c);
  return u;
}

UElement UElement::generator(std::size_t gen) {
  UElement u;
  u.add_term(PbwMonomial({static_cast<std::uint16_t>(gen)}), RatFunc(1));
  return u;
}

void UElement::add_term(const PbwMonomial& m, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

UElement& UElement::operator+=(const UElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

UElement& UElement::operator-=(const UElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

UElement& UElement::operator*=(const RatFunc& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

const NormalOrderer::RationalForm& NormalOrderer::order(const Word& word) {
  if (auto it = memo_.find(word); it != memo_.end()) return it->second;

  std::size_t p = 0;
  while (p + 1 < word.size() && word[p] <= word[p + 1]) ++p;

  RationalForm result;
  if (p + 1 >= word.size()) {
    result.emplace(PbwMonomial(word), Rat(1));
  } else {
    if (fuel_ != 0 && steps_ >= fuel_) throw ConsistencyError("normal ordering ran out of fuel");
    ++steps_;
    // x y = y x + [x, y]
    Word swapped = word;
    std::swap(swapped[p], swapped[p + 1]);
    accumulate(result, order(swapped), Rat(1));

    const auto& br = alg_->bracket(word[p], word[p + 1]);
    Word shorter;
    shorter.reserve(word.size() - 1);
    if (!br.scalar.is_zero()) {
      shorter.assign(word.begin(), word.begin() + p);
      shorter.insert(shorter.end(), word.begin() + p + 2, word.end());
      accumulate(result, order(shorter), br.scalar);
    }
    for (const auto& [z, c] : br.terms) {
      shorter.assign(word.begin(), word.begin() + p);
      shorter.push_back(static_cast<std::uint16_t>(z));
      shorter.insert(shorter.end(), word.begin() + p + 2, word.end());
      accumulate(result, order(shorter), c);
    }
  }
  return memo_.emplace(word, std::move(result)).first->second;
}

UElement normal_order(NormalOrderer& orderer, std::span<const std::size_t> word,
                      const RatFunc& prefactor) {
  NormalOrderer::Word w;
  w.reserve(word.size());
  for (auto g : word) {
    if (g >= orderer.algebra().size()) throw DomainError("generator index out of range");
    w.push_back(static_cast<std::uint16_t>(g));
  }
  UElement out;
  if (prefactor.is_zero()) return out;
  for (const auto& [m, c] : orderer.order(w)) out.add_term(m, prefactor * RatFunc(c));
  return out;
}

UElement normal_order(const JacobiAlgebra& alg, std::span<const std::size_t> word,
                      const RatFunc& prefactor) {
  NormalOrderer orderer(alg);
  return normal_order(orderer, word, prefactor);
}

UElement multiply(NormalOrderer& orderer, const UElement& a, const UElement& b) {
  UElement out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      NormalOrderer::Word w(ma.factors().begin(), ma.factors().end());
      w.insert(w.end(), mb.factors().begin(), mb.factors().end());
      const RatFunc coeff = ca * cb;
      for (const auto& [m, c] : orderer.order(w)) out.add_term(m, coeff * RatFunc(c));
    }
  }
  return out;
}

UElement multiply(const JacobiAlgebra& alg, const UElement& a, const UElement& b) {
  NormalOrderer orderer(alg);
  return multiply(orderer, a, b);
}

UElement lift(const JacobiAlgebra& alg, const BracketResult& r) {
  UElement u = UElement::scalar(RatFunc(r.scalar));
  for (const auto& [g, c] : r.terms) u += UElement::generator(alg.index(g)) * RatFunc(c);
  return u;
}

}  // namespace jv
