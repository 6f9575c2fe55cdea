#include "jv/algebra.hpp"

#include "jv/error.hpp"

namespace jv {

namespace {

Rat delta(int a, int b) { return a == b ? Rat(1) : Rat(0); }

const Rat kHalf(1, 2);

// Canonical representative for the symmetric families.
Generator canonical(Generator g) {
  if ((g.family == Family::KPlus || g.family == Family::KMinus) && g.i > g.j) std::swap(g.i, g.j);
  return g;
}

// Ordered cases; every other pair is reached through antisymmetry.
//   [a-_i, a+_j]   = delta_ij
//   [a-_i, K+_kj]  = 1/2 delta_ik a+_j + 1/2 delta_ij a+_k
//   [K-_kj, a+_i]  = 1/2 delta_ik a-_j + 1/2 delta_ij a-_k
//   [K0_ij, a+_k]  = 1/2 delta_jk a+_i
//   [a-_k, K0_ij]  = 1/2 delta_ik a-_j
//   2[K-_ij, K0_kl] = K-_il delta_kj + K-_jl delta_ki
//   2[K-_ij, K+_kl] = K0_kj delta_li + K0_lj delta_ki + K0_ki delta_lj + K0_li delta_kj
//   2[K+_ij, K0_kl] = -K+_ik delta_jl - K+_jk delta_li
//   2[K0_ji, K0_kl] = K0_jl delta_ki - K0_ki delta_lj
// together with the vanishing brackets [a+, a+], [a-, a-], [a+, K+],
// [a-, K-], [K+, K+], [K-, K-].
bool bracket_direct(const Generator& x, const Generator& y, BracketResult& r) {
  using F = Family;
  const F fx = x.family, fy = y.family;
  if (fx == F::AMinus && fy == F::APlus) {
    r.scalar = delta(x.i, y.i);
    return true;
  }
  if ((fx == F::APlus && fy == F::APlus) || (fx == F::AMinus && fy == F::AMinus) ||
      (fx == F::APlus && fy == F::KPlus) || (fx == F::AMinus && fy == F::KMinus) ||
      (fx == F::KPlus && fy == F::KPlus) || (fx == F::KMinus && fy == F::KMinus))
    return true;
  if (fx == F::AMinus && fy == F::KPlus) {
    const int i = x.i, k = y.i, j = y.j;
    r.add(Generator::a_plus(j), kHalf * delta(i, k));
    r.add(Generator::a_plus(k), kHalf * delta(i, j));
    return true;
  }
  if (fx == F::KMinus && fy == F::APlus) {
    const int k = x.i, j = x.j, i = y.i;
    r.add(Generator::a_minus(j), kHalf * delta(i, k));
    r.add(Generator::a_minus(k), kHalf * delta(i, j));
    return true;
  }
  if (fx == F::KZero && fy == F::APlus) {
    const int i = x.i, j = x.j, k = y.i;
    r.add(Generator::a_plus(i), kHalf * delta(j, k));
    return true;
  }
  if (fx == F::AMinus && fy == F::KZero) {
    const int k = x.i, i = y.i, j = y.j;
    r.add(Generator::a_minus(j), kHalf * delta(i, k));
    return true;
  }
  if (fx == F::KMinus && fy == F::KZero) {
    const int i = x.i, j = x.j, k = y.i, l = y.j;
    r.add(Generator::k_minus(i, l), kHalf * delta(k, j));
    r.add(Generator::k_minus(j, l), kHalf * delta(k, i));
    return true;
  }
  if (fx == F::KMinus && fy == F::KPlus) {
    const int i = x.i, j = x.j, k = y.i, l = y.j;
    r.add(Generator::k_zero(k, j), kHalf * delta(l, i));
    r.add(Generator::k_zero(l, j), kHalf * delta(k, i));
    r.add(Generator::k_zero(k, i), kHalf * delta(l, j));
    r.add(Generator::k_zero(l, i), kHalf * delta(k, j));
    return true;
  }
  if (fx == F::KPlus && fy == F::KZero) {
    const int i = x.i, j = x.j, k = y.i, l = y.j;
    r.add(Generator::k_plus(i, k), -kHalf * delta(j, l));
    r.add(Generator::k_plus(j, k), -kHalf * delta(l, i));
    return true;
  }
  if (fx == F::KZero && fy == F::KZero) {
    const int j = x.i, i = x.j, k = y.i, l = y.j;
    r.add(Generator::k_zero(j, l), kHalf * delta(k, i));
    r.add(Generator::k_zero(k, i), -kHalf * delta(l, j));
    return true;
  }
  return false;
}

}  // namespace

Weight zero_weight(int n) { return Weight::Constant(n, Rat(0)); }

bool same_weight(const Weight& a, const Weight& b) { return a.size() == b.size() && a == b; }

bool weight_less(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (Eigen::Index k = 0; k < a.size(); ++k)
    if (a[k] != b[k]) return a[k] < b[k];
  return false;
}

void BracketResult::add(const Generator& g, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(canonical(g), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

BracketResult& BracketResult::operator+=(const BracketResult& o) {
  scalar += o.scalar;
  for (const auto& [g, c] : o.terms) add(g, c);
  return *this;
}

BracketResult& BracketResult::operator*=(const Rat& c) {
  scalar *= c;
  if (c.is_zero()) {
    terms.clear();
    return *this;
  }
  for (auto& [g, v] : terms) v *= c;
  return *this;
}

GenClass classify(const Generator& g) {
  switch (g.family) {
    case Family::APlus:
    case Family::KPlus:
      return GenClass::Positive;
    case Family::AMinus:
    case Family::KMinus:
      return GenClass::Negative;
    case Family::KZero:
      break;
  }
  if (g.i < g.j) return GenClass::Positive;
  return g.i == g.j ? GenClass::Cartan : GenClass::Negative;
}

Generator mirror(const Generator& g) {
  switch (g.family) {
    case Family::APlus: return Generator::a_minus(g.i);
    case Family::AMinus: return Generator::a_plus(g.i);
    case Family::KPlus: return Generator::k_minus(g.i, g.j);
    case Family::KMinus: return Generator::k_plus(g.i, g.j);
    case Family::KZero: break;
  }
  return Generator::k_zero(g.j, g.i);
}

BracketResult bracket(const Generator& x0, const Generator& y0) {
  const Generator x = canonical(x0), y = canonical(y0);
  BracketResult r;
  if (bracket_direct(x, y, r)) return r;
  if (bracket_direct(y, x, r)) return -r;
  throw ConsistencyError("no structure constant for this generator pair");
}

std::vector<Generator> generators(int n) {
  if (n < 1) throw DomainError("Jacobi algebra dimension n must be >= 1, got " + std::to_string(n));
  std::vector<Generator> pos;
  for (int i = 1; i <= n; ++i) pos.push_back(Generator::a_plus(i));
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) pos.push_back(Generator::k_plus(i, j));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pos.push_back(Generator::k_zero(i, j));
  std::vector<Generator> all = pos;
  for (int i = 1; i <= n; ++i) all.push_back(Generator::k_zero(i, i));
  for (const auto& g : pos) all.push_back(mirror(g));
  return all;
}

Weight weight(const Generator& g, int n) {
  Weight w = zero_weight(n);
  const Generator cg = canonical(g);
  for (int k = 1; k <= n; ++k) {
    const BracketResult r = bracket(Generator::k_zero(k, k), cg);
    if (!r.scalar.is_zero() || r.terms.size() > 1 ||
        (r.terms.size() == 1 && r.terms.begin()->first != cg))
      throw ConsistencyError("generator is not an eigenvector of ad h");
    const Rat eigenvalue = r.terms.empty() ? Rat(0) : r.terms.begin()->second;
    w[k - 1] = Rat(2) * eigenvalue;
  }
  return w;
}

JacobiAlgebra::JacobiAlgebra(int n) : n_(n), basis_(generators(n)) {
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    lookup_.emplace(basis_[k], k);
    const GenClass c = classify(basis_[k]);
    classes_.push_back(c);
    weights_.push_back(jv::weight(basis_[k], n));
    (c == GenClass::Positive ? positives_ : c == GenClass::Cartan ? cartans_ : negatives_).push_back(k);
  }
  for (const auto& g : basis_) mirrors_.push_back(lookup_.at(mirror(g)));
  table_.resize(size() * size());
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b) {
      const BracketResult r = jv::bracket(basis_[a], basis_[b]);
      auto& entry = table_[a * size() + b];
      entry.scalar = r.scalar;
      for (const auto& [g, c] : r.terms) entry.terms.emplace_back(lookup_.at(g), c);
    }
}

bool JacobiAlgebra::contains(const Generator& g) const { return lookup_.count(g) != 0; }

std::size_t JacobiAlgebra::index(const Generator& g) const {
  auto it = lookup_.find(g);
  if (it == lookup_.end())
    throw DomainError("generator is not a basis element of g_" + std::to_string(n_));
  return it->second;
}

BracketResult JacobiAlgebra::bracket(const Generator& x, const Generator& y) const {
  index(x);
  index(y);
  return jv::bracket(x, y);
}

}  // namespace jv
