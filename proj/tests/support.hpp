#ifndef JV_TESTS_SUPPORT_HPP
#define JV_TESTS_SUPPORT_HPP

// Seeded random generators and independent oracles shared by the test
// binaries. Nothing here calls the parametric solver.

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "jv/singular.hpp"

namespace jv::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// Rational with numerator in [-bound, bound] and denominator in [1, den].
inline Rat random_rat(Rng& rng, long bound = 9, long den = 7) {
  return Rat(uniform(rng, -bound, bound), uniform(rng, 1, den));
}

inline Rat random_nonzero_rat(Rng& rng, long bound = 9, long den = 7) {
  Rat r;
  do r = random_rat(rng, bound, den);
  while (r.is_zero());
  return r;
}

inline Poly random_poly(Rng& rng, std::size_t vars, int terms, unsigned max_degree) {
  Poly p;
  for (int t = 0; t < terms; ++t) {
    Exponents e(vars, 0);
    unsigned budget = static_cast<unsigned>(uniform(rng, 0, max_degree));
    for (auto& x : e) {
      x = static_cast<std::uint32_t>(uniform(rng, 0, budget));
      budget -= x;
    }
    p += Poly::monomial(e, random_rat(rng));
  }
  return p;
}

inline std::vector<Rat> random_point(Rng& rng, std::size_t vars) {
  std::vector<Rat> pt;
  for (std::size_t k = 0; k < vars; ++k) pt.push_back(random_rat(rng, 40, 11));
  return pt;
}

/// Random positive-only monomial with at most `max_degree` factors.
inline PbwMonomial random_positive_monomial(Rng& rng, const JacobiAlgebra& alg, unsigned max_degree) {
  std::vector<std::uint16_t> f;
  const auto& pos = alg.positives();
  const auto deg = uniform(rng, 0, max_degree);
  for (long k = 0; k < deg; ++k) f.push_back(static_cast<std::uint16_t>(pos[uniform(rng, 0, pos.size() - 1)]));
  std::sort(f.begin(), f.end());
  return PbwMonomial(f);
}

/// Random homogeneous vector: a seed monomial plus further random
/// monomials of the same weight, found by rejection sampling.
inline VermaVector random_vector(Rng& rng, const JacobiAlgebra& alg, unsigned max_degree, int terms) {
  const PbwMonomial seed = random_positive_monomial(rng, alg, max_degree);
  const Weight w = monomial_weight(alg, seed);
  VermaVector v = VermaVector::term(seed, random_poly(rng, alg.n(), 2, 1) + Poly(1));
  for (int tries = 0; tries < 400 && static_cast<int>(v.terms().size()) < terms; ++tries) {
    const PbwMonomial m = random_positive_monomial(rng, alg, max_degree);
    if (same_weight(monomial_weight(alg, m), w)) v.add_term(m, random_poly(rng, alg.n(), 2, 1));
  }
  return v;
}

/// Normal form by repeatedly swapping the rightmost out-of-order pair,
/// without memoization: a reduction strategy different from the library's.
using RawForm = std::map<std::vector<std::uint16_t>, Rat>;

inline RawForm reference_normal_order(const JacobiAlgebra& alg, const std::vector<std::uint16_t>& word) {
  RawForm done;
  std::vector<std::pair<std::vector<std::uint16_t>, Rat>> work{{word, Rat(1)}};
  while (!work.empty()) {
    auto [w, c] = std::move(work.back());
    work.pop_back();
    std::size_t pos = w.size();
    for (std::size_t k = w.size(); k-- > 1;) {
      if (w[k - 1] > w[k]) {
        pos = k - 1;
        break;
      }
    }
    if (pos == w.size()) {
      auto& slot = done[w];
      slot += c;
      if (slot.is_zero()) done.erase(w);
      continue;
    }
    auto swapped = w;
    std::swap(swapped[pos], swapped[pos + 1]);
    work.emplace_back(swapped, c);
    const auto& b = alg.bracket(w[pos], w[pos + 1]);
    if (!b.scalar.is_zero()) {
      std::vector<std::uint16_t> shorter(w.begin(), w.begin() + static_cast<long>(pos));
      shorter.insert(shorter.end(), w.begin() + static_cast<long>(pos) + 2, w.end());
      work.emplace_back(shorter, c * b.scalar);
    }
    for (const auto& [g, coeff] : b.terms) {
      auto next = w;
      next.erase(next.begin() + static_cast<long>(pos) + 1);
      next[pos] = static_cast<std::uint16_t>(g);
      work.emplace_back(next, c * coeff);
    }
  }
  return done;
}

/// Null space of a rational matrix by Gauss-Jordan elimination.
inline std::vector<std::vector<Rat>> rational_kernel(std::vector<std::vector<Rat>> a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t p = row;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    const Rat inv = a[row][c].inverse();
    for (auto& x : a[row]) x *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][c].is_zero()) continue;
      const Rat f = a[r][c];
      for (std::size_t k = 0; k < cols; ++k) a[r][k] -= f * a[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  std::vector<std::vector<Rat>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[free] = Rat(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Conditions on the ansatz at a numeric point, rebuilt from `act` alone.
inline std::vector<std::vector<Rat>> numeric_conditions(const JacobiAlgebra& alg,
                                                        const std::vector<PbwMonomial>& monomials,
                                                        const std::vector<Rat>& point) {
  std::map<std::pair<std::size_t, PbwMonomial>, std::vector<Rat>> rows;
  for (auto x : alg.negatives()) {
    for (std::size_t k = 0; k < monomials.size(); ++k) {
      const VermaVector image = act(alg, x, VermaVector::term(monomials[k], Poly(1)));
      for (const auto& [m, c] : image.terms()) {
        auto& r = rows[{x, m}];
        r.resize(monomials.size(), Rat(0));
        r[k] = c.eval(point);
      }
    }
  }
  std::vector<std::vector<Rat>> out;
  for (auto& [label, r] : rows) out.push_back(std::move(r));
  return out;
}

/// Rank of a list of rational vectors of length `cols`.
inline std::size_t rational_rank(const std::vector<std::vector<Rat>>& vs, std::size_t cols) {
  return cols - rational_kernel(vs, cols).size();
}

}  // namespace jv::testing

#endif  // JV_TESTS_SUPPORT_HPP
