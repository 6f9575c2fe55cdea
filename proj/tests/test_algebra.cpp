#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "jv/error.hpp"
#include "jv/parse.hpp"
#include "jv/render.hpp"
#include "support.hpp"

using namespace jv;

namespace {

// Linear combination of generators plus a scalar, keyed by basis index.
struct Combo {
  Rat scalar;
  std::map<std::size_t, Rat> terms;

  void add(std::size_t g, const Rat& c) {
    auto& slot = terms[g];
    slot += c;
    if (slot.is_zero()) terms.erase(g);
  }
  bool is_zero() const { return scalar.is_zero() && terms.empty(); }
};

Combo to_combo(const JacobiAlgebra& alg, const BracketResult& r) {
  Combo c;
  c.scalar = r.scalar;
  for (const auto& [g, v] : r.terms) c.add(alg.index(g), v);
  return c;
}

// [x, sum c_z z]; scalars are central.
Combo bracket_with(const JacobiAlgebra& alg, std::size_t x, const Combo& y) {
  Combo out;
  for (const auto& [z, c] : y.terms) {
    const auto& b = alg.bracket(x, z);
    out.scalar += c * b.scalar;
    for (const auto& [w, v] : b.terms) out.add(w, c * v);
  }
  return out;
}

Combo sum(Combo a, const Combo& b) {
  a.scalar += b.scalar;
  for (const auto& [g, v] : b.terms) a.add(g, v);
  return a;
}

bool is_heisenberg(const Generator& g) { return g.family == Family::APlus || g.family == Family::AMinus; }

Generator gen(const char* s, int n = 2) { return parse_generator(s, n); }

}  // namespace

TEST(Algebra, BasisSizes) {
  EXPECT_EQ(JacobiAlgebra(1).size(), 5u);
  // a±1, a±2, b±1, b±2, c±, d±, h1, h2
  EXPECT_EQ(JacobiAlgebra(2).size(), 14u);
  EXPECT_EQ(JacobiAlgebra(3).size(), 27u);
  EXPECT_THROW(JacobiAlgebra(0), DomainError);
}

TEST(Algebra, HeisenbergRelation) {
  const BracketResult r = bracket(gen("a-1"), gen("a+1"));
  EXPECT_EQ(r.scalar, Rat(1));
  EXPECT_TRUE(r.terms.empty());
  EXPECT_TRUE(bracket(gen("a-1"), gen("a+2")).is_zero());
  EXPECT_TRUE(bracket(gen("a+1"), gen("a+2")).is_zero());
}

TEST(Algebra, BracketExamples) {
  // [K-_{22}, K+_{22}] = 2 K0_{22}
  const BracketResult r = bracket(gen("b-2"), gen("b+2"));
  ASSERT_EQ(r.terms.size(), 1u);
  EXPECT_EQ(r.terms.at(gen("h2")), Rat(2));
  // [d-, d+] = (h2 - h1) / 2
  const BracketResult s = bracket(gen("d-"), gen("d+"));
  EXPECT_EQ(s.terms.at(gen("h1")), Rat(-1, 2));
  EXPECT_EQ(s.terms.at(gen("h2")), Rat(1, 2));
  // [a-_1, K+_{12}] = a+_2 / 2
  const BracketResult t = bracket(gen("a-1"), gen("c+"));
  ASSERT_EQ(t.terms.size(), 1u);
  EXPECT_EQ(t.terms.at(gen("a+2")), Rat(1, 2));
  // [K0_{21}, K0_{12}] = (K0_{22} - K0_{11}) / 2, written with bracket syntax
  const BracketResult u = bracket(gen("K0[2,1]"), gen("K0[1,2]"));
  EXPECT_EQ(u.terms.at(gen("K0[2,2]")), Rat(1, 2));
  EXPECT_EQ(u.terms.at(gen("K0[1,1]")), Rat(-1, 2));
  // [a-_1, K+_{11}] = a+_1
  EXPECT_EQ(bracket(gen("a-1"), gen("b+1")).terms.at(gen("a+1")), Rat(1));
}

TEST(Algebra, ClassifyAndMirror) {
  EXPECT_EQ(classify(gen("a+1")), GenClass::Positive);
  EXPECT_EQ(classify(gen("d+")), GenClass::Positive);
  EXPECT_EQ(classify(gen("d-")), GenClass::Negative);
  EXPECT_EQ(classify(gen("h2")), GenClass::Cartan);
  EXPECT_EQ(classify(gen("c-")), GenClass::Negative);
  EXPECT_EQ(mirror(gen("d+")), gen("d-"));
  EXPECT_EQ(mirror(gen("b+2")), gen("b-2"));
}

TEST(Algebra, Weights) {
  const JacobiAlgebra alg(2);
  auto w = [&](const char* s) { return render_weight(alg.weight(gen(s))); };
  EXPECT_EQ(w("a+1"), "d1");
  EXPECT_EQ(w("b+1"), "2d1");
  EXPECT_EQ(w("c+"), "d1+d2");
  EXPECT_EQ(w("d+"), "d1-d2");
  EXPECT_EQ(w("d-"), "-d1+d2");
  EXPECT_EQ(w("h1"), "0");
  EXPECT_EQ(w("a-2"), "-d2");
}

TEST(Algebra, GlobalOrder) {
  const JacobiAlgebra alg(2);
  std::vector<std::string> names;
  for (const auto& g : alg.basis()) names.push_back(render(alg, g));
  const std::vector<std::string> expected{"a+1", "a+2", "b+1", "c+", "b+2", "d+",
                                          "h1",  "h2",  "a-1", "a-2", "b-1", "c-", "b-2", "d-"};
  EXPECT_EQ(names, expected);
}

TEST(Algebra, ForeignGeneratorsRejected) {
  const JacobiAlgebra alg(2);
  EXPECT_THROW(alg.index(Generator::a_plus(3)), DomainError);
  EXPECT_THROW(alg.bracket(Generator::a_plus(3), Generator::a_minus(1)), DomainError);
  EXPECT_THROW(parse_generator("a+3", 2), ParseError);
  EXPECT_THROW(parse_generator("c+", 3), ParseError);
}

TEST(Algebra, GoldenTableN2) {
  const JacobiAlgebra alg(2);
  std::ifstream in(JV_GOLDEN_DIR "/bracket_table_n2.txt");
  ASSERT_TRUE(in) << "missing golden table";
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto bar1 = line.find('|'), bar2 = line.find('|', bar1 + 1);
    std::istringstream head(line.substr(0, bar1));
    std::string xs, ys;
    head >> xs >> ys;
    std::istringstream scalar(line.substr(bar1 + 1, bar2 - bar1 - 1));
    std::string sc;
    scalar >> sc;
    Combo expected;
    expected.scalar = Rat::parse(sc);
    std::istringstream terms(line.substr(bar2 + 1));
    std::string t;
    while (terms >> t) {
      const auto colon = t.find(':');
      expected.add(alg.index(gen(t.substr(0, colon).c_str())), Rat::parse(t.substr(colon + 1)));
    }
    const Combo got = to_combo(alg, alg.bracket(gen(xs.c_str()), gen(ys.c_str())));
    EXPECT_EQ(got.scalar, expected.scalar) << xs << " " << ys;
    EXPECT_EQ(got.terms, expected.terms) << xs << " " << ys;
    ++rows;
  }
  EXPECT_EQ(rows, 14 * 14);
}

class AlgebraProperty : public ::testing::TestWithParam<int> {};

TEST_P(AlgebraProperty, Antisymmetry) {
  const JacobiAlgebra alg(GetParam());
  for (std::size_t x = 0; x < alg.size(); ++x) {
    for (std::size_t y = 0; y < alg.size(); ++y) {
      const Combo a = to_combo(alg, alg.bracket(alg.generator(x), alg.generator(y)));
      Combo b = to_combo(alg, alg.bracket(alg.generator(y), alg.generator(x)));
      EXPECT_TRUE(sum(a, b).is_zero()) << x << "," << y;
    }
  }
}

TEST_P(AlgebraProperty, JacobiIdentity) {
  const JacobiAlgebra alg(GetParam());
  const std::size_t N = alg.size();
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y)
      for (std::size_t z = 0; z < N; ++z) {
        const Combo yz = to_combo(alg, alg.bracket(alg.generator(y), alg.generator(z)));
        const Combo zx = to_combo(alg, alg.bracket(alg.generator(z), alg.generator(x)));
        const Combo xy = to_combo(alg, alg.bracket(alg.generator(x), alg.generator(y)));
        const Combo total = sum(sum(bracket_with(alg, x, yz), bracket_with(alg, y, zx)), bracket_with(alg, z, xy));
        ASSERT_TRUE(total.is_zero()) << x << "," << y << "," << z;
      }
}

TEST_P(AlgebraProperty, HeisenbergIsIdeal) {
  const JacobiAlgebra alg(GetParam());
  for (const auto& x : alg.basis()) {
    if (!is_heisenberg(x)) continue;
    for (const auto& y : alg.basis())
      for (const auto& [g, c] : alg.bracket(x, y).terms) EXPECT_TRUE(is_heisenberg(g));
  }
}

TEST_P(AlgebraProperty, WeightAdditivity) {
  const JacobiAlgebra alg(GetParam());
  for (std::size_t x = 0; x < alg.size(); ++x)
    for (std::size_t y = 0; y < alg.size(); ++y) {
      const Weight sum_w = alg.weight(x) + alg.weight(y);
      const auto& b = alg.bracket(x, y);
      if (!b.scalar.is_zero()) EXPECT_TRUE(same_weight(sum_w, zero_weight(alg.n())));
      for (const auto& [z, c] : b.terms) EXPECT_TRUE(same_weight(alg.weight(z), sum_w));
    }
}

TEST_P(AlgebraProperty, CartanActsDiagonally) {
  const JacobiAlgebra alg(GetParam());
  for (auto h : alg.cartans())
    for (std::size_t g = 0; g < alg.size(); ++g) {
      if (alg.gen_class(g) == GenClass::Cartan) {
        EXPECT_TRUE(alg.bracket(h, g).terms.empty());
        continue;
      }
      const auto& b = alg.bracket(h, g);
      EXPECT_TRUE(b.scalar.is_zero());
      ASSERT_LE(b.terms.size(), 1u);
      if (!b.terms.empty()) EXPECT_EQ(b.terms.front().first, g);
      // The eigenvalue is half the weight coordinate.
      const int k = alg.generator(h).i - 1;
      const Rat eig = b.terms.empty() ? Rat(0) : b.terms.front().second;
      EXPECT_EQ(eig * Rat(2), alg.weight(g)[k]);
    }
}

TEST_P(AlgebraProperty, MirrorNegatesWeight) {
  const JacobiAlgebra alg(GetParam());
  for (auto p : alg.positives()) {
    const auto m = alg.mirror_index(p);
    EXPECT_EQ(alg.gen_class(m), GenClass::Negative);
    EXPECT_TRUE(same_weight(alg.weight(m), -alg.weight(p)));
  }
  EXPECT_EQ(alg.positives().size(), alg.negatives().size());
}

INSTANTIATE_TEST_SUITE_P(Ranks, AlgebraProperty, ::testing::Values(1, 2, 3));

TEST(Algebra, RenderParseRoundTrip) {
  for (int n : {1, 2, 3}) {
    const JacobiAlgebra alg(n);
    for (const auto& g : alg.basis()) EXPECT_EQ(parse_generator(render(alg, g), n), g);
  }
  const JacobiAlgebra alg(2);
  EXPECT_EQ(parse_generator("K0[1,2]", 2), gen("d+"));
  EXPECT_EQ(parse_generator("K+21", 2), gen("c+"));
  EXPECT_EQ(parse_generator("K-[2,2]", 2), gen("b-2"));
}

TEST(Algebra, LatexNames) {
  const JacobiAlgebra alg(2);
  RenderOptions latex;
  latex.notation = Notation::Latex;
  EXPECT_EQ(render(alg, gen("a+1"), latex), "a^+_{1}");
  EXPECT_EQ(render(alg, gen("d+"), latex), "K^0_{12}");
  latex.short_names = true;
  EXPECT_EQ(render(alg, gen("d+"), latex), "d^+");
  EXPECT_EQ(render(alg, gen("b+2"), latex), "b^+_2");
}
