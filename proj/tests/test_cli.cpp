#include <gtest/gtest.h>

#include <sstream>

#include "jv/cli.hpp"
#include "jv/error.hpp"
#include "jv/parse.hpp"
#include "jv/render.hpp"

using namespace jv;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "jv");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string w(const char* s, int n = 2) { return render_weight(parse_weight(s, n)); }

}  // namespace

TEST(ParseWeight, Forms) {
  EXPECT_EQ(w("2d1"), "2d1");
  EXPECT_EQ(w("d1+d2"), "d1+d2");
  EXPECT_EQ(w("d1-d2"), "d1-d2");
  EXPECT_EQ(w("2,0"), "2d1");
  EXPECT_EQ(w("3/2,0"), "3/2d1");
  EXPECT_EQ(w("0,0"), "0");
  EXPECT_EQ(w("3d2"), "3d2");
  EXPECT_EQ(w("2*d1 - 1/2 d2"), "2d1-1/2d2");
  EXPECT_EQ(parse_weight("d1-d2", 2)[1], Rat(-1));
}

TEST(ParseWeight, Errors) {
  EXPECT_THROW(parse_weight("", 2), ParseError);
  EXPECT_THROW(parse_weight("d3", 2), ParseError);
  EXPECT_THROW(parse_weight("1,2,3", 2), ParseError);
  EXPECT_THROW(parse_weight("1", 2), ParseError);
  EXPECT_THROW(parse_weight("2x1", 2), ParseError);
  EXPECT_THROW(parse_weight("d1 d2", 2), ParseError);
}

TEST(ParseWeight, RoundTrip) {
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      for (int d : {1, 2, 5}) {
        Weight x = zero_weight(2);
        x[0] = Rat(a, d);
        x[1] = Rat(b, 3);
        EXPECT_TRUE(same_weight(parse_weight(render_weight(x), 2), x)) << render_weight(x);
      }
}

TEST(Parse, ErrorsNameTheToken) {
  try {
    parse_element("a+1 q+2", JacobiAlgebra(2));
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("'q+2'"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_element("(a+1", JacobiAlgebra(2)), ParseError);
  EXPECT_THROW(parse_element("a+1 / a+2", JacobiAlgebra(2)), ParseError);
  EXPECT_THROW(parse_element("a+1 / 0", JacobiAlgebra(2)), ParseError);
}

TEST(Cli, BracketHeisenberg) {
  const Outcome r = run({"bracket", "a-1", "a+1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1\n");
}

TEST(Cli, BracketRankThree) {
  const Outcome r = run({"--n", "3", "bracket", "K-[1,2]", "K+[2,3]"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1/2 K0[3,1]\n");
}

TEST(Cli, NormalOrder) {
  const Outcome r = run({"normal-order", "a-1 a+1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1 + a+1 a-1\n");
}

TEST(Cli, Act) {
  EXPECT_EQ(run({"act", "a-2", "(a+2)^2 v0"}).out, "2 a+2 v0\n");
  EXPECT_EQ(run({"act", "d-", "d+ v0"}).out, "(1/2*L2 - 1/2*L1) v0\n");
  EXPECT_EQ(run({"act", "h1", "v0"}).out, "L1 v0\n");
  EXPECT_EQ(run({"act", "a-2", R"([{"monomial": "(a+2)^2", "coeff": "1"}])"}).out, "2 a+2 v0\n");
}

TEST(Cli, SingularJson) {
  const Outcome r = run({"singular", "--n", "2", "--weight", "d1-d2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["branches"].size(), 1u);
  EXPECT_EQ(j["branches"][0]["constraints"], nlohmann::json::array({"L2 - L1"}));
  EXPECT_EQ(j["branches"][0]["rendered"], nlohmann::json::array({"d+"}));
  EXPECT_EQ(j["monomials"], nlohmann::json::array({"d+"}));
  EXPECT_EQ(j["branches"][0]["vectors"], nlohmann::json::parse(R"([["1"]])"));
  EXPECT_EQ(j["branches"][0]["verified"], true);
  EXPECT_EQ(j["trivial"], false);
}

TEST(Cli, SingularNone) {
  const Outcome r = run({"singular", "--n", "2", "--weight", "d2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("no singular vector"), std::string::npos);
  const Outcome zero = run({"singular", "--weight", "0"});
  EXPECT_EQ(zero.code, 0);
  EXPECT_NE(zero.out.find("trivial"), std::string::npos);
}

TEST(Cli, SingularLatex) {
  const Outcome r = run({"singular", "--weight", "2d2", "--format", "latex", "--short-names"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\\Lambda(H_2) - \\frac{1}{4}"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("b^+_2"), std::string::npos) << r.out;
}

TEST(Cli, Verify) {
  Outcome r = run({"verify", "((a+2)^2 - 2 b+2) v0", "--constraints", "L2 = 1/4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 14), "singular: yes\n");
  r = run({"verify", "a+2 v0"});
  EXPECT_EQ(r.out.substr(0, 13), "singular: no\n");
  EXPECT_NE(r.out.find("a-2: v0"), std::string::npos);
  r = run({"verify", "d+ v0", "--constraints", R"({"equations": ["L2 - L1"], "solved_form": ["L2 = L1"]})",
           "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(r.out)["singular"], true);
  r = run({"verify", "d+ v0", "--constraints", "L1^2 + L2^2 + 1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("unverifiable"), std::string::npos);
}

TEST(Cli, ParseErrorsExitTwo) {
  for (const auto& args : std::vector<std::vector<std::string>>{{"bracket", "a-3", "a+1"},
                                                               {"bracket", "x", "a+1"},
                                                               {"singular", "--weight", "d5"},
                                                               {"act", "a-1", "(a+1"},
                                                               {"verify", "d+ v0", "--constraints", "L1 = 1, L1 = 2"},
                                                               {"verify", "[{\"monomial\": 1}]"},
                                                               {"frobnicate"},
                                                               {"singular"},
                                                               {"--format", "pdf", "bracket", "a-1", "a+1"}}) {
    const Outcome r = run(args);
    EXPECT_EQ(r.code, 2) << args.front();
    EXPECT_FALSE(r.err.empty());
    EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1) << r.err;
  }
}

TEST(Cli, BudgetExitsThree) {
  const Outcome r = run({"singular", "--weight", "2d1", "--branch-budget", "1"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("budget"), std::string::npos);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"singular", "--weight", "3d1+d2", "--format", "json"};
  EXPECT_EQ(run(args).out, run(args).out);
}
