#include <gtest/gtest.h>

#include "fragment.hpp"
#include "oracle.hpp"

namespace utt {
namespace {

using oracle::Verdict;

const fragment::TestSignature& S() { return fragment::test_signature(); }

bool has(const std::vector<Term>& ts, const Term& t) {
  for (const auto& u : ts)
    if (alpha_equal(u, t)) return true;
  return false;
}

TEST(Oracle, OutOfIn) {
  Term a = numeral(1);
  EXPECT_TRUE(has(oracle::rewrite_step(S().consts, top(), out(S().a, in(S().a, a))), a));
}

TEST(Oracle, CollapseNeedsTheProp) {
  Term t = out(S().a, cnst("c"));
  EXPECT_TRUE(has(oracle::rewrite_step(S().consts, S().a, t), numeral(1)));
  EXPECT_TRUE(oracle::rewrite_step(S().consts, top(), t).empty());
}

TEST(Oracle, ZeroIsNormal) { EXPECT_TRUE(oracle::rewrite_step(S().consts, top(), zero()).empty()); }

TEST(Oracle, Reflexive) {
  Term t = app(cnst("f"), out(S().a, cnst("c")));
  EXPECT_EQ(oracle::oracle_conv(S().consts, top(), t, t), Verdict::Equal);
}

TEST(Oracle, PlusZeroLeft) {
  Term t = app(out(S().a, cnst("plus")), {zero(), var(0)});
  EXPECT_EQ(oracle::oracle_conv(S().consts, S().a, t, var(0)), Verdict::Equal);
  EXPECT_EQ(oracle::oracle_conv(S().consts, top(), t, var(0)), Verdict::Distinct);
}

TEST(Oracle, PropLambdaEta) {
  Term x = app(cnst("h"), prop_lam(S().a, prop_app(cnst("k"), S().a)));
  EXPECT_EQ(oracle::oracle_conv(S().consts, top(), x, app(cnst("h"), cnst("k"))), Verdict::Equal);
}

TEST(Oracle, BudgetIsReported) {
  Term big = app(out(S().b, cnst("dbl")), app(out(S().b, cnst("dbl")), numeral(3)));
  EXPECT_EQ(oracle::oracle_conv(S().consts, S().b, big, numeral(12), {50}), Verdict::Inconclusive);
}

TEST(Oracle, StepsPreserveTyping) {
  for (const auto& s : fragment::settings()) {
    fragment::Generator g(11, s.hyps);
    for (int i = 0; i < 60; ++i) {
      Term t = g.nat(4);
      ASSERT_TRUE(fragment::well_typed(s.hyps, t));
      for (const auto& u : oracle::rewrite_step(S().consts, s.hyps, t))
        EXPECT_TRUE(fragment::well_typed(s.hyps, u)) << s.name;
    }
  }
}

TEST(Oracle, AgreesWithNbe) {
  for (const auto& s : fragment::settings()) {
    fragment::Generator g(3, s.hyps);
    for (int i = 0; i < 100; ++i) {
      auto [x, y] = g.pair(4);
      auto v = oracle::oracle_conv(S().consts, s.hyps, x, y);
      if (v == Verdict::Inconclusive) continue;
      EXPECT_EQ(v == Verdict::Equal, fragment::nbe_conv(s.hyps, x, y)) << s.name;
    }
  }
}

}  // namespace
}  // namespace utt
