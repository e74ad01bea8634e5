#include <gtest/gtest.h>

#include "utt/term.hpp"

namespace utt {
namespace {

TEST(Term, AlphaEqualIgnoresHints) {
  EXPECT_TRUE(alpha_equal(lam("x", var(0)), lam("y", var(0))));
  EXPECT_FALSE(alpha_equal(lam("x", var(0)), lam("x", zero())));
  EXPECT_TRUE(alpha_equal(pi("a", nat(), nat()), arrow(nat(), nat())));
}

TEST(Term, PropsDistinguish) {
  Prop a = Prop::of(Atom{0});
  EXPECT_FALSE(alpha_equal(out(a, cnst("c")), out(top(), cnst("c"))));
  EXPECT_TRUE(alpha_equal(in(a, zero()), in(a, zero())));
}

TEST(Term, Shift) {
  Term t = lam("x", app(var(0), var(1)));
  EXPECT_TRUE(alpha_equal(shift(t, 2), lam("x", app(var(0), var(3)))));
  EXPECT_TRUE(alpha_equal(shift(shift(t, 2), -2), t));
}

TEST(Term, MentionsVar) {
  Term t = natelim("x", nat(), var(0), "k", "ih", var(3), zero());
  EXPECT_TRUE(mentions_var(t, 0));
  EXPECT_TRUE(mentions_var(t, 1));
  EXPECT_FALSE(mentions_var(t, 2));
}

TEST(Term, SizeAndDepth) {
  Term t = suc(suc(zero()));
  EXPECT_EQ(term_size(t), 3u);
  EXPECT_EQ(term_depth(t), 3u);
  EXPECT_TRUE(alpha_equal(numeral(2), t));
}

TEST(Term, ForEachProp) {
  Prop a = Prop::of(Atom{0}), b = Prop::of(Atom{1});
  int n = 0;
  for_each_prop(ext(nat(), a, out(b, cnst("c"))), [&](const Prop&) { ++n; });
  EXPECT_EQ(n, 2);
}

}  // namespace
}  // namespace utt
