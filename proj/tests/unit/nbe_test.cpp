#include <gtest/gtest.h>

#include "fragment.hpp"
#include "utt/error.hpp"
#include "utt/print.hpp"

namespace utt {
namespace {

const fragment::TestSignature& S() { return fragment::test_signature(); }

Telescope with_nat(const Prop& hyps) {
  Telescope tel;
  if (!hyps.is_top()) tel.push_back(PropHyp{hyps});
  tel.push_back(TermVar{"n", nat()});
  return tel;
}

Term nf(const Prop& hyps, const Term& t) {
  Nbe nbe(S().checked.globals);
  return nbe.normalize(with_nat(hyps), nat(), t).term;
}

std::string show(const Term& t) { return print_term(S().checked.table, t, {"n"}); }

TEST(Nbe, PlusZeroUnfoldsUnderItsProp) {
  Term t = app(out(S().a, cnst("plus")), {zero(), var(0)});
  EXPECT_EQ(show(nf(S().a, t)), "n");
  EXPECT_EQ(show(nf(S().b, t)), "n");
  EXPECT_EQ(show(nf(top(), t)), "out %u.a plus ze n");
}

TEST(Nbe, PlusSucComputesOnTarget) {
  Term t = app(out(S().a, cnst("plus")), {numeral(2), var(0)});
  EXPECT_EQ(show(nf(S().a, t)), "suc (suc n)");
  Term stuck = app(out(S().a, cnst("plus")), {var(0), numeral(2)});
  EXPECT_EQ(show(nf(S().a, stuck)), "natelim n (_. Nat) (suc (suc ze)) (k ih. suc ih)");
}

TEST(Nbe, ChainUnfoldsThroughDependency) {
  Term t = app(out(S().b, cnst("dbl")), numeral(1));
  EXPECT_EQ(show(nf(S().b, t)), "suc (suc ze)");
  // %u.a alone leaves dbl opaque.
  EXPECT_EQ(show(nf(S().a, t)), "out %u.b dbl (suc ze)");
}

TEST(Nbe, OutOfInAndBoundary) {
  EXPECT_EQ(show(nf(top(), out(S().a, in(S().a, var(0))))), "n");
  EXPECT_EQ(show(nf(top(), out(S().a, app(cnst("wrap"), var(0))))), "out %u.a (wrap n)");
  EXPECT_EQ(show(nf(S().a, out(S().a, app(cnst("wrap"), var(0))))), "n");
}

TEST(Nbe, PropLambdaEta) {
  Term t = app(cnst("h"), prop_lam(S().a, prop_app(cnst("k"), S().a)));
  EXPECT_EQ(show(nf(top(), t)), show(nf(top(), app(cnst("h"), cnst("k")))));
}

TEST(Nbe, StrengtheningRereadsNeutrals) {
  // A value computed under ⊤ and read back where %u.a holds is forced.
  Nbe nbe(S().checked.globals);
  Value v = nbe.eval(Env{}, out(S().a, cnst("c")));
  Value ty = nbe.eval(Env{}, nat());
  EXPECT_EQ(show(nbe.readback(ReadCtx{0, S().a}, ty, v)), "suc ze");
  EXPECT_EQ(show(nbe.readback(ReadCtx{0, top()}, ty, v)), "out %u.a c");
}

TEST(Nbe, ConvIsRelativeToHypotheses) {
  Term x = out(S().a, cnst("c"));
  Term y = numeral(1);
  EXPECT_FALSE(fragment::nbe_conv(top(), x, y));
  EXPECT_TRUE(fragment::nbe_conv(S().a, x, y));
  EXPECT_TRUE(fragment::nbe_conv(S().b, x, y));
}

TEST(Nbe, ExtEta) {
  Nbe nbe(S().checked.globals);
  const auto* c = S().checked.globals.find("c");
  ASSERT_NE(c, nullptr);
  Value v = nbe.eval(Env{}, cnst("c"));
  Value w = nbe.eval(Env{}, in(S().a, out(S().a, cnst("c"))));
  EXPECT_TRUE(nbe.conv(ReadCtx{}, c->type_value, v, w));
}

TEST(Nbe, NormalizeIsIdempotent) {
  Term t = app(out(S().b, cnst("dbl")), app(out(S().a, cnst("plus")), {var(0), numeral(1)}));
  for (const auto& s : fragment::settings()) {
    Term once = nf(s.hyps, t);
    EXPECT_TRUE(alpha_equal(nf(s.hyps, once), once)) << s.name;
  }
}

TEST(Nbe, PiInjectivity) {
  Nbe nbe(S().checked.globals);
  auto conv = [&](const Term& x, const Term& y) {
    return nbe.conv_type(ReadCtx{}, nbe.eval(Env{}, x), nbe.eval(Env{}, y));
  };
  Term idn = id(nat(), var(0), zero());
  EXPECT_TRUE(conv(pi("x", nat(), idn), pi("y", nat(), idn)));
  EXPECT_FALSE(conv(pi("x", nat(), idn), pi("x", nat(), id(nat(), zero(), var(0)))));
  EXPECT_FALSE(conv(arrow(nat(), nat()), arrow(id(nat(), zero(), zero()), nat())));
}

}  // namespace
}  // namespace utt
