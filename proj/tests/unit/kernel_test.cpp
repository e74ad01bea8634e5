#include <gtest/gtest.h>

#include "fragment.hpp"
#include "utt/error.hpp"

namespace utt {
namespace {

const fragment::TestSignature& S() { return fragment::test_signature(); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::Usage;
}

void check(const Telescope& tel, const Term& m, const Term& a) {
  check_term(S().checked.table, S().checked.globals, tel, m, a);
}

TEST(Kernel, TestSignatureChecks) { EXPECT_EQ(S().checked.globals.names().size(), 7u); }

TEST(Kernel, PropAppNeedsTheProp) {
  Term t = prop_app(cnst("k"), S().a);
  EXPECT_EQ(code_of([&] { check({}, t, nat()); }), ErrorCode::PropNotTrue);
  check({PropHyp{S().a}}, t, nat());
  check({PropHyp{S().b}}, t, nat());
}

TEST(Kernel, InChecksBoundary) {
  Term ty = ext(nat(), S().a, numeral(1));
  check({}, in(S().a, out(S().a, cnst("c"))), ty);
  EXPECT_EQ(code_of([&] { check({}, in(S().a, zero()), ty); }), ErrorCode::BoundaryMismatch);
}

TEST(Kernel, InferOutAndIn) {
  Term t = infer_term(S().checked.table, S().checked.globals, {}, out(S().a, app(cnst("wrap"), zero())));
  EXPECT_TRUE(alpha_equal(t, nat()));
  Term self = infer_term(S().checked.table, S().checked.globals, {}, in(S().a, zero()));
  EXPECT_TRUE(alpha_equal(self, ext(nat(), S().a, zero())));
}

TEST(Kernel, LambdaDoesNotInfer) {
  EXPECT_EQ(code_of([&] { check({}, app(lam("x", var(0)), zero()), nat()); }), ErrorCode::CannotInfer);
}

TEST(Kernel, MismatchAndUnbound) {
  EXPECT_EQ(code_of([&] { check({}, cnst("f"), nat()); }), ErrorCode::TypeMismatch);
  EXPECT_EQ(code_of([&] { check({}, cnst("nope"), nat()); }), ErrorCode::UnboundConst);
  EXPECT_EQ(code_of([&] {
              check_type(S().checked.table, S().checked.globals, {}, zero());
            }),
            ErrorCode::NotAType);
}

TEST(Kernel, SignatureErrors) {
  Signature dup = S().sig;
  dup.decls.push_back(decl::Const{"c", nat()});
  EXPECT_EQ(code_of([&] { check_signature(dup); }), ErrorCode::DuplicateConst);

  Signature dup_prop = S().sig;
  dup_prop.decls.push_back(decl::PropLe{"%u.a", top()});
  EXPECT_EQ(code_of([&] { check_signature(dup_prop); }), ErrorCode::DuplicateProp);

  Signature bad = S().sig;
  bad.decls.push_back(decl::Const{"bad", ext(nat(), S().a, cnst("f"))});
  EXPECT_EQ(code_of([&] { check_signature(bad); }), ErrorCode::IllTypedDecl);

  Signature unknown;
  unknown.decls.push_back(decl::PropLe{"p", Prop::of(Atom{5})});
  EXPECT_EQ(code_of([&] { check_signature(unknown); }), ErrorCode::IllTypedDecl);
}

TEST(Kernel, BoundaryUsesHypothesis) {
  // The boundary of {Nat | %u.a ↪ M} is checked where %u.a holds, so an
  // unfolded plus is acceptable there.
  Signature sig = S().sig;
  sig.decls.push_back(decl::Const{
      "two", ext(nat(), S().a, app(out(S().a, cnst("plus")), {numeral(1), numeral(1)}))});
  sig.decls.push_back(decl::Const{"thm", prop_pi(S().a, id(nat(), out(S().a, cnst("two")), numeral(2)))});
  EXPECT_NO_THROW(check_signature(sig));
}

}  // namespace
}  // namespace utt
