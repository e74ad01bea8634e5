#include <gtest/gtest.h>

#include "gen.hpp"
#include "utt/elab.hpp"
#include "utt/error.hpp"
#include "utt/print.hpp"

namespace utt {
namespace {

const char* const kPlus =
    "def (+) : Nat -> Nat -> Nat :=\n"
    "  fun m => natelim m (fun _ => Nat -> Nat) (fun n => n) (fun k ih => fun n => suc (ih n))\n";

void elab(ElabState& st, const std::string& src) { elab_program(st, parse_program(src)); }

Error elab_error(const std::string& src) {
  ElabState st;
  try {
    elab(st, src);
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "elaborated: " << src;
  return Error(ErrorCode::Usage, "");
}

TEST(Elab, PlusYieldsPropAndConstant) {
  ElabState st;
  elab(st, kPlus);
  ASSERT_EQ(st.sig.decls.size(), 2u);
  EXPECT_EQ(print_signature(st.sig),
            "prop %u.+ ≤ ⊤\n"
            "const (+) : {Nat → Nat → Nat | %u.+ ↪ λ m. natelim m (_. Nat → Nat) (λ n. n) (k ih. λ n. suc (ih n))}\n");
  EXPECT_NO_THROW(check_signature(st.sig));
}

TEST(Elab, UnfoldsMakesPlusTransparent) {
  ElabState st;
  elab(st, std::string(kPlus) + "def two unfolds (+) : Id Nat ((+) 1 1) 2 := refl\n");
  EXPECT_TRUE(entails(st.defs.at("two").prop, st.defs.at("+").prop));
}

TEST(Elab, WithoutUnfoldsPlusIsOpaque) {
  Error e = elab_error(std::string(kPlus) + "def two : Id Nat ((+) 1 1) 2 := refl\n");
  EXPECT_EQ(e.code(), ErrorCode::ConvMismatch);
  EXPECT_NE(e.expected.find("out %u.+"), std::string::npos) << e.expected;
}

TEST(Elab, AbbreviationEqualsItsDependencies) {
  ElabState st;
  elab(st, std::string(kPlus) + "abbreviation def a unfolds (+) : Nat := (+) 1 1\n");
  EXPECT_EQ(st.defs.at("a").prop, st.defs.at("+").prop);
  EXPECT_TRUE(st.defs.at("a").abbrv);
}

TEST(Elab, AbstractIsHidden) {
  ElabState st;
  elab(st, "abstract def s : Nat := 0\n");
  EXPECT_TRUE(st.defs.at("s").hidden);
  EXPECT_TRUE(st.defs.at("s").prop_name.starts_with("%abs."));
  try {
    assumable_prop(st, "s");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::AbstractProp);
  }
  try {
    assumable_prop(st, "%abs.0");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::AbstractProp);
  }
  try {
    assumable_prop(st, "t");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownProp);
  }
}

TEST(Elab, AbstractUnfoldTargetNamesTheSite) {
  Error e = elab_error("abstract def s : Nat := 0\ndef t unfolds s : Nat := s\n");
  EXPECT_EQ(e.code(), ErrorCode::AbstractUnfoldTarget);
  ASSERT_TRUE(e.note_span);
  EXPECT_EQ(e.note_span->begin, 0u);
  EXPECT_NE(std::string(e.what()).find("s"), std::string::npos);
}

TEST(Elab, NameErrors) {
  EXPECT_EQ(elab_error("def t : Nat := u\n").code(), ErrorCode::UnboundName);
  EXPECT_EQ(elab_error("def t unfolds u : Nat := 0\n").code(), ErrorCode::UnknownUnfoldTarget);
  EXPECT_EQ(elab_error("def t : Nat := 0\ndef t : Nat := 1\n").code(), ErrorCode::DuplicateDefinition);
  EXPECT_EQ(elab_error("def t : Nat := natelim 0 Nat 0 (fun k ih => ih)\n").code(), ErrorCode::BadEliminator);
}

TEST(Elab, HolesAreNumberedGoals) {
  ElabState st;
  elab(st, "def f : (n : Nat) -> Id Nat n n := fun n => ?\ndef g : Nat := ?\n");
  const auto& goals = report_goals(st);
  ASSERT_EQ(goals.size(), 2u);
  EXPECT_EQ(goals[0].number, 0u);
  EXPECT_EQ(goals[1].number, 1u);
  EXPECT_EQ(print_term(st.table, goals[0].type, {"n"}), "Id Nat n n");
  EXPECT_EQ(telescope_vars(goals[0].telescope), 1u);
  EXPECT_NO_THROW(check_signature(st.sig));
}

TEST(Elab, GoalTypeIsNormalUnderHypotheses) {
  ElabState st;
  elab(st, std::string(kPlus) + "def t unfolds (+) : (n : Nat) -> Id Nat ((+) 0 n) n := fun n => ?\n");
  const auto& g = report_goals(st).at(0);
  EXPECT_EQ(print_term(st.table, g.type, {"n"}), "Id Nat n n");
  EXPECT_EQ(print_term(st.table, g.raw_type, {"n"}), "Id Nat (out %u.+ (+) ze n) n");
}

TEST(Elab, UnfoldInHoists) {
  ElabState st;
  elab(st, std::string(kPlus) + "def t : (n : Nat) -> unfold (+) in Id Nat ((+) 0 n) n := fun n => ?\n");
  bool found = false;
  for (const auto& d : st.sig.decls) found |= declaration_name(d).starts_with("%unfold.");
  EXPECT_TRUE(found);
  EXPECT_NO_THROW(check_signature(st.sig));
}

TEST(Elab, DagProgramsRecheck) {
  gen::Rng rng(17);
  for (int i = 0; i < 100; ++i) {
    auto d = gen::random_dag(rng);
    ElabState st;
    ASSERT_NO_THROW(elab(st, d.source)) << d.source;
    EXPECT_NO_THROW(check_signature(st.sig)) << d.source;
    for (unsigned n = 0; n < d.deps.size(); ++n)
      for (auto m : d.deps[n]) EXPECT_TRUE(entails(st.defs.at(d.name(n)).prop, st.defs.at(d.name(m)).prop));
  }
}

}  // namespace
}  // namespace utt
