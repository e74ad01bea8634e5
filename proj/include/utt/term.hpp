#ifndef UTT_TERM_HPP
#define UTT_TERM_HPP

// Core syntax. Variables are de Bruijn indices counting term binders only;
// proposition hypotheses occupy telescope slots but bind nothing. Binder
// names are hints for printing and are ignored by equality.

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <variant>

#include "utt/prop.hpp"

namespace utt {

struct TermNode;
using Term = std::shared_ptr<const TermNode>;

namespace tm {

struct Var { std::uint32_t index; };
struct Const { std::string name; };
struct Pi { std::string hint; Term dom; Term cod; };
struct Lam { std::string hint; Term body; };
struct App { Term fn; Term arg; };
struct Nat {};
struct Zero {};
struct Suc { Term pred; };
/// natelim target (x. motive) base (k ih. step)
struct NatElim {
  std::string x;
  Term motive;
  Term base;
  std::string k, ih;
  Term step;
  Term target;
};
struct Id { Term type; Term lhs; Term rhs; };
struct Refl { Term elem; };
/// J (x y e. motive) (x. refl_case) target
struct J {
  std::string x, y, e;
  Term motive;
  std::string rx;
  Term refl_case;
  Term target;
};
struct Univ {};
struct El { Term code; };
struct PiCode { std::string hint; Term dom; Term cod; };
struct NatCode {};
struct IdCode { Term type; Term lhs; Term rhs; };
struct ExtCode { Term type; Prop prop; Term boundary; };
struct PropPiCode { Prop prop; Term body; };
/// {p} A
struct PropPi { Prop prop; Term body; };
/// gl{p} M
struct PropLam { Prop prop; Term body; };
/// M @ p
struct PropApp { Term fn; Prop prop; };
/// {A | p ↪ M}
struct Ext { Term type; Prop prop; Term boundary; };
struct In { Prop prop; Term elem; };
struct Out { Prop prop; Term elem; };

}  // namespace tm

using TermVariant =
    std::variant<tm::Var, tm::Const, tm::Pi, tm::Lam, tm::App, tm::Nat, tm::Zero, tm::Suc, tm::NatElim, tm::Id,
                 tm::Refl, tm::J, tm::Univ, tm::El, tm::PiCode, tm::NatCode, tm::IdCode, tm::ExtCode,
                 tm::PropPiCode, tm::PropPi, tm::PropLam, tm::PropApp, tm::Ext, tm::In, tm::Out>;

struct TermNode {
  TermVariant node;
};

template <class T>
const T* as(const Term& t) {
  return std::get_if<T>(&t->node);
}

template <class T>
bool is(const Term& t) {
  return std::holds_alternative<T>(t->node);
}

/// Structural equality up to binder hints (α-equivalence).
bool alpha_equal(const Term& a, const Term& b);

/// Does the term mention de Bruijn index `index` (relative to its root)?
bool mentions_var(const Term& t, std::uint32_t index);

/// Calls `f` on every proposition embedded anywhere in the term.
void for_each_prop(const Term& t, const std::function<void(const Prop&)>& f);

/// Number of nodes, and maximum depth, for generators and limits.
std::size_t term_size(const Term& t);
std::size_t term_depth(const Term& t);

// Smart constructors.
Term var(std::uint32_t index);
Term cnst(std::string name);
Term pi(std::string hint, Term dom, Term cod);
Term arrow(Term dom, Term cod);  // cod is weakened by the caller
Term lam(std::string hint, Term body);
Term app(Term fn, Term arg);
Term app(Term fn, std::initializer_list<Term> args);
Term nat();
Term zero();
Term suc(Term pred);
Term numeral(unsigned n);
Term natelim(std::string x, Term motive, Term base, std::string k, std::string ih, Term step, Term target);
Term id(Term type, Term lhs, Term rhs);
Term refl(Term elem);
Term j_elim(std::string x, std::string y, std::string e, Term motive, std::string rx, Term refl_case,
            Term target);
Term univ();
Term el(Term code);
Term pi_code(std::string hint, Term dom, Term cod);
Term nat_code();
Term id_code(Term type, Term lhs, Term rhs);
Term ext_code(Term type, Prop p, Term boundary);
Term prop_pi_code(Prop p, Term body);
Term prop_pi(Prop p, Term body);
Term prop_lam(Prop p, Term body);
Term prop_app(Term fn, Prop p);
Term ext(Term type, Prop p, Term boundary);
Term in(Prop p, Term elem);
Term out(Prop p, Term elem);

/// Shift free variables at or above `cutoff` by `by`.
Term shift(const Term& t, std::int32_t by, std::uint32_t cutoff = 0);

}  // namespace utt

#endif  // UTT_TERM_HPP
