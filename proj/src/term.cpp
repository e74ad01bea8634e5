#include "utt/term.hpp"

#include <algorithm>
#include <functional>

namespace utt {
namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};

Term make(TermVariant v) { return std::make_shared<const TermNode>(TermNode{std::move(v)}); }

using ChildFn = std::function<void(const Term&, std::uint32_t)>;

// Visit immediate children with the number of term binders each sits under.
void for_each_child(const Term& t, const ChildFn& f) {
  std::visit(overloaded{
                 [](const tm::Var&) {}, [](const tm::Const&) {}, [](const tm::Nat&) {}, [](const tm::Zero&) {},
                 [](const tm::Univ&) {}, [](const tm::NatCode&) {},
                 [&](const tm::Pi& n) { f(n.dom, 0), f(n.cod, 1); },
                 [&](const tm::Lam& n) { f(n.body, 1); },
                 [&](const tm::App& n) { f(n.fn, 0), f(n.arg, 0); },
                 [&](const tm::Suc& n) { f(n.pred, 0); },
                 [&](const tm::NatElim& n) { f(n.motive, 1), f(n.base, 0), f(n.step, 2), f(n.target, 0); },
                 [&](const tm::Id& n) { f(n.type, 0), f(n.lhs, 0), f(n.rhs, 0); },
                 [&](const tm::Refl& n) { f(n.elem, 0); },
                 [&](const tm::J& n) { f(n.motive, 3), f(n.refl_case, 1), f(n.target, 0); },
                 [&](const tm::El& n) { f(n.code, 0); },
                 [&](const tm::PiCode& n) { f(n.dom, 0), f(n.cod, 1); },
                 [&](const tm::IdCode& n) { f(n.type, 0), f(n.lhs, 0), f(n.rhs, 0); },
                 [&](const tm::ExtCode& n) { f(n.type, 0), f(n.boundary, 0); },
                 [&](const tm::PropPiCode& n) { f(n.body, 0); },
                 [&](const tm::PropPi& n) { f(n.body, 0); },
                 [&](const tm::PropLam& n) { f(n.body, 0); },
                 [&](const tm::PropApp& n) { f(n.fn, 0); },
                 [&](const tm::Ext& n) { f(n.type, 0), f(n.boundary, 0); },
                 [&](const tm::In& n) { f(n.elem, 0); },
                 [&](const tm::Out& n) { f(n.elem, 0); },
             },
             t->node);
}

using MapFn = std::function<Term(const Term&, std::uint32_t)>;

Term map_children(const Term& t, const MapFn& f) {
  return std::visit(
      overloaded{
          [&](const tm::Var&) { return t; }, [&](const tm::Const&) { return t; },
          [&](const tm::Nat&) { return t; }, [&](const tm::Zero&) { return t; },
          [&](const tm::Univ&) { return t; }, [&](const tm::NatCode&) { return t; },
          [&](const tm::Pi& n) { return make(tm::Pi{n.hint, f(n.dom, 0), f(n.cod, 1)}); },
          [&](const tm::Lam& n) { return make(tm::Lam{n.hint, f(n.body, 1)}); },
          [&](const tm::App& n) { return make(tm::App{f(n.fn, 0), f(n.arg, 0)}); },
          [&](const tm::Suc& n) { return make(tm::Suc{f(n.pred, 0)}); },
          [&](const tm::NatElim& n) {
            return make(tm::NatElim{n.x, f(n.motive, 1), f(n.base, 0), n.k, n.ih, f(n.step, 2), f(n.target, 0)});
          },
          [&](const tm::Id& n) { return make(tm::Id{f(n.type, 0), f(n.lhs, 0), f(n.rhs, 0)}); },
          [&](const tm::Refl& n) { return make(tm::Refl{f(n.elem, 0)}); },
          [&](const tm::J& n) {
            return make(tm::J{n.x, n.y, n.e, f(n.motive, 3), n.rx, f(n.refl_case, 1), f(n.target, 0)});
          },
          [&](const tm::El& n) { return make(tm::El{f(n.code, 0)}); },
          [&](const tm::PiCode& n) { return make(tm::PiCode{n.hint, f(n.dom, 0), f(n.cod, 1)}); },
          [&](const tm::IdCode& n) { return make(tm::IdCode{f(n.type, 0), f(n.lhs, 0), f(n.rhs, 0)}); },
          [&](const tm::ExtCode& n) { return make(tm::ExtCode{f(n.type, 0), n.prop, f(n.boundary, 0)}); },
          [&](const tm::PropPiCode& n) { return make(tm::PropPiCode{n.prop, f(n.body, 0)}); },
          [&](const tm::PropPi& n) { return make(tm::PropPi{n.prop, f(n.body, 0)}); },
          [&](const tm::PropLam& n) { return make(tm::PropLam{n.prop, f(n.body, 0)}); },
          [&](const tm::PropApp& n) { return make(tm::PropApp{f(n.fn, 0), n.prop}); },
          [&](const tm::Ext& n) { return make(tm::Ext{f(n.type, 0), n.prop, f(n.boundary, 0)}); },
          [&](const tm::In& n) { return make(tm::In{n.prop, f(n.elem, 0)}); },
          [&](const tm::Out& n) { return make(tm::Out{n.prop, f(n.elem, 0)}); },
      },
      t->node);
}

// Props and names that are not children; compared by alpha_equal.
bool same_head(const Term& a, const Term& b) {
  if (a->node.index() != b->node.index()) return false;
  return std::visit(
      overloaded{
          [&](const tm::Var& n) { return n.index == std::get<tm::Var>(b->node).index; },
          [&](const tm::Const& n) { return n.name == std::get<tm::Const>(b->node).name; },
          [&](const tm::ExtCode& n) { return n.prop == std::get<tm::ExtCode>(b->node).prop; },
          [&](const tm::PropPiCode& n) { return n.prop == std::get<tm::PropPiCode>(b->node).prop; },
          [&](const tm::PropPi& n) { return n.prop == std::get<tm::PropPi>(b->node).prop; },
          [&](const tm::PropLam& n) { return n.prop == std::get<tm::PropLam>(b->node).prop; },
          [&](const tm::PropApp& n) { return n.prop == std::get<tm::PropApp>(b->node).prop; },
          [&](const tm::Ext& n) { return n.prop == std::get<tm::Ext>(b->node).prop; },
          [&](const tm::In& n) { return n.prop == std::get<tm::In>(b->node).prop; },
          [&](const tm::Out& n) { return n.prop == std::get<tm::Out>(b->node).prop; },
          [](const auto&) { return true; },
      },
      a->node);
}

}  // namespace

bool alpha_equal(const Term& a, const Term& b) {
  if (a == b) return true;
  if (!same_head(a, b)) return false;
  std::vector<Term> xs, ys;
  for_each_child(a, [&](const Term& c, std::uint32_t) { xs.push_back(c); });
  for_each_child(b, [&](const Term& c, std::uint32_t) { ys.push_back(c); });
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (!alpha_equal(xs[i], ys[i])) return false;
  return true;
}

bool mentions_var(const Term& t, std::uint32_t index) {
  if (const auto* v = as<tm::Var>(t)) return v->index == index;
  bool found = false;
  for_each_child(t, [&](const Term& c, std::uint32_t binders) {
    if (!found) found = mentions_var(c, index + binders);
  });
  return found;
}

void for_each_prop(const Term& t, const std::function<void(const Prop&)>& f) {
  std::visit(overloaded{
                 [&](const tm::ExtCode& n) { f(n.prop); },
                 [&](const tm::PropPiCode& n) { f(n.prop); },
                 [&](const tm::PropPi& n) { f(n.prop); },
                 [&](const tm::PropLam& n) { f(n.prop); },
                 [&](const tm::PropApp& n) { f(n.prop); },
                 [&](const tm::Ext& n) { f(n.prop); },
                 [&](const tm::In& n) { f(n.prop); },
                 [&](const tm::Out& n) { f(n.prop); },
                 [](const auto&) {},
             },
             t->node);
  for_each_child(t, [&](const Term& c, std::uint32_t) { for_each_prop(c, f); });
}

std::size_t term_size(const Term& t) {
  std::size_t n = 1;
  for_each_child(t, [&](const Term& c, std::uint32_t) { n += term_size(c); });
  return n;
}

std::size_t term_depth(const Term& t) {
  std::size_t d = 0;
  for_each_child(t, [&](const Term& c, std::uint32_t) { d = std::max(d, term_depth(c)); });
  return d + 1;
}

Term shift(const Term& t, std::int32_t by, std::uint32_t cutoff) {
  if (by == 0) return t;
  if (const auto* v = as<tm::Var>(t))
    return v->index >= cutoff ? var(static_cast<std::uint32_t>(static_cast<std::int32_t>(v->index) + by)) : t;
  return map_children(t, [&](const Term& c, std::uint32_t binders) { return shift(c, by, cutoff + binders); });
}

Term var(std::uint32_t index) { return make(tm::Var{index}); }
Term cnst(std::string name) { return make(tm::Const{std::move(name)}); }
Term pi(std::string hint, Term dom, Term cod) { return make(tm::Pi{std::move(hint), std::move(dom), std::move(cod)}); }
Term arrow(Term dom, Term cod) { return pi("_", std::move(dom), std::move(cod)); }
Term lam(std::string hint, Term body) { return make(tm::Lam{std::move(hint), std::move(body)}); }
Term app(Term fn, Term arg) { return make(tm::App{std::move(fn), std::move(arg)}); }
Term app(Term fn, std::initializer_list<Term> args) {
  for (const auto& a : args) fn = app(std::move(fn), a);
  return fn;
}
Term nat() {
  static const Term t = make(tm::Nat{});
  return t;
}
Term zero() {
  static const Term t = make(tm::Zero{});
  return t;
}
Term suc(Term pred) { return make(tm::Suc{std::move(pred)}); }
Term numeral(unsigned n) {
  Term t = zero();
  while (n--) t = suc(std::move(t));
  return t;
}
Term natelim(std::string x, Term motive, Term base, std::string k, std::string ih, Term step, Term target) {
  return make(tm::NatElim{std::move(x), std::move(motive), std::move(base), std::move(k), std::move(ih),
                          std::move(step), std::move(target)});
}
Term id(Term type, Term lhs, Term rhs) { return make(tm::Id{std::move(type), std::move(lhs), std::move(rhs)}); }
Term refl(Term elem) { return make(tm::Refl{std::move(elem)}); }
Term j_elim(std::string x, std::string y, std::string e, Term motive, std::string rx, Term refl_case,
            Term target) {
  return make(tm::J{std::move(x), std::move(y), std::move(e), std::move(motive), std::move(rx),
                    std::move(refl_case), std::move(target)});
}
Term univ() {
  static const Term t = make(tm::Univ{});
  return t;
}
Term el(Term code) { return make(tm::El{std::move(code)}); }
Term pi_code(std::string hint, Term dom, Term cod) {
  return make(tm::PiCode{std::move(hint), std::move(dom), std::move(cod)});
}
Term nat_code() {
  static const Term t = make(tm::NatCode{});
  return t;
}
Term id_code(Term type, Term lhs, Term rhs) {
  return make(tm::IdCode{std::move(type), std::move(lhs), std::move(rhs)});
}
Term ext_code(Term type, Prop p, Term boundary) {
  return make(tm::ExtCode{std::move(type), std::move(p), std::move(boundary)});
}
Term prop_pi_code(Prop p, Term body) { return make(tm::PropPiCode{std::move(p), std::move(body)}); }
Term prop_pi(Prop p, Term body) { return make(tm::PropPi{std::move(p), std::move(body)}); }
Term prop_lam(Prop p, Term body) { return make(tm::PropLam{std::move(p), std::move(body)}); }
Term prop_app(Term fn, Prop p) { return make(tm::PropApp{std::move(fn), std::move(p)}); }
Term ext(Term type, Prop p, Term boundary) { return make(tm::Ext{std::move(type), std::move(p), std::move(boundary)}); }
Term in(Prop p, Term elem) { return make(tm::In{std::move(p), std::move(elem)}); }
Term out(Prop p, Term elem) { return make(tm::Out{std::move(p), std::move(elem)}); }

}  // namespace utt
