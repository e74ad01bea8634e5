#include "fragment.hpp"

#include <functional>

#include "utt/error.hpp"

namespace utt::fragment {
namespace {

Signature build(Prop& a, Prop& b) {
  PropTable t;
  a = t.extend_le("%u.a", top());
  b = t.extend_le("%u.b", a);
  Signature sig;
  sig.decls.push_back(decl::PropLe{"%u.a", top()});
  sig.decls.push_back(decl::PropLe{"%u.b", a});
  Term plus_body = lam("m", lam("n", natelim("_", nat(), var(0), "k", "ih", suc(var(0)), var(1))));
  sig.decls.push_back(decl::Const{"plus", ext(arrow(nat(), arrow(nat(), nat())), a, plus_body)});
  sig.decls.push_back(
      decl::Const{"dbl", ext(arrow(nat(), nat()), b, lam("x", app(out(a, cnst("plus")), {var(0), var(0)})))});
  sig.decls.push_back(decl::Const{"c", ext(nat(), a, suc(zero()))});
  sig.decls.push_back(decl::Const{"f", arrow(nat(), nat())});
  sig.decls.push_back(decl::Const{"wrap", pi("x", nat(), ext(nat(), a, var(0)))});
  sig.decls.push_back(decl::Const{"k", prop_pi(a, nat())});
  sig.decls.push_back(decl::Const{"h", arrow(prop_pi(a, nat()), nat())});
  return sig;
}

Telescope telescope(const Prop& hyps) {
  Telescope tel;
  if (!hyps.is_top()) tel.push_back(PropHyp{hyps});
  return tel;
}

bool nat_child(const Term& parent, std::size_t i, const Term& child) {
  // Function positions, the argument of out and natelim's motive are not Nat.
  if (is<tm::PropLam>(child) || is<tm::Const>(child)) return false;
  if (is<tm::App>(parent) || is<tm::PropApp>(parent) || is<tm::Out>(parent)) return is<tm::App>(parent) && i == 1;
  if (is<tm::NatElim>(parent)) return i != 0;
  return true;
}

struct Slot {
  Term term;
  std::uint32_t binders;
};

std::vector<Slot> slots(const Term& t) {
  if (const auto* n = as<tm::Suc>(t)) return {{n->pred, 0}};
  if (const auto* n = as<tm::App>(t)) return {{n->fn, 0}, {n->arg, 0}};
  if (const auto* n = as<tm::NatElim>(t)) return {{n->motive, 1}, {n->base, 0}, {n->step, 2}, {n->target, 0}};
  if (const auto* n = as<tm::Lam>(t)) return {{n->body, 1}};
  if (const auto* n = as<tm::In>(t)) return {{n->elem, 0}};
  if (const auto* n = as<tm::Out>(t)) return {{n->elem, 0}};
  if (const auto* n = as<tm::PropLam>(t)) return {{n->body, 0}};
  if (const auto* n = as<tm::PropApp>(t)) return {{n->fn, 0}};
  return {};
}

Term rebuild(const Term& t, const std::vector<Term>& k) {
  if (is<tm::Suc>(t)) return suc(k[0]);
  if (is<tm::App>(t)) return app(k[0], k[1]);
  if (const auto* n = as<tm::NatElim>(t)) return natelim(n->x, k[0], k[1], n->k, n->ih, k[2], k[3]);
  if (const auto* n = as<tm::Lam>(t)) return lam(n->hint, k[0]);
  if (const auto* n = as<tm::In>(t)) return in(n->prop, k[0]);
  if (const auto* n = as<tm::Out>(t)) return out(n->prop, k[0]);
  if (const auto* n = as<tm::PropLam>(t)) return prop_lam(n->prop, k[0]);
  if (const auto* n = as<tm::PropApp>(t)) return prop_app(k[0], n->prop);
  return t;
}

std::size_t count_nat(const Term& t) {
  std::size_t n = 1;
  auto s = slots(t);
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::size_t below = count_nat(s[i].term);
    n += nat_child(t, i, s[i].term) ? below : below - 1;
  }
  return n;
}

// Applies `f` at the `target`-th Nat-typed position in preorder.
Term at_position(const Term& t, bool is_nat, std::uint32_t scope, std::size_t& target,
                 const std::function<Term(const Term&, std::uint32_t)>& f) {
  if (is_nat) {
    if (target == 0) {
      target = static_cast<std::size_t>(-1);
      return f(t, scope);
    }
    --target;
  }
  auto s = slots(t);
  std::vector<Term> kids;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (target == static_cast<std::size_t>(-1)) {
      kids.push_back(s[i].term);
      continue;
    }
    kids.push_back(at_position(s[i].term, nat_child(t, i, s[i].term), scope + s[i].binders, target, f));
  }
  return kids.empty() ? t : rebuild(t, kids);
}

Term rename_at(const Term& t, const std::vector<std::uint32_t>& map, std::uint32_t depth) {
  if (const auto* v = as<tm::Var>(t)) return v->index < depth ? t : var(map.at(v->index - depth) + depth);
  auto s = slots(t);
  if (s.empty()) return t;
  std::vector<Term> kids;
  for (const auto& k : s) kids.push_back(rename_at(k.term, map, depth + k.binders));
  return rebuild(t, kids);
}

}  // namespace

Term rename_vars(const Term& t, const std::vector<std::uint32_t>& map) { return rename_at(t, map, 0); }

TestSignature::TestSignature() : sig(build(a, b)), checked(check_signature(sig)), consts(sig) {}

const TestSignature& test_signature() {
  static const TestSignature s;
  return s;
}

std::vector<Setting> settings() {
  const auto& s = test_signature();
  return {{"top", top()}, {"a", s.a}, {"b", s.b}};
}

Term Generator::nat(unsigned depth, std::uint32_t scope) {
  const auto& s = test_signature();
  auto leaf = [&]() -> Term {
    switch (pick(scope > 0 ? 4 : 3)) {
      case 0: return zero();
      case 1: return out(s.a, cnst("c"));
      case 2: return numeral(1 + pick(2));
      default: return var(pick(scope));
    }
  };
  if (depth <= 1) return leaf();
  unsigned d = depth - 1;
  unsigned e = d > 1 ? d - 1 : 1;
  bool has_a = entails(hyps_, s.a);
  switch (pick(has_a ? 12 : 11)) {
    case 0: return leaf();
    case 1: return suc(nat(d, scope));
    case 2: return app(out(s.a, cnst("plus")), {nat(e, scope), nat(e, scope)});
    case 3: return app(out(s.b, cnst("dbl")), nat(d, scope));
    case 4: return app(cnst("f"), nat(d, scope));
    case 5: return out(s.a, app(cnst("wrap"), nat(e, scope)));
    case 6: return app(out(s.a, cnst("plus")), {nat(d, scope), zero()});
    case 7: {
      Prop p = pick(2) ? s.a : s.b;
      return out(p, in(p, nat(e, scope)));
    }
    case 8: return natelim("_", utt::nat(), nat(d, scope), "k", "ih", nat(d, scope + 2), nat(d, scope));
    case 9: {
      Prop saved = hyps_;
      hyps_ = meet(hyps_, s.a);
      Term body = nat(e, scope);
      hyps_ = saved;
      return app(cnst("h"), prop_lam(s.a, body));
    }
    case 10: return app(cnst("h"), pick(2) ? cnst("k") : prop_lam(s.a, prop_app(cnst("k"), s.a)));
    default: return prop_app(cnst("k"), s.a);
  }
}

Term Generator::expand_here(const Term& n, std::uint32_t scope) {
  const auto& s = test_signature();
  switch (pick(6)) {
    case 0: return out(s.a, in(s.a, n));
    case 1: return out(s.b, in(s.b, n));
    case 2: return app(out(s.a, cnst("plus")), {n, zero()});
    case 3: return out(s.a, app(cnst("wrap"), n));
    case 4: return app(out(s.a, cnst("plus")), {zero(), n});
    case 5: return natelim("_", utt::nat(), n, "k", "ih", nat(2, scope + 2), zero());
    default: return app(out(s.b, cnst("dbl")), n);
  }
}

Term Generator::expand(const Term& t) {
  std::size_t target = pick(static_cast<unsigned>(count_nat(t)));
  return at_position(t, true, 0, target, [&](const Term& n, std::uint32_t scope) { return expand_here(n, scope); });
}

Term Generator::mutate(const Term& t) {
  std::size_t target = pick(static_cast<unsigned>(count_nat(t)));
  return at_position(t, true, 0, target, [&](const Term& n, std::uint32_t scope) {
    switch (pick(3)) {
      case 0: return suc(n);
      case 1: return app(cnst("f"), n);
      default: return nat(2, scope);
    }
  });
}

std::pair<Term, Term> Generator::pair(unsigned depth) {
  const auto& s = test_signature();
  Term t = nat(depth);
  switch (pick(5)) {
    case 0: {
      Term u = t;
      for (unsigned i = 0, n = 1 + pick(4); i < n; ++i) {
        auto next = oracle::rewrite_step(s.consts, hyps_, u);
        if (next.empty()) break;
        u = next[pick(static_cast<unsigned>(next.size()))];
      }
      return {t, u};
    }
    case 1: return {t, expand(pick(2) ? t : expand(t))};
    case 2: return {t, nat(depth)};
    case 3: return {t, mutate(t)};
    default: return {expand(t), expand(t)};
  }
}

bool well_typed(const Prop& hyps, const Term& t) {
  const auto& s = test_signature();
  try {
    check_term(s.checked.table, s.checked.globals, telescope(hyps), t, utt::nat());
    return true;
  } catch (const Error&) {
    return false;
  }
}

bool nbe_conv(const Prop& hyps, const Term& x, const Term& y) {
  const auto& s = test_signature();
  Nbe nbe(s.checked.globals);
  Context ctx = Context::open(nbe, telescope(hyps));
  Value ty = nbe.eval(ctx.env(), utt::nat());
  return nbe.conv(ctx.read(), ty, nbe.eval(ctx.env(), x), nbe.eval(ctx.env(), y));
}

}  // namespace utt::fragment
