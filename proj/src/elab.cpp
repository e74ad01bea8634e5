#include "utt/elab.hpp"

#include <algorithm>
#include <optional>

#include "utt/error.hpp"
#include "utt/print.hpp"

namespace utt {
namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};

/// Π Γ body: term variables become Pi, hypotheses become {p}.
Term close_over(const Telescope& tel, Term body) {
  for (auto it = tel.rbegin(); it != tel.rend(); ++it) {
    if (const auto* v = std::get_if<TermVar>(&*it)) body = pi(v->name, v->type, std::move(body));
    else body = prop_pi(std::get<PropHyp>(*it).prop, std::move(body));
  }
  return body;
}

/// c Γ: applied to every variable and hypothesis of the telescope, in order.
Term apply_telescope(Term head, const Telescope& tel) {
  auto depth = static_cast<std::uint32_t>(telescope_vars(tel));
  std::uint32_t level = 0;
  for (const auto& e : tel) {
    if (std::holds_alternative<TermVar>(e)) head = app(std::move(head), var(depth - 1 - level++));
    else head = prop_app(std::move(head), std::get<PropHyp>(e).prop);
  }
  return head;
}

/// Peels `n` parameters off (possibly nested) `fun`s.
std::optional<std::pair<std::vector<std::string>, ExprPtr>> split_lam(ExprPtr e, std::size_t n) {
  std::vector<std::string> params;
  while (params.size() < n) {
    const auto* l = as<ast::Lam>(e);
    if (!l) return std::nullopt;
    std::size_t take = std::min(n - params.size(), l->params.size());
    params.insert(params.end(), l->params.begin(), l->params.begin() + static_cast<std::ptrdiff_t>(take));
    if (take < l->params.size()) {
      std::vector<std::string> rest(l->params.begin() + static_cast<std::ptrdiff_t>(take), l->params.end());
      e = make_expr(ast::Lam{std::move(rest), l->body}, e->span);
    } else {
      e = l->body;
    }
  }
  return std::make_pair(std::move(params), e);
}

class Elaborator {
 public:
  explicit Elaborator(ElabState& st) : st_(st), nbe_(st.globals) {}

  void def(const SurfaceDecl& d) {
    if (st_.defs.contains(d.name))
      throw Error(ErrorCode::DuplicateDefinition, "`" + d.name + "` is already defined", d.name_span);
    Context empty;
    Term a = elab_type(empty, d.type);
    Value av = nbe_.eval(empty.env(), a);

    Prop u;
    for (std::size_t i = 0; i < d.unfolds.size(); ++i) {
      Span s = i < d.unfold_spans.size() ? d.unfold_spans[i] : d.name_span;
      u = meet(u, resolve_unfold(d.unfolds[i], s));
    }
    Term m = check(empty.assume(u), d.body, av);

    std::string pname = d.abstr ? "%abs." + std::to_string(st_.next_abs++) : "%u." + d.name;
    if (d.abbrv) {
      st_.table.extend_eq(pname, u, d.abstr);
      st_.sig.decls.push_back(decl::PropEq{pname, u});
    } else {
      st_.table.extend_le(pname, u, d.abstr);
      st_.sig.decls.push_back(decl::PropLe{pname, u});
    }
    Prop p = st_.table.lookup(pname);
    Term ctype = ext(a, p, m);
    declare(d.name, ctype);
    st_.defs.emplace(d.name, DefInfo{pname, p, d.abstr, d.abbrv, a, av, d.span});
  }

 private:
  // -------------------------------------------------------------------------
  // Signature plumbing

  void declare(const std::string& name, const Term& type) {
    st_.sig.decls.push_back(decl::Const{name, type});
    st_.globals.add(name, type, nbe_.eval(Env{}, type));
  }

  const Prop& resolve_unfold(const std::string& name, Span span) {
    auto it = st_.defs.find(name);
    if (it == st_.defs.end())
      throw Error(ErrorCode::UnknownUnfoldTarget, "cannot unfold `" + display_name(name) + "`: no such definition",
                  span);
    if (it->second.hidden) {
      Error e(ErrorCode::AbstractUnfoldTarget, "cannot unfold `" + display_name(name) + "`: it is abstract", span);
      e.note_span = it->second.site;
      e.note = "`" + display_name(name) + "` is declared abstract here";
      throw e;
    }
    return it->second.prop;
  }

  // -------------------------------------------------------------------------
  // Diagnostics

  std::string show_type(const Context& ctx, const Value& t) {
    return print_term(st_.table, nbe_.readback_type(ctx.read(), t), ctx.names());
  }

  std::string show(const Context& ctx, const Value& type, const Value& v) {
    return print_term(st_.table, nbe_.readback(ctx.read(), type, v), ctx.names());
  }

  [[noreturn]] void conv_mismatch(const std::string& what, std::string expected, std::string found) {
    Error e(ErrorCode::ConvMismatch, what);
    e.expected = std::move(expected);
    e.found = std::move(found);
    throw e;
  }

  [[noreturn]] void type_mismatch(const Context& ctx, const std::string& what, const Value& found) {
    Error e(ErrorCode::TypeMismatch, what);
    e.found = show_type(ctx, found);
    throw e;
  }

  template <class F>
  auto at_span(const ExprPtr& e, F&& f) -> decltype(f()) {
    try {
      return f();
    } catch (Error& err) {
      if (!err.span()) err.set_span(e->span);
      throw;
    }
  }

  // -------------------------------------------------------------------------
  // Types

  Term elab_type(const Context& ctx, const ExprPtr& e) {
    return at_span(e, [&]() -> Term {
      if (as<ast::Univ>(e)) return univ();
      if (as<ast::NatType>(e)) return nat();
      if (const auto* p = as<ast::Pi>(e)) {
        Term dom = elab_type(ctx, p->dom);
        return binders(ctx, *p, dom, dom, false, [&](const Context& inner) { return elab_type(inner, p->cod); });
      }
      if (const auto* i = as<ast::Id>(e)) {
        Term a = elab_type(ctx, i->type);
        Value av = nbe_.eval(ctx.env(), a);
        Term l = check(ctx, i->lhs, av);
        Term r = check(ctx, i->rhs, av);
        return id(a, l, r);
      }
      if (const auto* u = as<ast::Unfold>(e)) return el(unfold(ctx, *u, e->span, vuniv()));
      return el(check(ctx, e, vuniv()));
    });
  }

  // `(x y : A) -> B` binds one variable per name, `_` for an arrow. `dom` is
  // the domain as written (a type, or a code) and `dom_type` the type it denotes.
  template <class Cod>
  Term binders(const Context& ctx, const ast::Pi& p, const Term& dom, const Term& dom_type, bool code, Cod&& cod) {
    std::vector<std::string> names = p.names.empty() ? std::vector<std::string>{"_"} : p.names;
    Context inner = ctx;
    for (std::size_t i = 0; i < names.size(); ++i) {
      Term d = shift(dom_type, static_cast<std::int32_t>(i));
      inner = inner.bind(names[i], d, nbe_.eval(inner.env(), d));
    }
    Term body = cod(inner);
    for (std::size_t i = names.size(); i-- > 0;) {
      Term d = shift(dom, static_cast<std::int32_t>(i));
      body = code ? pi_code(names[i], d, body) : pi(names[i], d, body);
    }
    return body;
  }

  // -------------------------------------------------------------------------
  // Checking

  Term check(const Context& ctx, const ExprPtr& e, const Value& expected) {
    return at_span(e, [&]() -> Term {
      Value a = nbe_.force(ctx.hyps(), expected);
      if (as<ast::Lam>(e)) {
        auto [params, body] = *split_lam(e, 1);
        const auto* p = as<val::Pi>(a);
        if (!p) type_mismatch(ctx, "a function was given where the expected type is not a function type", a);
        Term dom = nbe_.readback_type(ctx.read(), p->dom);
        Context inner = ctx.bind(params[0], dom, p->dom);
        return lam(params[0], check(inner, body, nbe_.apply(p->cod, vvar(ctx.depth(), p->dom))));
      }
      if (const auto* u = as<ast::Unfold>(e)) return unfold(ctx, *u, e->span, a);
      if (as<ast::Hole>(e)) return hole(ctx, e->span, a);
      if (as<ast::Refl>(e)) {
        const auto* id = as<val::Id>(a);
        if (!id) type_mismatch(ctx, "`refl` needs an identity type", a);
        if (!nbe_.conv(ctx.read(), id->type, id->lhs, id->rhs))
          conv_mismatch("the two sides of the identity type are not definitionally equal",
                        show(ctx, id->type, id->lhs), show(ctx, id->type, id->rhs));
        return refl(nbe_.readback(ctx.read(), id->type, id->lhs));
      }
      auto [t, found] = synth(ctx, e);
      if (!nbe_.conv_type(ctx.read(), a, found))
        conv_mismatch("type mismatch", show_type(ctx, a), show_type(ctx, found));
      return t;
    });
  }

  Term hole(const Context& ctx, Span span, const Value& a) {
    std::uint32_t n = st_.next_hole++;
    Term nf = nbe_.readback_type(ctx.read(), a);
    Term raw = nbe_.readback_type(ReadCtx{ctx.depth(), Prop{}}, a);
    std::string name = "%hole." + std::to_string(n);
    declare(name, close_over(ctx.telescope(), nf));
    st_.goals.push_back(Goal{span, n, ctx.telescope(), nf, raw});
    return apply_telescope(cnst(name), ctx.telescope());
  }

  Term unfold(const Context& ctx, const ast::Unfold& u, Span span, const Value& a) {
    Prop p;
    for (const auto& n : u.names) p = meet(p, resolve_unfold(n, span));
    Context inner = ctx.assume(p);
    Term m = check(inner, u.body, a);
    Term a_nf = nbe_.readback_type(ctx.read(), a);
    Term m_nf = nbe_.readback(inner.read(), a, nbe_.eval(inner.env(), m));
    std::string name = "%unfold." + std::to_string(st_.next_unfold++);
    declare(name, close_over(ctx.telescope(), ext(a_nf, p, m_nf)));
    return out(p, apply_telescope(cnst(name), ctx.telescope()));
  }

  // -------------------------------------------------------------------------
  // Synthesis

  std::pair<Term, Value> synth(const Context& ctx, const ExprPtr& e) {
    return at_span(e, [&]() -> std::pair<Term, Value> {
      return std::visit(
          overloaded{
              [&](const ast::Name& n) -> std::pair<Term, Value> {
                const auto& names = ctx.names();
                for (std::size_t i = names.size(); i-- > 0;) {
                  if (names[i] == n.name) {
                    auto index = static_cast<std::uint32_t>(names.size() - 1 - i);
                    return {var(index), ctx.var_type(index)};
                  }
                }
                auto it = st_.defs.find(n.name);
                if (it == st_.defs.end())
                  throw Error(ErrorCode::UnboundName, "unbound name `" + display_name(n.name) + "`");
                return {out(it->second.prop, cnst(n.name)), it->second.type_value};
              },
              [&](const ast::App& n) -> std::pair<Term, Value> {
                auto [f, ft] = synth(ctx, n.fn);
                Value fv = nbe_.force(ctx.hyps(), ft);
                const auto* p = as<val::Pi>(fv);
                if (!p) type_mismatch(ctx, "applying something that is not a function", fv);
                Term arg = check(ctx, n.arg, p->dom);
                return {app(f, arg), nbe_.apply(p->cod, nbe_.eval(ctx.env(), arg))};
              },
              [&](const ast::NatLit& n) -> std::pair<Term, Value> {
                return {numeral(static_cast<unsigned>(n.value)), vnat()};
              },
              [&](const ast::Suc& n) -> std::pair<Term, Value> { return {suc(check(ctx, n.pred, vnat())), vnat()}; },
              [&](const ast::NatType&) -> std::pair<Term, Value> { return {nat_code(), vuniv()}; },
              [&](const ast::Univ&) -> std::pair<Term, Value> {
                throw Error(ErrorCode::TypeMismatch, "`U` has no code; it is not a small type");
              },
              [&](const ast::Pi& n) -> std::pair<Term, Value> {
                Term dom = check(ctx, n.dom, vuniv());
                Term code = binders(ctx, n, dom, el(dom), true,
                                    [&](const Context& inner) { return check(inner, n.cod, vuniv()); });
                return {code, vuniv()};
              },
              [&](const ast::Id& n) -> std::pair<Term, Value> {
                Term a = check(ctx, n.type, vuniv());
                Value av = nbe_.do_el(ctx.hyps(), nbe_.eval(ctx.env(), a));
                Term l = check(ctx, n.lhs, av);
                Term r = check(ctx, n.rhs, av);
                return {id_code(a, l, r), vuniv()};
              },
              [&](const ast::NatElim& n) -> std::pair<Term, Value> { return natelim_expr(ctx, n); },
              [&](const ast::J& n) -> std::pair<Term, Value> { return j_expr(ctx, n); },
              [&](const ast::Lam&) -> std::pair<Term, Value> {
                throw Error(ErrorCode::CannotInfer, "cannot infer the type of a function; annotate it");
              },
              [&](const ast::Refl&) -> std::pair<Term, Value> {
                throw Error(ErrorCode::CannotInfer, "cannot infer the type of `refl` here");
              },
              [&](const ast::Unfold&) -> std::pair<Term, Value> {
                throw Error(ErrorCode::CannotInfer, "`unfold` needs a known expected type");
              },
              [&](const ast::Hole&) -> std::pair<Term, Value> {
                throw Error(ErrorCode::CannotInfer, "a hole needs a known expected type");
              },
          },
          e->node);
    });
  }

  std::pair<Term, Value> natelim_expr(const Context& ctx, const ast::NatElim& n) {
    Term target = check(ctx, n.target, vnat());
    auto motive = split_lam(n.motive, 1);
    if (!motive)
      throw Error(ErrorCode::BadEliminator, "the motive of `natelim` must be written `fun x => T`", n.motive->span);
    const std::string& x = motive->first[0];
    Term mt = elab_type(ctx.bind(x, nat(), vnat()), motive->second);
    Closure mc{ctx.env(), mt};
    Term base = check(ctx, n.base, nbe_.apply(mc, vzero()));
    auto step = split_lam(n.step, 2);
    if (!step)
      throw Error(ErrorCode::BadEliminator, "the step of `natelim` must be written `fun k ih => e`", n.step->span);
    const std::string& k = step->first[0];
    const std::string& ih = step->first[1];
    Value kv = vvar(ctx.depth(), vnat());
    Context sk = ctx.bind(k, nat(), vnat()).bind(ih, mt, nbe_.apply(mc, kv));
    Term s = check(sk, step->second, nbe_.apply(mc, vsuc(kv)));
    return {natelim(x, mt, base, k, ih, s, target), nbe_.apply(mc, nbe_.eval(ctx.env(), target))};
  }

  std::pair<Term, Value> j_expr(const Context& ctx, const ast::J& n) {
    auto [target, tt] = synth(ctx, n.target);
    Value tv = nbe_.force(ctx.hyps(), tt);
    const auto* idv = as<val::Id>(tv);
    if (!idv) type_mismatch(ctx, "`J` eliminates an identity proof", tv);
    auto motive = split_lam(n.motive, 3);
    if (!motive)
      throw Error(ErrorCode::BadEliminator, "the motive of `J` must be written `fun x y e => T`", n.motive->span);
    auto rc = split_lam(n.refl_case, 1);
    if (!rc) throw Error(ErrorCode::BadEliminator, "the case of `J` must be written `fun x => e`", n.refl_case->span);
    const auto& ps = motive->first;
    Term a = nbe_.readback_type(ctx.read(), idv->type);
    Context cx = ctx.bind(ps[0], a, idv->type);
    Context cy = cx.bind(ps[1], shift(a, 1), idv->type);
    Term id_xy = id(shift(a, 2), var(1), var(0));
    Context ce = cy.bind(ps[2], id_xy, nbe_.eval(cy.env(), id_xy));
    Term mt = elab_type(ce, motive->second);
    Closure mc{ctx.env(), mt};
    Value x = vvar(ctx.depth(), idv->type);
    Term d = check(ctx.bind(rc->first[0], a, idv->type), rc->second,
                   nbe_.apply(mc, {x, x, make_value(val::Refl{x})}));
    Term t = j_elim(ps[0], ps[1], ps[2], mt, rc->first[0], d, target);
    return {t, nbe_.apply(mc, {idv->lhs, idv->rhs, nbe_.eval(ctx.env(), target)})};
  }

  ElabState& st_;
  Nbe nbe_;
};

}  // namespace

void elab_def(ElabState& state, const SurfaceDecl& d) { Elaborator(state).def(d); }

void elab_program(ElabState& state, const SourceFile& file) {
  for (const auto& d : file.decls) elab_def(state, d);
}

const std::vector<Goal>& report_goals(const ElabState& state) { return state.goals; }

const Prop& assumable_prop(const ElabState& state, const std::string& def_name) {
  auto it = state.defs.find(def_name);
  if (it == state.defs.end()) {
    // Proposition names such as %u.plus are accepted too.
    const auto* e = state.table.find(def_name);
    if (!e) throw Error(ErrorCode::UnknownProp, "no unfolding proposition for `" + def_name + "`");
    if (e->hidden) throw Error(ErrorCode::AbstractProp, "`" + def_name + "` is hidden and cannot be assumed");
    return e->value;
  }
  if (it->second.hidden)
    throw Error(ErrorCode::AbstractProp, "`" + def_name + "` is abstract; its proposition cannot be assumed");
  return it->second.prop;
}

}  // namespace utt
