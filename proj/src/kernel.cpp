#include "utt/kernel.hpp"

#include "utt/error.hpp"
#include "utt/print.hpp"

namespace utt {
namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};

}  // namespace

Context Context::bind(std::string name, Term type, Value type_value) const {
  Context c = *this;
  c.env_ = env_.push(vvar(read_.depth, type_value));
  c.types_.push_back(std::move(type_value));
  c.names_.push_back(name);
  c.tel_.push_back(TermVar{std::move(name), std::move(type)});
  c.read_ = read_.bind();
  return c;
}

Context Context::assume(const Prop& p) const {
  if (p.is_top()) return *this;
  Context c = *this;
  c.env_ = env_.assume(p);
  c.read_ = read_.assume(p);
  c.tel_.push_back(PropHyp{p});
  return c;
}

Context Context::open(const Nbe& nbe, const Telescope& tel) {
  Context c;
  for (const auto& e : tel) {
    if (const auto* v = std::get_if<TermVar>(&e)) c = c.bind(v->name, v->type, nbe.eval(c.env(), v->type));
    else c = c.assume(std::get<PropHyp>(e).prop);
  }
  return c;
}

void Kernel::require_declared(const Prop& p) const {
  if (!table_.declares(p)) throw Error(ErrorCode::UnknownProp, "proposition mentions an undeclared atom");
}

void Kernel::mismatch(const Context& ctx, const Value& expected, const Value& found) const {
  Error e(ErrorCode::TypeMismatch, "type mismatch");
  e.expected = print_term(table_, nbe_.readback_type(ctx.read(), expected), ctx.names());
  e.found = print_term(table_, nbe_.readback_type(ctx.read(), found), ctx.names());
  throw e;
}

void Kernel::check_type(const Context& ctx, const Term& a) const {
  std::visit(overloaded{
                 [&](const tm::Pi& n) {
                   check_type(ctx, n.dom);
                   check_type(ctx.bind(n.hint, n.dom, nbe_.eval(ctx.env(), n.dom)), n.cod);
                 },
                 [&](const tm::Nat&) {},
                 [&](const tm::Univ&) {},
                 [&](const tm::Id& n) {
                   check_type(ctx, n.type);
                   Value ty = nbe_.eval(ctx.env(), n.type);
                   check_term(ctx, n.lhs, ty);
                   check_term(ctx, n.rhs, ty);
                 },
                 [&](const tm::El& n) { check_term(ctx, n.code, vuniv()); },
                 [&](const tm::PropPi& n) {
                   require_declared(n.prop);
                   check_type(ctx.assume(n.prop), n.body);
                 },
                 [&](const tm::Ext& n) {
                   require_declared(n.prop);
                   check_type(ctx, n.type);
                   Context under = ctx.assume(n.prop);
                   check_term(under, n.boundary, nbe_.eval(under.env(), n.type));
                 },
                 [&](const auto&) { throw Error(ErrorCode::NotAType, "expected a type"); },
             },
             a->node);
}

void Kernel::check_term(const Context& ctx, const Term& m, const Value& a_in) const {
  Value a = nbe_.force(ctx.hyps(), a_in);
  if (const auto* l = as<tm::Lam>(m)) {
    const auto* p = as<val::Pi>(a);
    if (!p) throw Error(ErrorCode::TypeMismatch, "a λ-abstraction needs a function type");
    Term dom = nbe_.readback_type(ctx.read(), p->dom);
    Context inner = ctx.bind(l->hint, dom, p->dom);
    check_term(inner, l->body, nbe_.apply(p->cod, vvar(ctx.depth(), p->dom)));
    return;
  }
  if (const auto* l = as<tm::PropLam>(m)) {
    require_declared(l->prop);
    const auto* p = as<val::PropPi>(a);
    if (!p || !(p->body.prop == l->prop))
      throw Error(ErrorCode::TypeMismatch, "gl{p} needs a proposition product over the same p");
    check_term(ctx.assume(l->prop), l->body, nbe_.instantiate(p->body));
    return;
  }
  if (const auto* i = as<tm::In>(m)) {
    require_declared(i->prop);
    const auto* e = as<val::Ext>(a);
    if (!e || !(e->boundary.prop == i->prop))
      throw Error(ErrorCode::TypeMismatch, "in p needs an extension type over the same p");
    check_term(ctx, i->elem, e->type);
    Context under = ctx.assume(i->prop);
    Value elem = nbe_.eval(under.env(), i->elem);
    if (!nbe_.conv(under.read(), e->type, elem, nbe_.instantiate(e->boundary))) {
      Error err(ErrorCode::BoundaryMismatch, "element does not agree with the boundary");
      err.expected = print_term(table_, nbe_.readback(under.read(), e->type, nbe_.instantiate(e->boundary)),
                                ctx.names());
      err.found = print_term(table_, nbe_.readback(under.read(), e->type, elem), ctx.names());
      throw err;
    }
    return;
  }
  Value found = infer_term(ctx, m);
  if (!nbe_.conv_type(ctx.read(), a, found)) mismatch(ctx, a, found);
}

Value Kernel::infer_term(const Context& ctx, const Term& m) const {
  const Prop& hyps = ctx.hyps();
  auto eval = [&](const Term& t) { return nbe_.eval(ctx.env(), t); };
  return std::visit(
      overloaded{
          [&](const tm::Var& n) -> Value {
            if (n.index >= ctx.depth()) throw Error(ErrorCode::CannotInfer, "variable out of scope");
            return ctx.var_type(n.index);
          },
          [&](const tm::Const& n) -> Value {
            const auto* g = nbe_.globals().find(n.name);
            if (!g) throw Error(ErrorCode::UnboundConst, "unbound constant `" + n.name + "`");
            return g->type_value;
          },
          [&](const tm::App& n) -> Value {
            Value ft = nbe_.force(hyps, infer_term(ctx, n.fn));
            const auto* p = as<val::Pi>(ft);
            if (!p) throw Error(ErrorCode::TypeMismatch, "applying a non-function");
            check_term(ctx, n.arg, p->dom);
            return nbe_.apply(p->cod, eval(n.arg));
          },
          [&](const tm::Zero&) { return vnat(); },
          [&](const tm::Suc& n) {
            check_term(ctx, n.pred, vnat());
            return vnat();
          },
          [&](const tm::NatElim& n) {
            check_term(ctx, n.target, vnat());
            Context mx = ctx.bind(n.x, nat(), vnat());
            check_type(mx, n.motive);
            Closure motive{ctx.env(), n.motive};
            check_term(ctx, n.base, nbe_.apply(motive, vzero()));
            Context sk = ctx.bind(n.k, nat(), vnat());
            Value k = vvar(ctx.depth(), vnat());
            Context sih = sk.bind(n.ih, n.motive, nbe_.apply(motive, k));
            check_term(sih, n.step, nbe_.apply(motive, vsuc(k)));
            return nbe_.apply(motive, eval(n.target));
          },
          [&](const tm::Refl& n) {
            Value a = infer_term(ctx, n.elem);
            Value v = eval(n.elem);
            return make_value(val::Id{a, v, v});
          },
          [&](const tm::J& n) {
            Value tt = nbe_.force(hyps, infer_term(ctx, n.target));
            const auto* id = as<val::Id>(tt);
            if (!id) throw Error(ErrorCode::TypeMismatch, "J needs an identity proof");
            Term a = nbe_.readback_type(ctx.read(), id->type);
            Context cx = ctx.bind(n.x, a, id->type);
            Context cy = cx.bind(n.y, shift(a, 1), id->type);
            Term id_xy = utt::id(shift(a, 2), var(1), var(0));
            Context ce = cy.bind(n.e, id_xy, nbe_.eval(cy.env(), id_xy));
            check_type(ce, n.motive);
            Closure motive{ctx.env(), n.motive};
            Context rx = ctx.bind(n.rx, a, id->type);
            Value x = vvar(ctx.depth(), id->type);
            check_term(rx, n.refl_case, nbe_.apply(motive, {x, x, make_value(val::Refl{x})}));
            return nbe_.apply(motive, {id->lhs, id->rhs, eval(n.target)});
          },
          [&](const tm::PiCode& n) {
            check_term(ctx, n.dom, vuniv());
            Term dom = el(n.dom);
            check_term(ctx.bind(n.hint, dom, eval(dom)), n.cod, vuniv());
            return vuniv();
          },
          [&](const tm::NatCode&) { return vuniv(); },
          [&](const tm::IdCode& n) {
            check_term(ctx, n.type, vuniv());
            Value a = nbe_.do_el(hyps, eval(n.type));
            check_term(ctx, n.lhs, a);
            check_term(ctx, n.rhs, a);
            return vuniv();
          },
          [&](const tm::ExtCode& n) {
            require_declared(n.prop);
            check_term(ctx, n.type, vuniv());
            Context under = ctx.assume(n.prop);
            check_term(under, n.boundary, nbe_.do_el(under.hyps(), nbe_.eval(under.env(), n.type)));
            return vuniv();
          },
          [&](const tm::PropPiCode& n) {
            require_declared(n.prop);
            check_term(ctx.assume(n.prop), n.body, vuniv());
            return vuniv();
          },
          [&](const tm::PropLam& n) {
            require_declared(n.prop);
            Context under = ctx.assume(n.prop);
            Term body = nbe_.readback_type(under.read(), infer_term(under, n.body));
            return make_value(val::PropPi{PropClosure{ctx.env(), n.prop, body}});
          },
          [&](const tm::PropApp& n) {
            require_declared(n.prop);
            Value ft = nbe_.force(hyps, infer_term(ctx, n.fn));
            const auto* p = as<val::PropPi>(ft);
            if (!p || !(p->body.prop == n.prop))
              throw Error(ErrorCode::TypeMismatch, "M @ p needs a proposition product over the same p");
            if (!entails(hyps, n.prop))
              throw Error(ErrorCode::PropNotTrue, "proposition " + table_.render(n.prop) + " is not true here");
            return nbe_.instantiate(p->body);
          },
          [&](const tm::In& n) {
            require_declared(n.prop);
            Value a = infer_term(ctx, n.elem);
            return make_value(val::Ext{a, PropClosure{ctx.env(), n.prop, n.elem}});
          },
          [&](const tm::Out& n) {
            require_declared(n.prop);
            Value et = nbe_.force(hyps, infer_term(ctx, n.elem));
            const auto* e = as<val::Ext>(et);
            if (!e || !(e->boundary.prop == n.prop))
              throw Error(ErrorCode::TypeMismatch, "out p needs an extension type over the same p");
            return e->type;
          },
          [&](const auto&) -> Value { throw Error(ErrorCode::CannotInfer, "cannot infer a type for this term"); },
      },
      m->node);
}

CheckedSignature check_signature(const Signature& sig) {
  CheckedSignature out;
  for (const auto& d : sig.decls) {
    const std::string& name = declaration_name(d);
    try {
      std::visit(overloaded{
                     [&](const decl::PropLe& p) {
                       if (!out.table.declares(p.rhs))
                         throw Error(ErrorCode::UnknownProp, "right-hand side mentions an undeclared atom");
                       out.table.extend_le(p.name, p.rhs, is_hidden_prop_name(p.name));
                     },
                     [&](const decl::PropEq& p) {
                       if (!out.table.declares(p.rhs))
                         throw Error(ErrorCode::UnknownProp, "right-hand side mentions an undeclared atom");
                       out.table.extend_eq(p.name, p.rhs, is_hidden_prop_name(p.name));
                     },
                     [&](const decl::Const& c) {
                       if (out.globals.contains(c.name))
                         throw Error(ErrorCode::DuplicateConst, "constant `" + c.name + "` is already declared");
                       Kernel k(out.table, out.globals);
                       k.check_type(Context{}, c.type);
                       out.globals.add(c.name, c.type, k.nbe().eval(Env{}, c.type));
                     },
                 },
                 d);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::DuplicateProp || e.code() == ErrorCode::DuplicateConst) throw;
      throw Error(ErrorCode::IllTypedDecl, "declaration `" + name + "`: " + e.what());
    }
  }
  return out;
}

void check_type(const PropTable& table, const Globals& globals, const Telescope& tel, const Term& a) {
  Kernel k(table, globals);
  k.check_type(Context::open(k.nbe(), tel), a);
}

void check_term(const PropTable& table, const Globals& globals, const Telescope& tel, const Term& m,
                const Term& a) {
  Kernel k(table, globals);
  Context ctx = Context::open(k.nbe(), tel);
  k.check_type(ctx, a);
  k.check_term(ctx, m, k.nbe().eval(ctx.env(), a));
}

Term infer_term(const PropTable& table, const Globals& globals, const Telescope& tel, const Term& m) {
  Kernel k(table, globals);
  Context ctx = Context::open(k.nbe(), tel);
  return k.nbe().readback_type(ctx.read(), k.infer_term(ctx, m));
}

}  // namespace utt
