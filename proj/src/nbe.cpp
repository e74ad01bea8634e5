#include "utt/nbe.hpp"

#include <stdexcept>

#include "utt/error.hpp"

namespace utt {
namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};

[[noreturn]] void invariant(const char* what) { throw std::logic_error(std::string("nbe: ") + what); }

Value neutral(Value type, Neutral ne) { return make_value(val::Neu{std::move(type), std::move(ne)}); }

Neutral extend(const Neutral& ne, Frame f) {
  Neutral r = ne;
  r.spine.push_back(std::move(f));
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Environments and globals

Env Env::push(Value v) const {
  Env e = *this;
  e.head_ = std::make_shared<const Cell>(Cell{std::move(v), head_});
  ++e.size_;
  return e;
}

Env Env::assume(const Prop& p) const {
  Env e = *this;
  e.hyps_ = meet(hyps_, p);
  return e;
}

const Value& Env::at(std::uint32_t index) const {
  const Cell* c = head_.get();
  for (std::uint32_t i = 0; i < index && c; ++i) c = c->next.get();
  if (!c) invariant("variable index out of range");
  return c->value;
}

Value vnat() {
  static const Value v = make_value(val::Nat{});
  return v;
}
Value vzero() {
  static const Value v = make_value(val::Zero{});
  return v;
}
Value vuniv() {
  static const Value v = make_value(val::Univ{});
  return v;
}
Value vsuc(Value pred) { return make_value(val::Suc{std::move(pred)}); }
Value vvar(std::uint32_t level, Value type) {
  return neutral(type, Neutral{VarHead{level}, type, {}, Frontier::never()});
}

void Globals::add(std::string name, Term type, Value type_value) {
  order_.push_back(name);
  entries_.insert_or_assign(std::move(name), Entry{std::move(type), std::move(type_value)});
}

const Globals::Entry* Globals::find(const std::string& name) const {
  auto it = entries_.find(name);
  return it == entries_.end() ? nullptr : &it->second;
}

// ---------------------------------------------------------------------------
// Evaluation

Value Nbe::eval(const Env& env, const Term& t) const {
  const Prop& hyps = env.hyps();
  return std::visit(
      overloaded{
          [&](const tm::Var& n) { return env.at(n.index); },
          [&](const tm::Const& n) -> Value {
            const auto* g = globals_.find(n.name);
            if (!g) throw Error(ErrorCode::UnboundConst, "unbound constant `" + n.name + "`");
            return neutral(g->type_value, Neutral{ConstHead{n.name}, g->type_value, {}, Frontier::never()});
          },
          [&](const tm::Pi& n) { return make_value(val::Pi{n.hint, eval(env, n.dom), Closure{env, n.cod}}); },
          [&](const tm::Lam& n) { return make_value(val::Lam{n.hint, Closure{env, n.body}}); },
          [&](const tm::App& n) { return do_app(hyps, eval(env, n.fn), eval(env, n.arg)); },
          [&](const tm::Nat&) { return vnat(); },
          [&](const tm::Zero&) { return vzero(); },
          [&](const tm::Suc& n) { return vsuc(eval(env, n.pred)); },
          [&](const tm::NatElim& n) {
            frame::NatElim f{n.x, Closure{env, n.motive}, eval(env, n.base), n.k, n.ih, Closure{env, n.step}};
            return do_natelim(hyps, f, eval(env, n.target));
          },
          [&](const tm::Id& n) {
            return make_value(val::Id{eval(env, n.type), eval(env, n.lhs), eval(env, n.rhs)});
          },
          [&](const tm::Refl& n) { return make_value(val::Refl{eval(env, n.elem)}); },
          [&](const tm::J& n) -> Value {
            // The type component is recovered from the target's type if stuck.
            frame::J f{nullptr, n.x, n.y, n.e, Closure{env, n.motive}, n.rx, Closure{env, n.refl_case}};
            return do_j(hyps, f, eval(env, n.target));
          },
          [&](const tm::Univ&) { return vuniv(); },
          [&](const tm::El& n) { return do_el(hyps, eval(env, n.code)); },
          [&](const tm::PiCode& n) {
            return make_value(val::PiCode{n.hint, eval(env, n.dom), Closure{env, n.cod}});
          },
          [&](const tm::NatCode&) { return make_value(val::NatCode{}); },
          [&](const tm::IdCode& n) {
            return make_value(val::IdCode{eval(env, n.type), eval(env, n.lhs), eval(env, n.rhs)});
          },
          [&](const tm::ExtCode& n) {
            return make_value(val::ExtCode{eval(env, n.type), PropClosure{env, n.prop, n.boundary}});
          },
          [&](const tm::PropPiCode& n) { return make_value(val::PropPiCode{PropClosure{env, n.prop, n.body}}); },
          [&](const tm::PropPi& n) { return make_value(val::PropPi{PropClosure{env, n.prop, n.body}}); },
          [&](const tm::PropLam& n) { return make_value(val::PropLam{PropClosure{env, n.prop, n.body}}); },
          [&](const tm::PropApp& n) { return do_prop_app(hyps, eval(env, n.fn), n.prop); },
          [&](const tm::Ext& n) {
            return make_value(val::Ext{eval(env, n.type), PropClosure{env, n.prop, n.boundary}});
          },
          [&](const tm::In& n) { return make_value(val::In{n.prop, force(hyps, eval(env, n.elem))}); },
          [&](const tm::Out& n) { return do_out(hyps, n.prop, eval(env, n.elem)); },
      },
      t->node);
}

Value Nbe::apply(const Closure& c, Value arg) const { return eval(c.env.push(std::move(arg)), c.body); }

Value Nbe::apply(const Closure& c, std::initializer_list<Value> args) const {
  Env env = c.env;
  for (const auto& a : args) env = env.push(a);
  return eval(env, c.body);
}

Value Nbe::instantiate(const PropClosure& c) const { return eval(c.env.assume(c.prop), c.body); }

// ---------------------------------------------------------------------------
// Stability

Value Nbe::force(const Prop& hyps, const Value& v) const {
  if (const auto* n = as<val::Neu>(v)) {
    if (auto unstuck = unstick(hyps, n->ne)) return *unstuck;
  } else if (const auto* e = as<val::El>(v)) {
    if (const auto* code = as<val::Neu>(e->code); code && frontier_true(hyps, code->ne.frontier))
      return do_el(hyps, e->code);
  }
  return v;
}

std::optional<Value> Nbe::unstick(const Prop& hyps, const Neutral& ne) const {
  if (!frontier_true(hyps, ne.frontier)) return std::nullopt;
  Value v = neutral(ne.head_type, Neutral{ne.head, ne.head_type, {}, Frontier::never()});
  for (const auto& f : ne.spine) v = apply_frame(hyps, v, f);
  return force(hyps, v);
}

Value Nbe::apply_frame(const Prop& hyps, const Value& v, const Frame& f) const {
  return std::visit(overloaded{
                        [&](const frame::App& a) { return do_app(hyps, v, a.arg); },
                        [&](const frame::NatElim& e) { return do_natelim(hyps, e, v); },
                        [&](const frame::J& e) { return do_j(hyps, e, v); },
                        [&](const frame::PropApp& a) { return do_prop_app(hyps, v, a.prop); },
                        [&](const frame::Out& o) { return do_out(hyps, o.prop, v); },
                    },
                    f);
}

// ---------------------------------------------------------------------------
// Eliminators

Value Nbe::do_app(const Prop& hyps, const Value& fn_in, const Value& arg) const {
  Value fn = force(hyps, fn_in);
  if (const auto* l = as<val::Lam>(fn)) return apply(l->body, arg);
  if (const auto* n = as<val::Neu>(fn)) {
    Value ty = force(hyps, n->type);
    const auto* p = as<val::Pi>(ty);
    if (!p) invariant("application of a neutral whose type is not a Pi");
    return neutral(apply(p->cod, arg), extend(n->ne, frame::App{arg, p->dom}));
  }
  invariant("application of a non-function");
}

Value Nbe::do_natelim(const Prop& hyps, const frame::NatElim& elim, const Value& target_in) const {
  Value target = force(hyps, target_in);
  if (as<val::Zero>(target)) return elim.base;
  if (const auto* s = as<val::Suc>(target)) return apply(elim.step, {s->pred, do_natelim(hyps, elim, s->pred)});
  if (const auto* n = as<val::Neu>(target)) return neutral(apply(elim.motive, target), extend(n->ne, elim));
  invariant("natelim on a non-natural");
}

Value Nbe::do_j(const Prop& hyps, const frame::J& elim, const Value& target_in) const {
  Value target = force(hyps, target_in);
  if (const auto* r = as<val::Refl>(target)) return apply(elim.refl_case, r->elem);
  if (const auto* n = as<val::Neu>(target)) {
    Value ty = force(hyps, n->type);
    const auto* id = as<val::Id>(ty);
    if (!id) invariant("J on a neutral whose type is not an identity type");
    frame::J f = elim;
    f.type = id->type;
    return neutral(apply(elim.motive, {id->lhs, id->rhs, target}), extend(n->ne, std::move(f)));
  }
  invariant("J on a non-identity");
}

Value Nbe::do_prop_app(const Prop& hyps, const Value& fn_in, const Prop& p) const {
  Value fn = force(hyps, fn_in);
  if (const auto* l = as<val::PropLam>(fn)) return instantiate(l->body);
  if (const auto* n = as<val::Neu>(fn)) {
    Value ty = force(hyps, n->type);
    const auto* pp = as<val::PropPi>(ty);
    if (!pp) invariant("prop application of a neutral whose type is not a prop product");
    return neutral(instantiate(pp->body), extend(n->ne, frame::PropApp{p}));
  }
  invariant("prop application of a non-function");
}

Value Nbe::do_out(const Prop& hyps, const Prop& p, const Value& v_in) const {
  Value v = force(hyps, v_in);
  if (const auto* i = as<val::In>(v)) return i->elem;
  if (const auto* n = as<val::Neu>(v)) {
    Value ty = force(hyps, n->type);
    const auto* e = as<val::Ext>(ty);
    if (!e) invariant("out of a neutral whose type is not an extension type");
    if (entails(hyps, p)) return force(hyps, instantiate(e->boundary));
    Neutral ne = extend(n->ne, frame::Out{p});
    ne.frontier = frontier_or(std::move(ne.frontier), p);
    return neutral(e->type, std::move(ne));
  }
  invariant("out of a non-extension element");
}

Value Nbe::do_el(const Prop& hyps, const Value& code_in) const {
  Value code = force(hyps, code_in);
  return std::visit(
      overloaded{
          [&](const val::NatCode&) { return vnat(); },
          [&](const val::PiCode& c) {
            return make_value(val::Pi{c.hint, do_el(hyps, c.dom), Closure{c.cod.env, el(c.cod.body)}});
          },
          [&](const val::IdCode& c) { return make_value(val::Id{do_el(hyps, c.type), c.lhs, c.rhs}); },
          [&](const val::ExtCode& c) { return make_value(val::Ext{do_el(hyps, c.type), c.boundary}); },
          [&](const val::PropPiCode& c) {
            return make_value(val::PropPi{PropClosure{c.body.env, c.body.prop, el(c.body.body)}});
          },
          [&](const val::Neu&) { return make_value(val::El{code}); },
          [&](const auto&) -> Value { invariant("El of a non-code"); },
      },
      code->node);
}

// ---------------------------------------------------------------------------
// Readback

Term Nbe::readback(const ReadCtx& ctx, const Value& type_in, const Value& v_in) const {
  Value type = force(ctx.hyps, type_in);
  Value v = force(ctx.hyps, v_in);

  if (const auto* p = as<val::Pi>(type)) {
    Value x = vvar(ctx.depth, p->dom);
    return lam(p->hint, readback(ctx.bind(), apply(p->cod, x), do_app(ctx.hyps, v, x)));
  }
  if (const auto* pp = as<val::PropPi>(type)) {
    const Prop& prop = pp->body.prop;
    ReadCtx inner = ctx.assume(prop);
    return prop_lam(prop, readback(inner, instantiate(pp->body), do_prop_app(inner.hyps, v, prop)));
  }
  if (const auto* e = as<val::Ext>(type)) {
    const Prop& prop = e->boundary.prop;
    return in(prop, readback(ctx, e->type, do_out(ctx.hyps, prop, v)));
  }
  if (as<val::Nat>(type)) {
    if (as<val::Zero>(v)) return zero();
    if (const auto* s = as<val::Suc>(v)) return suc(readback(ctx, type, s->pred));
  }
  if (const auto* id = as<val::Id>(type)) {
    if (const auto* r = as<val::Refl>(v)) return refl(readback(ctx, id->type, r->elem));
  }
  if (as<val::Univ>(type)) {
    if (as<val::NatCode>(v)) return nat_code();
    if (const auto* c = as<val::PiCode>(v)) {
      Value x = vvar(ctx.depth, do_el(ctx.hyps, c->dom));
      return pi_code(c->hint, readback(ctx, type, c->dom), readback(ctx.bind(), type, apply(c->cod, x)));
    }
    if (const auto* c = as<val::IdCode>(v)) {
      Value a = do_el(ctx.hyps, c->type);
      return id_code(readback(ctx, type, c->type), readback(ctx, a, c->lhs), readback(ctx, a, c->rhs));
    }
    if (const auto* c = as<val::ExtCode>(v)) {
      const Prop& prop = c->boundary.prop;
      ReadCtx inner = ctx.assume(prop);
      return ext_code(readback(ctx, type, c->type), prop,
                      readback(inner, do_el(inner.hyps, c->type), instantiate(c->boundary)));
    }
    if (const auto* c = as<val::PropPiCode>(v)) {
      const Prop& prop = c->body.prop;
      return prop_pi_code(prop, readback(ctx.assume(prop), type, instantiate(c->body)));
    }
  }
  if (const auto* n = as<val::Neu>(v)) return readback_neutral(ctx, n->ne);
  invariant("readback: value does not inhabit type");
}

Term Nbe::readback_neutral(const ReadCtx& ctx, const Neutral& ne) const {
  if (frontier_true(ctx.hyps, ne.frontier))
    throw Error(ErrorCode::UnstableLeak, "unstable neutral survived to readback");

  Term t = std::visit(overloaded{
                          [&](const VarHead& h) { return var(ctx.depth - h.level - 1); },
                          [&](const ConstHead& h) { return cnst(h.name); },
                      },
                      ne.head);
  for (const auto& f : ne.spine) {
    t = std::visit(
        overloaded{
            [&](const frame::App& a) { return app(t, readback(ctx, a.arg_type, a.arg)); },
            [&](const frame::NatElim& e) {
              Value x = vvar(ctx.depth, vnat());
              Term motive = readback_type(ctx.bind(), apply(e.motive, x));
              Term base = readback(ctx, apply(e.motive, vzero()), e.base);
              Value k = vvar(ctx.depth, vnat());
              Value ih = vvar(ctx.depth + 1, apply(e.motive, k));
              Term step = readback(ctx.bind().bind(), apply(e.motive, vsuc(k)), apply(e.step, {k, ih}));
              return natelim(e.x, motive, base, e.k, e.ih, step, t);
            },
            [&](const frame::J& e) {
              Value x = vvar(ctx.depth, e.type);
              Value y = vvar(ctx.depth + 1, e.type);
              Value p = vvar(ctx.depth + 2, make_value(val::Id{e.type, x, y}));
              Term motive = readback_type(ctx.bind().bind().bind(), apply(e.motive, {x, y, p}));
              Value rx = vvar(ctx.depth, e.type);
              Value rty = apply(e.motive, {rx, rx, make_value(val::Refl{rx})});
              Term refl_case = readback(ctx.bind(), rty, apply(e.refl_case, rx));
              return j_elim(e.x, e.y, e.e, motive, e.rx, refl_case, t);
            },
            [&](const frame::PropApp& a) { return prop_app(t, a.prop); },
            [&](const frame::Out& o) { return out(o.prop, t); },
        },
        f);
  }
  return t;
}

Term Nbe::readback_type(const ReadCtx& ctx, const Value& type_in) const {
  Value type = force(ctx.hyps, type_in);
  return std::visit(
      overloaded{
          [&](const val::Pi& p) {
            Value x = vvar(ctx.depth, p.dom);
            return pi(p.hint, readback_type(ctx, p.dom), readback_type(ctx.bind(), apply(p.cod, x)));
          },
          [&](const val::Nat&) { return nat(); },
          [&](const val::Univ&) { return univ(); },
          [&](const val::Id& i) {
            return id(readback_type(ctx, i.type), readback(ctx, i.type, i.lhs), readback(ctx, i.type, i.rhs));
          },
          [&](const val::El& e) {
            const auto* n = as<val::Neu>(e.code);
            if (!n) invariant("El of a non-neutral code survived decoding");
            return el(readback_neutral(ctx, n->ne));
          },
          [&](const val::PropPi& p) {
            const Prop& prop = p.body.prop;
            return prop_pi(prop, readback_type(ctx.assume(prop), instantiate(p.body)));
          },
          [&](const val::Ext& e) {
            const Prop& prop = e.boundary.prop;
            ReadCtx inner = ctx.assume(prop);
            return ext(readback_type(ctx, e.type), prop, readback(inner, e.type, instantiate(e.boundary)));
          },
          [&](const auto&) -> Term { invariant("readback_type: not a type"); },
      },
      type->node);
}

bool Nbe::conv(const ReadCtx& ctx, const Value& type, const Value& a, const Value& b) const {
  return alpha_equal(readback(ctx, type, a), readback(ctx, type, b));
}

bool Nbe::conv_type(const ReadCtx& ctx, const Value& a, const Value& b) const {
  return alpha_equal(readback_type(ctx, a), readback_type(ctx, b));
}

TelescopeEnv open_telescope(const Nbe& nbe, const Telescope& tel) {
  TelescopeEnv te;
  for (const auto& entry : tel) {
    if (const auto* v = std::get_if<TermVar>(&entry)) {
      Value ty = nbe.eval(te.env, v->type);
      te.env = te.env.push(vvar(te.read.depth, ty));
      te.types.push_back(ty);
      te.read = te.read.bind();
    } else {
      const auto& h = std::get<PropHyp>(entry);
      te.env = te.env.assume(h.prop);
      te.read = te.read.assume(h.prop);
    }
  }
  return te;
}

NormalForm Nbe::normalize(const Telescope& tel, const Term& type, const Term& m) const {
  auto te = open_telescope(*this, tel);
  return NormalForm{readback(te.read, eval(te.env, type), eval(te.env, m))};
}

NormalForm Nbe::normalize_type(const Telescope& tel, const Term& type) const {
  auto te = open_telescope(*this, tel);
  return NormalForm{readback_type(te.read, eval(te.env, type))};
}

}  // namespace utt
