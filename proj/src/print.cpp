#include "utt/print.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace utt {
namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};

enum Prec { kTop = 0, kApp = 1, kAtom = 2 };

class TermPrinter {
 public:
  TermPrinter(const PropTable& table, std::vector<std::string> names, PrintOptions opts)
      : table_(table), names_(std::move(names)), opts_(opts) {}

  std::string run(const Term& t) {
    go(t, kTop, 0);
    return out_.str();
  }

 private:
  std::string fresh(const std::string& hint) {
    std::string base = hint.empty() || hint == "_" ? "x" : hint;
    auto taken = [&](const std::string& n) { return std::find(names_.begin(), names_.end(), n) != names_.end(); };
    if (!taken(base)) return base;
    for (int i = 1;; ++i) {
      std::string cand = base + std::to_string(i);
      if (!taken(cand)) return cand;
    }
  }

  // Binder name for a body; `_` stays `_` when unused.
  std::string binder(const std::string& hint, const Term& body, std::uint32_t index) {
    if (!mentions_var(body, index)) return hint == "_" || hint.empty() ? "_" : fresh(hint);
    return fresh(hint);
  }

  void prop(const Prop& p) {
    auto names = table_.cover(p);
    if (names.size() > 1) out_ << '(' << table_.render(p) << ')';
    else out_ << table_.render(p);
  }

  void open(Prec have, Prec need) {
    if (have < need) out_ << '(';
  }
  void close(Prec have, Prec need) {
    if (have < need) out_ << ')';
  }

  void with_names(const std::vector<std::string>& ns, const std::function<void()>& f) {
    for (const auto& n : ns) names_.push_back(n);
    f();
    names_.resize(names_.size() - ns.size());
  }

  void pi_like(const std::string& hint, const Term& dom, const Term& cod, Prec prec, std::size_t d) {
    open(kTop, prec);
    if (!mentions_var(cod, 0)) {
      go(dom, kApp, d + 1);
      out_ << " → ";
      with_names({"_"}, [&] { go(cod, kTop, d + 1); });
    } else {
      std::string x = fresh(hint);
      out_ << '(' << x << " : ";
      go(dom, kTop, d + 1);
      out_ << ") → ";
      with_names({x}, [&] { go(cod, kTop, d + 1); });
    }
    close(kTop, prec);
  }

  void id_like(const Term& a, const Term& l, const Term& r, Prec prec, std::size_t d) {
    open(kApp, prec);
    out_ << "Id ";
    go(a, kAtom, d + 1);
    out_ << ' ';
    go(l, kAtom, d + 1);
    out_ << ' ';
    go(r, kAtom, d + 1);
    close(kApp, prec);
  }

  void ext_like(const Term& a, const Prop& p, const Term& b, std::size_t d) {
    out_ << '{';
    go(a, kTop, d + 1);
    out_ << " | " << table_.render(p) << " ↪ ";
    go(b, kTop, d + 1);
    out_ << '}';
  }

  void go(const Term& t, Prec prec, std::size_t d) {
    if (opts_.max_depth && d > opts_.max_depth) {
      out_ << "…";
      return;
    }
    std::visit(
        overloaded{
            [&](const tm::Var& n) {
              if (n.index < names_.size()) out_ << names_[names_.size() - 1 - n.index];
              else out_ << '#' << n.index;
            },
            [&](const tm::Const& n) { out_ << display_name(n.name); },
            [&](const tm::Pi& n) { pi_like(n.hint, n.dom, n.cod, prec, d); },
            [&](const tm::PiCode& n) { pi_like(n.hint, n.dom, n.cod, prec, d); },
            [&](const tm::Lam&) {
              open(kTop, prec);
              std::vector<std::string> bound;
              Term body = t;
              out_ << "λ";
              while (const auto* l = as<tm::Lam>(body)) {
                std::string x;
                with_names(bound, [&] { x = binder(l->hint, l->body, 0); });
                out_ << ' ' << x;
                bound.push_back(x);
                body = l->body;
              }
              out_ << ". ";
              with_names(bound, [&] { go(body, kTop, d + 1); });
              close(kTop, prec);
            },
            [&](const tm::App& n) {
              open(kApp, prec);
              go(n.fn, kApp, d + 1);
              out_ << ' ';
              go(n.arg, kAtom, d + 1);
              close(kApp, prec);
            },
            [&](const tm::Nat&) { out_ << "Nat"; },
            [&](const tm::NatCode&) { out_ << "Nat"; },
            [&](const tm::Zero&) { out_ << "ze"; },
            [&](const tm::Suc& n) {
              open(kApp, prec);
              out_ << "suc ";
              go(n.pred, kAtom, d + 1);
              close(kApp, prec);
            },
            [&](const tm::NatElim& n) {
              open(kApp, prec);
              out_ << "natelim ";
              go(n.target, kAtom, d + 1);
              std::string x = binder(n.x, n.motive, 0);
              out_ << " (" << x << ". ";
              with_names({x}, [&] { go(n.motive, kTop, d + 1); });
              out_ << ") ";
              go(n.base, kAtom, d + 1);
              std::string k = fresh(n.k);
              std::string ih;
              with_names({k}, [&] { ih = fresh(n.ih); });
              out_ << " (" << k << ' ' << ih << ". ";
              with_names({k, ih}, [&] { go(n.step, kTop, d + 1); });
              out_ << ')';
              close(kApp, prec);
            },
            [&](const tm::Id& n) { id_like(n.type, n.lhs, n.rhs, prec, d); },
            [&](const tm::IdCode& n) { id_like(n.type, n.lhs, n.rhs, prec, d); },
            [&](const tm::Refl& n) {
              open(kApp, prec);
              out_ << "refl ";
              go(n.elem, kAtom, d + 1);
              close(kApp, prec);
            },
            [&](const tm::J& n) {
              open(kApp, prec);
              std::string x = fresh(n.x), y, e;
              with_names({x}, [&] { y = fresh(n.y); });
              with_names({x, y}, [&] { e = fresh(n.e); });
              out_ << "J (" << x << ' ' << y << ' ' << e << ". ";
              with_names({x, y, e}, [&] { go(n.motive, kTop, d + 1); });
              std::string rx = fresh(n.rx);
              out_ << ") (" << rx << ". ";
              with_names({rx}, [&] { go(n.refl_case, kTop, d + 1); });
              out_ << ") ";
              go(n.target, kAtom, d + 1);
              close(kApp, prec);
            },
            [&](const tm::Univ&) { out_ << 'U'; },
            [&](const tm::El& n) {
              open(kApp, prec);
              out_ << "El ";
              go(n.code, kAtom, d + 1);
              close(kApp, prec);
            },
            [&](const tm::ExtCode& n) { ext_like(n.type, n.prop, n.boundary, d); },
            [&](const tm::Ext& n) { ext_like(n.type, n.prop, n.boundary, d); },
            [&](const tm::PropPiCode& n) {
              open(kTop, prec);
              out_ << '{' << table_.render(n.prop) << "} ";
              go(n.body, kTop, d + 1);
              close(kTop, prec);
            },
            [&](const tm::PropPi& n) {
              open(kTop, prec);
              out_ << '{' << table_.render(n.prop) << "} ";
              go(n.body, kTop, d + 1);
              close(kTop, prec);
            },
            [&](const tm::PropLam& n) {
              open(kTop, prec);
              out_ << "gl{" << table_.render(n.prop) << "} ";
              go(n.body, kTop, d + 1);
              close(kTop, prec);
            },
            [&](const tm::PropApp& n) {
              open(kTop, prec);
              go(n.fn, kApp, d + 1);
              out_ << " @ ";
              prop(n.prop);
              close(kTop, prec);
            },
            [&](const tm::In& n) {
              open(kApp, prec);
              out_ << "in ";
              prop(n.prop);
              out_ << ' ';
              go(n.elem, kAtom, d + 1);
              close(kApp, prec);
            },
            [&](const tm::Out& n) {
              open(kApp, prec);
              out_ << "out ";
              prop(n.prop);
              out_ << ' ';
              go(n.elem, kAtom, d + 1);
              close(kApp, prec);
            },
        },
        t->node);
  }

  const PropTable& table_;
  std::vector<std::string> names_;
  PrintOptions opts_;
  std::ostringstream out_;
};

}  // namespace

bool is_operator_name(const std::string& name) {
  if (name.empty() || name[0] == '%') return false;
  return std::none_of(name.begin(), name.end(), [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

std::string display_name(const std::string& name) { return is_operator_name(name) ? "(" + name + ")" : name; }

std::string print_prop(const PropTable& table, const Prop& p) { return table.render(p); }

std::string print_term(const PropTable& table, const Term& t, const std::vector<std::string>& names,
                       PrintOptions opts) {
  return TermPrinter(table, names, opts).run(t);
}

std::string print_telescope(const PropTable& table, const Telescope& tel, PrintOptions opts) {
  if (tel.empty()) return "·";
  std::vector<std::string> names;
  std::string out;
  for (const auto& e : tel) {
    if (!out.empty()) out += ", ";
    if (const auto* v = std::get_if<TermVar>(&e)) {
      out += v->name + " : " + print_term(table, v->type, names, opts);
      names.push_back(v->name);
    } else {
      out += "{" + table.render(std::get<PropHyp>(e).prop) + "}";
    }
  }
  return out;
}

std::string print_declaration(const PropTable& table, const Declaration& d) {
  return std::visit(overloaded{
                        [&](const decl::Const& c) {
                          return "const " + display_name(c.name) + " : " + print_term(table, c.type);
                        },
                        [&](const decl::PropLe& p) { return "prop " + p.name + " ≤ " + table.render(p.rhs); },
                        [&](const decl::PropEq& p) { return "prop " + p.name + " = " + table.render(p.rhs); },
                    },
                    d);
}

std::string print_signature(const Signature& sig) {
  PropTable table;
  std::string out;
  for (const auto& d : sig.decls) {
    out += print_declaration(table, d);
    out += '\n';
    if (const auto* p = std::get_if<decl::PropLe>(&d)) table.extend_le(p->name, p->rhs, is_hidden_prop_name(p->name));
    else if (const auto* q = std::get_if<decl::PropEq>(&d)) table.extend_eq(q->name, q->rhs, is_hidden_prop_name(q->name));
  }
  return out;
}

}  // namespace utt
