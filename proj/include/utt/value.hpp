#ifndef UTT_VALUE_HPP
#define UTT_VALUE_HPP

// Semantic domain for normalization by evaluation.
//
// Neutrals carry a frontier of instability: the disjunction of the
// propositions of every `out` in their spine. Once the frontier is true in a
// context, the neutral is no longer stuck and is replayed (see Nbe::force).
// Closures are defunctionalized: an environment plus a term.

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "utt/prop.hpp"
#include "utt/term.hpp"

namespace utt {

struct ValueNode;
using Value = std::shared_ptr<const ValueNode>;

class Env {
 public:
  Env() = default;
  explicit Env(Prop hyps) : hyps_(std::move(hyps)) {}

  Env push(Value v) const;
  Env assume(const Prop& p) const;

  const Value& at(std::uint32_t index) const;
  std::size_t size() const noexcept { return size_; }
  const Prop& hyps() const noexcept { return hyps_; }

 private:
  struct Cell {
    Value value;
    std::shared_ptr<const Cell> next;
  };
  std::shared_ptr<const Cell> head_;
  std::size_t size_ = 0;
  Prop hyps_;
};

struct Closure {
  Env env;
  Term body;
};

/// A term under the additional hypothesis `prop`.
struct PropClosure {
  Env env;
  Prop prop;
  Term body;
};

struct VarHead {
  std::uint32_t level;
};

struct ConstHead {
  std::string name;
};

using Head = std::variant<VarHead, ConstHead>;

namespace frame {

struct App {
  Value arg;
  Value arg_type;
};

struct NatElim {
  std::string x;
  Closure motive;
  Value base;
  std::string k, ih;
  Closure step;
};

struct J {
  Value type;
  std::string x, y, e;
  Closure motive;
  std::string rx;
  Closure refl_case;
};

struct PropApp {
  Prop prop;
};

struct Out {
  Prop prop;
};

}  // namespace frame

using Frame = std::variant<frame::App, frame::NatElim, frame::J, frame::PropApp, frame::Out>;

struct Neutral {
  Head head;
  Value head_type;
  std::vector<Frame> spine;
  Frontier frontier;
};

namespace val {

struct Pi { std::string hint; Value dom; Closure cod; };
struct Lam { std::string hint; Closure body; };
struct Nat {};
struct Zero {};
struct Suc { Value pred; };
struct Id { Value type; Value lhs; Value rhs; };
struct Refl { Value elem; };
struct Univ {};
struct PiCode { std::string hint; Value dom; Closure cod; };
struct NatCode {};
struct IdCode { Value type; Value lhs; Value rhs; };
struct ExtCode { Value type; PropClosure boundary; };
struct PropPiCode { PropClosure body; };
struct PropPi { PropClosure body; };
struct PropLam { PropClosure body; };
struct Ext { Value type; PropClosure boundary; };
struct In { Prop prop; Value elem; };
/// El of a neutral code.
struct El { Value code; };
struct Neu { Value type; Neutral ne; };

}  // namespace val

using ValueVariant = std::variant<val::Pi, val::Lam, val::Nat, val::Zero, val::Suc, val::Id, val::Refl, val::Univ,
                                  val::PiCode, val::NatCode, val::IdCode, val::ExtCode, val::PropPiCode,
                                  val::PropPi, val::PropLam, val::Ext, val::In, val::El, val::Neu>;

struct ValueNode {
  ValueVariant node;
};

template <class T>
const T* as(const Value& v) {
  return std::get_if<T>(&v->node);
}

template <class T>
Value make_value(T node) {
  return std::make_shared<const ValueNode>(ValueNode{ValueVariant{std::move(node)}});
}

Value vnat();
Value vzero();
Value vuniv();
Value vsuc(Value pred);
Value vvar(std::uint32_t level, Value type);

}  // namespace utt

#endif  // UTT_VALUE_HPP
