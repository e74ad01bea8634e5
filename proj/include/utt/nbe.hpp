#ifndef UTT_NBE_HPP
#define UTT_NBE_HPP

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "utt/signature.hpp"
#include "utt/value.hpp"

namespace utt {

/// Evaluated signature constants, append-only within a session.
class Globals {
 public:
  struct Entry {
    Term type;
    Value type_value;
  };

  void add(std::string name, Term type, Value type_value);
  const Entry* find(const std::string& name) const;
  bool contains(const std::string& name) const { return find(name) != nullptr; }
  std::span<const std::string> names() const noexcept { return order_; }

 private:
  std::unordered_map<std::string, Entry> entries_;
  std::vector<std::string> order_;
};

/// Readback position: number of term variables in scope and the meet of the
/// proposition hypotheses.
struct ReadCtx {
  std::uint32_t depth = 0;
  Prop hyps;

  ReadCtx bind() const { return {depth + 1, hyps}; }
  ReadCtx assume(const Prop& p) const { return {depth, meet(hyps, p)}; }
};

struct NormalForm {
  Term term;

  bool operator==(const NormalForm& other) const { return alpha_equal(term, other.term); }
};

class Nbe {
 public:
  explicit Nbe(const Globals& globals) : globals_(globals) {}

  Value eval(const Env& env, const Term& t) const;
  Value apply(const Closure& c, Value arg) const;
  Value apply(const Closure& c, std::initializer_list<Value> args) const;
  Value instantiate(const PropClosure& c) const;

  /// Replays a neutral whose frontier is true under `hyps`; otherwise
  /// returns `v` unchanged.
  Value force(const Prop& hyps, const Value& v) const;
  /// The neutral's boundary: defined exactly when its frontier is true.
  std::optional<Value> unstick(const Prop& hyps, const Neutral& ne) const;

  Value do_app(const Prop& hyps, const Value& fn, const Value& arg) const;
  Value do_natelim(const Prop& hyps, const frame::NatElim& elim, const Value& target) const;
  Value do_j(const Prop& hyps, const frame::J& elim, const Value& target) const;
  Value do_prop_app(const Prop& hyps, const Value& fn, const Prop& p) const;
  Value do_out(const Prop& hyps, const Prop& p, const Value& v) const;
  Value do_el(const Prop& hyps, const Value& code) const;

  Term readback(const ReadCtx& ctx, const Value& type, const Value& v) const;
  Term readback_type(const ReadCtx& ctx, const Value& type) const;
  Term readback_neutral(const ReadCtx& ctx, const Neutral& ne) const;

  bool conv(const ReadCtx& ctx, const Value& type, const Value& a, const Value& b) const;
  bool conv_type(const ReadCtx& ctx, const Value& a, const Value& b) const;

  /// eval then readback, relative to a telescope of fresh variables.
  NormalForm normalize(const Telescope& tel, const Term& type, const Term& m) const;
  NormalForm normalize_type(const Telescope& tel, const Term& type) const;

  const Globals& globals() const noexcept { return globals_; }

 private:
  Value apply_frame(const Prop& hyps, const Value& v, const Frame& f) const;

  const Globals& globals_;
};

/// Environment of fresh variables for a telescope, and its readback position.
struct TelescopeEnv {
  Env env;
  ReadCtx read;
  std::vector<Value> types;  // one per term variable
};

TelescopeEnv open_telescope(const Nbe& nbe, const Telescope& tel);

}  // namespace utt

#endif  // UTT_NBE_HPP
