#ifndef UTT_KERNEL_HPP
#define UTT_KERNEL_HPP

// Trusted checker for TT_P and the signature judgment.

#include <string>
#include <vector>

#include "utt/nbe.hpp"
#include "utt/signature.hpp"

namespace utt {

/// A telescope together with its semantic environment. Shared by the kernel
/// and the elaborator.
class Context {
 public:
  Context() = default;

  /// Extends with a term variable; `type` is its type in this context.
  Context bind(std::string name, Term type, Value type_value) const;
  /// Extends with a proposition hypothesis. ⊤ adds no telescope entry.
  Context assume(const Prop& p) const;

  const Telescope& telescope() const noexcept { return tel_; }
  const Env& env() const noexcept { return env_; }
  const ReadCtx& read() const noexcept { return read_; }
  const Prop& hyps() const noexcept { return read_.hyps; }
  std::uint32_t depth() const noexcept { return read_.depth; }

  /// Type of de Bruijn index `index`.
  const Value& var_type(std::uint32_t index) const { return types_[depth() - 1 - index]; }
  /// Names of term variables, outermost first.
  const std::vector<std::string>& names() const noexcept { return names_; }

  /// Rebuilds a context from a telescope, evaluating each type in turn.
  static Context open(const Nbe& nbe, const Telescope& tel);

 private:
  Telescope tel_;
  Env env_;
  ReadCtx read_;
  std::vector<Value> types_;
  std::vector<std::string> names_;
};

class Kernel {
 public:
  Kernel(const PropTable& table, const Globals& globals) : table_(table), nbe_(globals) {}

  void check_type(const Context& ctx, const Term& a) const;
  void check_term(const Context& ctx, const Term& m, const Value& a) const;
  Value infer_term(const Context& ctx, const Term& m) const;

  const Nbe& nbe() const noexcept { return nbe_; }

 private:
  void require_declared(const Prop& p) const;
  [[noreturn]] void mismatch(const Context& ctx, const Value& expected, const Value& found) const;

  const PropTable& table_;
  Nbe nbe_;
};

struct CheckedSignature {
  PropTable table;
  Globals globals;
};

/// Folds the declarations left to right, re-deriving the proposition table
/// and checking every constant's type. Any failure is IllTypedDecl,
/// DuplicateProp or DuplicateConst.
CheckedSignature check_signature(const Signature& sig);

// Telescope-level entry points.
void check_type(const PropTable& table, const Globals& globals, const Telescope& tel, const Term& a);
void check_term(const PropTable& table, const Globals& globals, const Telescope& tel, const Term& m,
                const Term& a);
/// Returns the inferred type, read back in the telescope.
Term infer_term(const PropTable& table, const Globals& globals, const Telescope& tel, const Term& m);

}  // namespace utt

#endif  // UTT_KERNEL_HPP
