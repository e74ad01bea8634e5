#ifndef UTT_ELAB_HPP
#define UTT_ELAB_HPP

// Bidirectional elaboration of surface programs into core signatures.
//
// A definition `def θ unfolds κ.. : A := e` becomes
//
//   prop %u.θ ≤ Υκ ∧ ..        (`=` for abbreviations, `%abs.N` if abstract)
//   const θ : {A | %u.θ ↪ M}
//
// where M is e elaborated under the hypothesis Υκ ∧ ... References to θ
// elaborate to `out %u.θ θ`. Holes and `unfold .. in` expressions are
// hoisted to constants `%hole.N` and `%unfold.N` closed over the local
// telescope.

#include <string>
#include <unordered_map>
#include <vector>

#include "utt/kernel.hpp"
#include "utt/surface.hpp"

namespace utt {

struct Goal {
  Span span;
  std::uint32_t number = 0;
  Telescope telescope;
  /// Normal form relative to the telescope's hypotheses.
  Term type;
  /// The same type read back without the hypotheses.
  Term raw_type;
};

struct DefInfo {
  std::string prop_name;
  Prop prop;
  bool hidden = false;
  bool abbrv = false;
  Term type;
  Value type_value;
  Span site;
};

struct ElabState {
  Signature sig;
  PropTable table;
  Globals globals;
  std::uint32_t next_unfold = 0;
  std::uint32_t next_abs = 0;
  std::uint32_t next_hole = 0;
  std::vector<Goal> goals;
  std::unordered_map<std::string, DefInfo> defs;

  ElabState() = default;
  ElabState(const ElabState&) = delete;
  ElabState& operator=(const ElabState&) = delete;
};

/// Elaborates each declaration in order. The first failure aborts with an
/// Error carrying the offending span.
void elab_program(ElabState& state, const SourceFile& file);
void elab_def(ElabState& state, const SurfaceDecl& d);

const std::vector<Goal>& report_goals(const ElabState& state);

/// The proposition that `--assume NAME` refers to: a definition's name or a
/// proposition name. Throws UnknownProp, or AbstractProp for abstract ones.
const Prop& assumable_prop(const ElabState& state, const std::string& def_name);

}  // namespace utt

#endif  // UTT_ELAB_HPP
