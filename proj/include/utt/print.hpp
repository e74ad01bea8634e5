#ifndef UTT_PRINT_HPP
#define UTT_PRINT_HPP

// Deterministic printer for core terms and signatures.

#include <string>
#include <vector>

#include "utt/prop.hpp"
#include "utt/signature.hpp"
#include "utt/term.hpp"

namespace utt {

struct PrintOptions {
  /// Subterms nested deeper than this print as `…`; 0 means unlimited.
  std::size_t max_depth = 0;
};

/// `+` prints as `(+)`; ordinary identifiers are unchanged.
std::string display_name(const std::string& name);
bool is_operator_name(const std::string& name);

std::string print_prop(const PropTable& table, const Prop& p);

/// `names` are the term variables in scope, outermost first.
std::string print_term(const PropTable& table, const Term& t, const std::vector<std::string>& names = {},
                       PrintOptions opts = {});

/// `x : A, {p}, y : B`, or `·` when empty.
std::string print_telescope(const PropTable& table, const Telescope& tel, PrintOptions opts = {});

std::string print_declaration(const PropTable& table, const Declaration& d);

/// One declaration per line. Propositions are named with the table as it
/// stood at each declaration.
std::string print_signature(const Signature& sig);

}  // namespace utt

#endif  // UTT_PRINT_HPP
