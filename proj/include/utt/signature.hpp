#ifndef UTT_SIGNATURE_HPP
#define UTT_SIGNATURE_HPP

#include <string>
#include <variant>
#include <vector>

#include "utt/prop.hpp"
#include "utt/term.hpp"

namespace utt {

/// Telescope entries: term variables and assumed-true propositions.
struct TermVar {
  std::string name;
  Term type;
};

struct PropHyp {
  Prop prop;
};

using TelescopeEntry = std::variant<TermVar, PropHyp>;
using Telescope = std::vector<TelescopeEntry>;

/// Meet of all proposition hypotheses.
Prop telescope_hyps(const Telescope& tel);
std::size_t telescope_vars(const Telescope& tel);

namespace decl {

struct Const {
  std::string name;
  Term type;
};

/// prop name ≤ rhs
struct PropLe {
  std::string name;
  Prop rhs;
};

/// prop name = rhs
struct PropEq {
  std::string name;
  Prop rhs;
};

}  // namespace decl

using Declaration = std::variant<decl::Const, decl::PropLe, decl::PropEq>;

const std::string& declaration_name(const Declaration& d);

/// Propositions of `abstract` definitions are named `%abs.N` and hidden.
bool is_hidden_prop_name(const std::string& name);

struct Signature {
  std::vector<Declaration> decls;
};

}  // namespace utt

#endif  // UTT_SIGNATURE_HPP
