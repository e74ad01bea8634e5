#ifndef UTT_DRIVER_HPP
#define UTT_DRIVER_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "utt/elab.hpp"
#include "utt/error.hpp"

namespace utt {

enum class Command { Check, Elaborate, Goals, Normalize };

struct Invocation {
  Command command = Command::Check;
  std::string file;
  std::optional<std::string> def;
  std::vector<std::string> assume;
  bool color = false;
  std::size_t max_goal_depth = 0;  // 0: unlimited
  bool raw_goals = false;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int error = 1;
inline constexpr int usage = 2;
}  // namespace exit_code

/// `error[code]: message`, a source excerpt, and the payload of the error
/// (expected/found forms, expected tokens, notes).
std::string format_diagnostic(const Error& err, std::string_view path, std::string_view source, bool color = false);

/// `path:line:col ⊢ telescope ⊢ ?N : type`
std::string format_goal(const ElabState& state, const Goal& goal, std::string_view path, std::string_view source,
                        bool raw = false, std::size_t max_depth = 0);

/// Runs one command; returns the process exit code.
int run(const Invocation& inv, std::ostream& out, std::ostream& err);

/// Same, on an in-memory source instead of a file.
int run_source(const Invocation& inv, std::string_view source, std::ostream& out, std::ostream& err);

}  // namespace utt

#endif  // UTT_DRIVER_HPP
