// utt: check, elaborate, list goals of, or normalize a `.utt` file.

#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "utt/driver.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Controlled unfolding for a small dependent type theory"};
  app.require_subcommand(1, 1);

  utt::Invocation inv;
  std::string color = "off";
  const std::map<std::string, utt::Command> commands{
      {"check", utt::Command::Check},
      {"elaborate", utt::Command::Elaborate},
      {"goals", utt::Command::Goals},
      {"normalize", utt::Command::Normalize},
  };
  const std::map<std::string, std::string> help{
      {"check", "elaborate the file; report errors or remaining goals"},
      {"elaborate", "print the elaborated core signature"},
      {"goals", "print every hole with its context and expected type"},
      {"normalize", "print the normal form of a definition under assumed unfoldings"},
  };

  for (const auto& [name, cmd] : commands) {
    auto* sub = app.add_subcommand(name, help.at(name));
    sub->add_option("file", inv.file, "source file (.utt)")->required();
    sub->add_option("--color", color, "colored diagnostics")->check(CLI::IsMember({"on", "off"}));
    sub->add_option("--max-goal-depth", inv.max_goal_depth, "truncate goal types below this depth (0: never)");
    sub->add_flag("--raw-goals", inv.raw_goals, "print goal types without the local unfoldings applied");
    if (cmd == utt::Command::Normalize) {
      sub->add_option("--def", inv.def, "definition to normalize")->required();
      sub->add_option("--assume", inv.assume, "assume the unfolding proposition of a definition, or a proposition by name (repeatable)");
    }
    sub->callback([&inv, cmd = cmd] { inv.command = cmd; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : utt::exit_code::usage;
  }
  inv.color = color == "on";
  return utt::run(inv, std::cout, std::cerr);
}
