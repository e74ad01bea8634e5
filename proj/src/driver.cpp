#include "utt/driver.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "utt/kernel.hpp"
#include "utt/print.hpp"
#include "utt/surface.hpp"

namespace utt {
namespace {

std::size_t code_points(std::string_view s) {
  std::size_t n = 0;
  for (unsigned char c : s) n += (c & 0xC0) != 0x80;
  return n;
}

std::string location(std::string_view path, const SourceMap& map, std::uint32_t offset) {
  auto pos = map.position(offset);
  std::ostringstream out;
  out << path << ':' << pos.line << ':' << pos.column;
  return out.str();
}

void excerpt(std::ostringstream& out, std::string_view path, std::string_view source, Span span) {
  SourceMap map(source);
  auto begin = map.position(span.begin);
  auto end = map.position(std::max(span.end, span.begin));
  std::string_view line = map.line_text(begin.line);
  std::string no = std::to_string(begin.line);
  std::string pad(no.size(), ' ');
  out << pad << "--> " << location(path, map, span.begin) << '\n';
  out << pad << " |\n";
  out << no << " | " << line << '\n';
  std::size_t width = end.line == begin.line && end.column > begin.column ? end.column - begin.column
                                                                          : code_points(line) + 1 - begin.column;
  out << pad << " | " << std::string(begin.column - 1, ' ') << std::string(std::max<std::size_t>(width, 1), '^')
      << '\n';
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read `" + path + "`");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string format_diagnostic(const Error& err, std::string_view path, std::string_view source, bool color) {
  std::ostringstream out;
  const char* red = color ? "\x1b[1;31m" : "";
  const char* bold = color ? "\x1b[1m" : "";
  const char* reset = color ? "\x1b[0m" : "";
  out << red << "error[" << code_name(err.code()) << "]" << reset << bold << ": " << err.what() << reset << '\n';
  if (err.span()) excerpt(out, path, source, *err.span());
  if (!err.expected.empty()) out << "  expected: " << err.expected << '\n';
  if (!err.found.empty()) out << "     found: " << err.found << '\n';
  if (!err.expected_tokens.empty()) out << "  expected one of: " << err.expected_tokens << '\n';
  if (!err.note.empty()) {
    out << "  note: " << err.note << '\n';
    if (err.note_span) excerpt(out, path, source, *err.note_span);
  }
  return out.str();
}

std::string format_goal(const ElabState& state, const Goal& goal, std::string_view path, std::string_view source,
                        bool raw, std::size_t max_depth) {
  SourceMap map(source);
  PrintOptions opts{max_depth};
  std::vector<std::string> names;
  for (const auto& e : goal.telescope)
    if (const auto* v = std::get_if<TermVar>(&e)) names.push_back(v->name);
  std::ostringstream out;
  out << location(path, map, goal.span.begin) << " ⊢ " << print_telescope(state.table, goal.telescope, opts)
      << " ⊢ ?" << goal.number << " : "
      << print_term(state.table, raw ? goal.raw_type : goal.type, names, opts);
  return out.str();
}

int run_source(const Invocation& inv, std::string_view source, std::ostream& out, std::ostream& err) {
  ElabState state;
  try {
    SourceFile file = parse_program(source, inv.file);
    elab_program(state, file);
    // Every accepted program must re-check in the kernel.
    check_signature(state.sig);
  } catch (const Error& e) {
    err << format_diagnostic(e, inv.file, source, inv.color);
    return exit_code::error;
  }

  auto print_goals = [&] {
    for (const auto& g : report_goals(state))
      out << format_goal(state, g, inv.file, source, inv.raw_goals, inv.max_goal_depth) << '\n';
  };

  switch (inv.command) {
    case Command::Check: {
      auto n = report_goals(state).size();
      if (n == 0) {
        out << inv.file << ": ok\n";
      } else {
        out << inv.file << ": " << n << (n == 1 ? " goal" : " goals") << '\n';
        print_goals();
      }
      return exit_code::ok;
    }
    case Command::Elaborate: out << print_signature(state.sig); return exit_code::ok;
    case Command::Goals: print_goals(); return exit_code::ok;
    case Command::Normalize: {
      auto it = state.defs.find(*inv.def);
      if (it == state.defs.end()) {
        err << format_diagnostic(Error(ErrorCode::Usage, "no definition named `" + *inv.def + "`"), inv.file, source,
                                 inv.color);
        return exit_code::usage;
      }
      Prop hyps;
      try {
        for (const auto& a : inv.assume) hyps = meet(hyps, assumable_prop(state, a));
      } catch (const Error& e) {
        err << format_diagnostic(e, inv.file, source, inv.color);
        return exit_code::usage;
      }
      Telescope tel;
      if (!hyps.is_top()) tel.push_back(PropHyp{hyps});
      Nbe nbe(state.globals);
      NormalForm nf = nbe.normalize(tel, it->second.type, utt::out(it->second.prop, cnst(*inv.def)));
      out << print_term(state.table, nf.term) << '\n';
      return exit_code::ok;
    }
  }
  return exit_code::ok;
}

int run(const Invocation& inv, std::ostream& out, std::ostream& err) {
  if (inv.command == Command::Normalize && !inv.def) {
    err << "error[usage]: `normalize` needs --def NAME\n";
    return exit_code::usage;
  }
  if (inv.command != Command::Normalize && (inv.def || !inv.assume.empty())) {
    err << "error[usage]: --def and --assume only apply to `normalize`\n";
    return exit_code::usage;
  }
  std::string source;
  try {
    source = read_file(inv.file);
  } catch (const Error& e) {
    err << "error[" << code_name(e.code()) << "]: " << e.what() << '\n';
    return exit_code::usage;
  }
  return run_source(inv, source, out, err);
}

}  // namespace utt
