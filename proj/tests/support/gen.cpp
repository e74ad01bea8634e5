#include "gen.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace utt::gen {

RandomTable random_table(Rng& rng, unsigned max_steps) {
  RandomTable out;
  unsigned steps = 1 + pick(rng, max_steps);
  for (unsigned i = 0; i < steps; ++i) {
    Prop rhs;
    if (!out.props.empty())
      for (unsigned k = pick(rng, 4); k > 0; --k) rhs = meet(rhs, out.props[pick(rng, out.props.size())]);
    std::string name = "p" + std::to_string(i);
    bool eq = pick(rng, 3) == 0;
    out.props.push_back(eq ? out.table.extend_eq(name, rhs) : out.table.extend_le(name, rhs));
    out.rhs.push_back(rhs);
    out.eq.push_back(eq);
  }
  return out;
}

DagProgram random_dag(Rng& rng, unsigned max_nodes) {
  DagProgram d;
  unsigned n = 2 + pick(rng, max_nodes - 1);
  d.deps.resize(n);
  d.abbrv.assign(n, false);
  d.abstr.assign(n, false);
  std::vector<bool> depended(n, false);
  for (unsigned i = 1; i < n; ++i)
    for (unsigned j = 0; j < i; ++j)
      if (pick(rng, 3) == 0) {
        d.deps[i].push_back(j);
        depended[j] = true;
      }
  std::ostringstream src;
  for (unsigned i = 0; i < n; ++i) {
    unsigned kind = pick(rng, 4);
    d.abbrv[i] = kind == 0;
    d.abstr[i] = kind == 1 && !depended[i];
    if (d.abbrv[i]) src << "abbreviation ";
    if (d.abstr[i]) src << "abstract ";
    src << "def " << d.name(i);
    if (!d.deps[i].empty()) {
      src << " unfolds";
      for (auto j : d.deps[i]) src << ' ' << d.name(j);
    }
    src << " : Nat := ";
    if (d.deps[i].empty()) src << pick(rng, 3);
    else src << "suc " << d.name(d.deps[i][pick(rng, d.deps[i].size())]);
    src << '\n';
  }
  d.source = src.str();
  return d;
}

namespace {

const char* const kNames[] = {"x", "y", "f", "n", "P", "+", "⊕", "+0L", "plus-comm", "two'", "a1"};

std::string random_name(Rng& rng) { return kNames[pick(rng, std::size(kNames))]; }

std::vector<std::string> random_names(Rng& rng, unsigned max) {
  std::vector<std::string> out;
  for (unsigned k = 1 + pick(rng, max); k > 0; --k) out.push_back(random_name(rng));
  return out;
}

}  // namespace

ExprPtr random_expr(Rng& rng, unsigned depth) {
  if (depth <= 1) {
    switch (pick(rng, 7)) {
      case 0: return make_expr(ast::Name{random_name(rng)});
      case 1: return make_expr(ast::NatLit{pick(rng, 100)});
      case 2: return make_expr(ast::NatType{});
      case 3: return make_expr(ast::Refl{});
      case 4: return make_expr(ast::Univ{});
      case 5: return make_expr(ast::Hole{});
      default: return make_expr(ast::Hole{pick(rng, 2) ? std::optional<std::string>("g") : std::nullopt});
    }
  }
  unsigned d = depth - 1;
  auto sub = [&] { return random_expr(rng, 1 + pick(rng, d)); };
  switch (pick(rng, 10)) {
    case 0: return make_expr(ast::App{sub(), sub()});
    case 1: return make_expr(ast::Lam{random_names(rng, 3), sub()});
    case 2: return make_expr(ast::Pi{{}, sub(), sub()});
    case 3: return make_expr(ast::Pi{random_names(rng, 2), sub(), sub()});
    case 4: return make_expr(ast::Suc{sub()});
    case 5: return make_expr(ast::NatElim{sub(), sub(), sub(), sub()});
    case 6: return make_expr(ast::Id{sub(), sub(), sub()});
    case 7: return make_expr(ast::J{sub(), sub(), sub()});
    case 8: return make_expr(ast::Unfold{random_names(rng, 2), sub()});
    default: return random_expr(rng, 1);
  }
}

SurfaceDecl random_decl(Rng& rng, unsigned depth) {
  SurfaceDecl d;
  d.name = random_name(rng);
  unsigned kind = pick(rng, 3);
  d.abbrv = kind == 1;
  d.abstr = kind == 2;
  if (pick(rng, 2)) d.unfolds = random_names(rng, 3);
  d.type = random_expr(rng, depth);
  d.body = random_expr(rng, depth);
  return d;
}

std::string corpus_dir() { return UTT_CORPUS_DIR; }

std::vector<std::string> corpus_files() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(corpus_dir()))
    if (e.path().extension() == ".utt") out.push_back(e.path().filename().string());
  std::sort(out.begin(), out.end());
  return out;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace utt::gen
