#include "utt/surface.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "utt/print.hpp"

namespace utt {
namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};

// One UTF-8 code point; malformed bytes decode as U+FFFD of length 1.
struct CodePoint {
  char32_t cp;
  std::uint32_t len;
};

CodePoint decode(std::string_view s, std::size_t i) {
  auto b = static_cast<unsigned char>(s[i]);
  auto cont = [&](std::size_t k) {
    return i + k < s.size() && (static_cast<unsigned char>(s[i + k]) & 0xC0) == 0x80;
  };
  auto at = [&](std::size_t k) { return static_cast<char32_t>(static_cast<unsigned char>(s[i + k]) & 0x3F); };
  if (b < 0x80) return {b, 1};
  if ((b & 0xE0) == 0xC0 && cont(1)) return {(char32_t(b & 0x1F) << 6) | at(1), 2};
  if ((b & 0xF0) == 0xE0 && cont(1) && cont(2)) return {(char32_t(b & 0x0F) << 12) | (at(1) << 6) | at(2), 3};
  if ((b & 0xF8) == 0xF0 && cont(1) && cont(2) && cont(3))
    return {(char32_t(b & 0x07) << 18) | (at(1) << 12) | (at(2) << 6) | at(3), 4};
  return {0xFFFD, 1};
}

constexpr char32_t kArrow = U'→';
constexpr char32_t kLambda = U'λ';
constexpr char32_t kNat = U'ℕ';

bool reserved(char32_t c) { return c == kArrow || c == kLambda || c == kNat; }

bool ident_start(char32_t c) {
  if (c < 0x80) return std::isalpha(static_cast<int>(c)) || c == '_' || c == '+' || c == '*';
  return !reserved(c);
}

bool ident_continue(char32_t c) {
  return ident_start(c) || (c < 0x80 && (std::isdigit(static_cast<int>(c)) || c == '\''));
}

// Characters allowed inside a parenthesized operator name.
bool op_char(char32_t c) {
  if (c >= 0x80) return !reserved(c);
  if (c <= ' ' || std::isalnum(static_cast<int>(c)) || c == '_') return false;
  return std::string_view("()[]{}?:,;\\.'\"").find(static_cast<char>(c)) == std::string_view::npos;
}

const std::unordered_map<std::string_view, Tok>& keywords() {
  static const std::unordered_map<std::string_view, Tok> kw{
      {"def", Tok::KwDef},       {"unfolds", Tok::KwUnfolds}, {"abbreviation", Tok::KwAbbreviation},
      {"abstract", Tok::KwAbstract}, {"unfold", Tok::KwUnfold}, {"in", Tok::KwIn},
      {"fun", Tok::KwFun},       {"natelim", Tok::KwNatElim}, {"J", Tok::KwJ},
      {"Id", Tok::KwId},         {"refl", Tok::KwRefl},       {"suc", Tok::KwSuc},
      {"zero", Tok::KwZero},     {"ze", Tok::KwZero},         {"Nat", Tok::KwNat},
      {"U", Tok::KwU},
  };
  return kw;
}

Span span_of(std::size_t b, std::size_t e) { return Span{static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(e)}; }

}  // namespace

std::string_view token_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Number: return "number";
    case Tok::Hole: return "`?`";
    case Tok::KwDef: return "`def`";
    case Tok::KwUnfolds: return "`unfolds`";
    case Tok::KwAbbreviation: return "`abbreviation`";
    case Tok::KwAbstract: return "`abstract`";
    case Tok::KwUnfold: return "`unfold`";
    case Tok::KwIn: return "`in`";
    case Tok::KwFun: return "`fun`";
    case Tok::KwNatElim: return "`natelim`";
    case Tok::KwJ: return "`J`";
    case Tok::KwId: return "`Id`";
    case Tok::KwRefl: return "`refl`";
    case Tok::KwSuc: return "`suc`";
    case Tok::KwZero: return "`zero`";
    case Tok::KwNat: return "`Nat`";
    case Tok::KwU: return "`U`";
    case Tok::LParen: return "`(`";
    case Tok::RParen: return "`)`";
    case Tok::LBrace: return "`{`";
    case Tok::RBrace: return "`}`";
    case Tok::Colon: return "`:`";
    case Tok::ColonEq: return "`:=`";
    case Tok::Arrow: return "`->`";
    case Tok::FatArrow: return "`=>`";
    case Tok::Comma: return "`,`";
    case Tok::Semicolon: return "`;`";
    case Tok::Eof: return "end of input";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](Tok k, std::size_t b, std::size_t e, std::string text = {}) {
    out.push_back(Token{k, std::move(text), span_of(b, e)});
  };
  auto scan_ident = [&](std::size_t j) {
    while (j < s.size()) {
      CodePoint c = decode(s, j);
      if (c.cp == '-') {
        if (j + 1 >= s.size()) break;
        CodePoint n = decode(s, j + 1);
        if (n.cp == '-' || n.cp == '>' || !ident_continue(n.cp)) break;
        j += 1;
        continue;
      }
      if (!ident_continue(c.cp)) break;
      j += c.len;
    }
    return j;
  };

  while (i < s.size()) {
    CodePoint c = decode(s, i);
    std::size_t b = i;
    if (c.cp == ' ' || c.cp == '\t' || c.cp == '\n' || c.cp == '\r') {
      ++i;
      continue;
    }
    if (c.cp < 0x20 || c.cp == 0x7F || c.cp == 0xFFFD)
      throw Error(ErrorCode::LexError, "unexpected control character", span_of(b, b + c.len));
    if (c.cp == '-') {
      if (i + 1 < s.size() && s[i + 1] == '-') {
        while (i < s.size() && s[i] != '\n') ++i;
        continue;
      }
      if (i + 1 < s.size() && s[i + 1] == '>') {
        push(Tok::Arrow, b, i += 2);
        continue;
      }
      throw Error(ErrorCode::LexError, "stray `-`", span_of(b, b + 1));
    }
    if (c.cp == '(') {
      std::size_t j = i + 1;
      while (j < s.size()) {
        CodePoint d = decode(s, j);
        if (!op_char(d.cp)) break;
        j += d.len;
      }
      if (j > i + 1 && j < s.size() && s[j] == ')') {
        push(Tok::Ident, b, j + 1, std::string(s.substr(i + 1, j - i - 1)));
        i = j + 1;
        continue;
      }
      push(Tok::LParen, b, ++i);
      continue;
    }
    switch (c.cp) {
      case ')': push(Tok::RParen, b, ++i); continue;
      case '{': push(Tok::LBrace, b, ++i); continue;
      case '}': push(Tok::RBrace, b, ++i); continue;
      case ',': push(Tok::Comma, b, ++i); continue;
      case ';': push(Tok::Semicolon, b, ++i); continue;
      case '\\': push(Tok::KwFun, b, ++i); continue;
      case ':':
        if (i + 1 < s.size() && s[i + 1] == '=') push(Tok::ColonEq, b, i += 2);
        else push(Tok::Colon, b, ++i);
        continue;
      case '=':
        if (i + 1 < s.size() && s[i + 1] == '>') {
          push(Tok::FatArrow, b, i += 2);
          continue;
        }
        throw Error(ErrorCode::LexError, "stray `=`", span_of(b, b + 1));
      case '?': {
        std::size_t j = i + 1;
        if (j < s.size() && ident_start(decode(s, j).cp)) j = scan_ident(j);
        push(Tok::Hole, b, j, std::string(s.substr(i + 1, j - i - 1)));
        i = j;
        continue;
      }
      case kArrow: push(Tok::Arrow, b, i += c.len); continue;
      case kLambda: push(Tok::KwFun, b, i += c.len); continue;
      case kNat: push(Tok::KwNat, b, i += c.len); continue;
      default: break;
    }
    if (c.cp < 0x80 && std::isdigit(static_cast<int>(c.cp))) {
      std::size_t j = i;
      std::uint64_t v = 0;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
        unsigned digit = s[j] - '0';
        if (v > (std::numeric_limits<std::uint64_t>::max() - digit) / 10)
          throw Error(ErrorCode::LexError, "numeral too large", span_of(b, j + 1));
        v = v * 10 + digit;
        ++j;
      }
      push(Tok::Number, b, j, std::string(s.substr(i, j - i)));
      i = j;
      continue;
    }
    if (ident_start(c.cp)) {
      std::size_t j = scan_ident(i);
      std::string text(s.substr(i, j - i));
      auto kw = keywords().find(text);
      push(kw == keywords().end() ? Tok::Ident : kw->second, b, j, std::move(text));
      i = j;
      continue;
    }
    throw Error(ErrorCode::LexError, "unexpected character", span_of(b, b + c.len));
  }
  push(Tok::Eof, s.size(), s.size());
  return out;
}

// ---------------------------------------------------------------------------
// AST

ExprPtr make_expr(ExprVariant node, Span span) { return std::make_shared<const Expr>(Expr{std::move(node), span}); }

bool same_expr(const ExprPtr& a, const ExprPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->node.index() != b->node.index()) return false;
  return std::visit(
      overloaded{
          [&](const ast::Name& x) { return x.name == std::get<ast::Name>(b->node).name; },
          [&](const ast::App& x) {
            const auto& y = std::get<ast::App>(b->node);
            return same_expr(x.fn, y.fn) && same_expr(x.arg, y.arg);
          },
          [&](const ast::Lam& x) {
            const auto& y = std::get<ast::Lam>(b->node);
            return x.params == y.params && same_expr(x.body, y.body);
          },
          [&](const ast::Pi& x) {
            const auto& y = std::get<ast::Pi>(b->node);
            return x.names == y.names && same_expr(x.dom, y.dom) && same_expr(x.cod, y.cod);
          },
          [&](const ast::NatLit& x) { return x.value == std::get<ast::NatLit>(b->node).value; },
          [&](const ast::NatType&) { return true; },
          [&](const ast::Suc& x) { return same_expr(x.pred, std::get<ast::Suc>(b->node).pred); },
          [&](const ast::NatElim& x) {
            const auto& y = std::get<ast::NatElim>(b->node);
            return same_expr(x.target, y.target) && same_expr(x.motive, y.motive) && same_expr(x.base, y.base) &&
                   same_expr(x.step, y.step);
          },
          [&](const ast::Id& x) {
            const auto& y = std::get<ast::Id>(b->node);
            return same_expr(x.type, y.type) && same_expr(x.lhs, y.lhs) && same_expr(x.rhs, y.rhs);
          },
          [&](const ast::Refl&) { return true; },
          [&](const ast::J& x) {
            const auto& y = std::get<ast::J>(b->node);
            return same_expr(x.motive, y.motive) && same_expr(x.refl_case, y.refl_case) &&
                   same_expr(x.target, y.target);
          },
          [&](const ast::Univ&) { return true; },
          [&](const ast::Unfold& x) {
            const auto& y = std::get<ast::Unfold>(b->node);
            return x.names == y.names && same_expr(x.body, y.body);
          },
          [&](const ast::Hole& x) { return x.label == std::get<ast::Hole>(b->node).label; },
      },
      a->node);
}

bool same_decl(const SurfaceDecl& a, const SurfaceDecl& b) {
  return a.name == b.name && a.abbrv == b.abbrv && a.abstr == b.abstr && a.unfolds == b.unfolds &&
         same_expr(a.type, b.type) && same_expr(a.body, b.body);
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  SourceFile program(std::string path) {
    SourceFile f{std::move(path), {}};
    std::unordered_map<std::string, bool> seen;
    while (peek().kind != Tok::Eof) {
      SurfaceDecl d = decl();
      if (seen.contains(d.name))
        throw Error(ErrorCode::DuplicateDefinition, "`" + d.name + "` is defined twice", d.name_span);
      seen[d.name] = true;
      f.decls.push_back(std::move(d));
    }
    return f;
  }

  ExprPtr whole_expr() {
    ExprPtr e = expr();
    expect(Tok::Eof);
    return e;
  }

 private:
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  bool at(Tok k) const { return peek().kind == k; }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  std::uint32_t last_end() const { return pos_ == 0 ? 0 : toks_[pos_ - 1].span.end; }

  [[noreturn]] void fail(std::initializer_list<std::string_view> expected) {
    std::string set;
    for (auto e : expected) {
      if (!set.empty()) set += ", ";
      set += e;
    }
    const Token& t = peek();
    Error err(ErrorCode::ParseError, "unexpected " + std::string(token_name(t.kind)), t.span);
    err.expected_tokens = set;
    throw err;
  }

  const Token& expect(Tok k) {
    if (!at(k)) fail({token_name(k)});
    return next();
  }

  SurfaceDecl decl() {
    SurfaceDecl d;
    std::uint32_t begin = peek().span.begin;
    if (at(Tok::KwAbbreviation)) {
      next();
      d.abbrv = true;
    } else if (at(Tok::KwAbstract)) {
      next();
      d.abstr = true;
    }
    if (!at(Tok::KwDef)) {
      if (d.abbrv || d.abstr) fail({token_name(Tok::KwDef)});
      fail({token_name(Tok::KwDef), token_name(Tok::KwAbbreviation), token_name(Tok::KwAbstract)});
    }
    next();
    if (!at(Tok::Ident)) fail({token_name(Tok::Ident)});
    const Token& name = next();
    d.name = name.text;
    d.name_span = name.span;
    if (at(Tok::KwUnfolds)) {
      next();
      names(d.unfolds, d.unfold_spans, Tok::Colon);
    }
    if (!at(Tok::Colon)) fail({token_name(Tok::Colon), token_name(Tok::KwUnfolds)});
    next();
    d.type = expr();
    if (!at(Tok::ColonEq)) fail({token_name(Tok::ColonEq)});
    next();
    d.body = expr();
    d.span = Span{begin, last_end()};
    return d;
  }

  // One or more names, optionally separated by `,` or `;`, up to `stop`.
  void names(std::vector<std::string>& out, std::vector<Span>& spans, Tok stop) {
    if (!at(Tok::Ident)) fail({token_name(Tok::Ident)});
    while (true) {
      const Token& t = next();
      out.push_back(t.text);
      spans.push_back(t.span);
      if (at(Tok::Comma) || at(Tok::Semicolon)) {
        next();
        if (!at(Tok::Ident)) fail({token_name(Tok::Ident)});
        continue;
      }
      if (at(Tok::Ident)) continue;
      if (!at(stop)) fail({token_name(Tok::Ident), token_name(stop)});
      return;
    }
  }

  bool binder_group_ahead() const {
    if (peek().kind != Tok::LParen || peek(1).kind != Tok::Ident) return false;
    std::size_t k = 1;
    while (peek(k).kind == Tok::Ident) ++k;
    return peek(k).kind == Tok::Colon;
  }

  static bool atom_start(Tok k) {
    switch (k) {
      case Tok::Ident:
      case Tok::Number:
      case Tok::Hole:
      case Tok::KwRefl:
      case Tok::KwU:
      case Tok::KwNat:
      case Tok::KwZero:
      case Tok::LParen: return true;
      default: return false;
    }
  }

  ExprPtr expr() {
    std::uint32_t begin = peek().span.begin;
    if (at(Tok::KwFun)) {
      next();
      std::vector<std::string> params;
      if (!at(Tok::Ident)) fail({token_name(Tok::Ident)});
      while (at(Tok::Ident)) params.push_back(next().text);
      if (!at(Tok::FatArrow)) fail({token_name(Tok::Ident), token_name(Tok::FatArrow)});
      next();
      ExprPtr body = expr();
      return make_expr(ast::Lam{std::move(params), body}, Span{begin, last_end()});
    }
    if (at(Tok::KwUnfold)) {
      next();
      std::vector<std::string> ns;
      std::vector<Span> spans;
      names(ns, spans, Tok::KwIn);
      next();
      ExprPtr body = expr();
      return make_expr(ast::Unfold{std::move(ns), body}, Span{begin, last_end()});
    }
    if (binder_group_ahead()) {
      struct Group {
        std::vector<std::string> names;
        ExprPtr dom;
        std::uint32_t begin;
      };
      std::vector<Group> groups;
      while (binder_group_ahead()) {
        Group g;
        g.begin = next().span.begin;
        while (at(Tok::Ident)) g.names.push_back(next().text);
        next();  // `:`
        g.dom = expr();
        expect(Tok::RParen);
        groups.push_back(std::move(g));
      }
      if (!at(Tok::Arrow)) fail({token_name(Tok::Arrow), token_name(Tok::LParen)});
      next();
      ExprPtr cod = expr();
      std::uint32_t end = last_end();
      for (auto it = groups.rbegin(); it != groups.rend(); ++it)
        cod = make_expr(ast::Pi{it->names, it->dom, cod}, Span{it->begin, end});
      return cod;
    }
    ExprPtr lhs = app();
    if (at(Tok::Arrow)) {
      next();
      ExprPtr cod = expr();
      return make_expr(ast::Pi{{}, lhs, cod}, Span{begin, last_end()});
    }
    return lhs;
  }

  ExprPtr app() {
    std::uint32_t begin = peek().span.begin;
    ExprPtr head;
    switch (peek().kind) {
      case Tok::KwSuc: {
        next();
        ExprPtr a = atom();
        head = make_expr(ast::Suc{a}, Span{begin, last_end()});
        break;
      }
      case Tok::KwNatElim: {
        next();
        ExprPtr t = atom(), m = atom(), b = atom(), s = atom();
        head = make_expr(ast::NatElim{t, m, b, s}, Span{begin, last_end()});
        break;
      }
      case Tok::KwJ: {
        next();
        ExprPtr m = atom(), r = atom(), t = atom();
        head = make_expr(ast::J{m, r, t}, Span{begin, last_end()});
        break;
      }
      case Tok::KwId: {
        next();
        ExprPtr a = atom(), l = atom(), r = atom();
        head = make_expr(ast::Id{a, l, r}, Span{begin, last_end()});
        break;
      }
      default: head = atom();
    }
    while (atom_start(peek().kind)) {
      ExprPtr arg = atom();
      head = make_expr(ast::App{head, arg}, Span{begin, last_end()});
    }
    return head;
  }

  ExprPtr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Ident: next(); return make_expr(ast::Name{t.text}, t.span);
      case Tok::Number: next(); return make_expr(ast::NatLit{std::stoull(t.text)}, t.span);
      case Tok::Hole: {
        next();
        std::optional<std::string> label;
        if (!t.text.empty()) label = t.text;
        return make_expr(ast::Hole{label}, t.span);
      }
      case Tok::KwRefl: next(); return make_expr(ast::Refl{}, t.span);
      case Tok::KwU: next(); return make_expr(ast::Univ{}, t.span);
      case Tok::KwNat: next(); return make_expr(ast::NatType{}, t.span);
      case Tok::KwZero: next(); return make_expr(ast::NatLit{0}, t.span);
      case Tok::LParen: {
        next();
        ExprPtr e = expr();
        expect(Tok::RParen);
        return e;
      }
      default:
        fail({token_name(Tok::Ident), token_name(Tok::Number), token_name(Tok::Hole), token_name(Tok::KwRefl),
              token_name(Tok::KwU), token_name(Tok::KwNat), token_name(Tok::KwZero), token_name(Tok::LParen)});
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Surface printer

enum Prec { kTop = 0, kApp = 1, kAtom = 2 };

void names_out(std::ostringstream& out, const std::vector<std::string>& ns) {
  for (std::size_t i = 0; i < ns.size(); ++i) out << (i ? " " : "") << display_name(ns[i]);
}

void print_expr(std::ostringstream& out, const ExprPtr& e, Prec prec) {
  auto open = [&](Prec have) {
    if (have < prec) out << '(';
  };
  auto close = [&](Prec have) {
    if (have < prec) out << ')';
  };
  std::visit(overloaded{
                 [&](const ast::Name& n) { out << display_name(n.name); },
                 [&](const ast::App& n) {
                   open(kApp);
                   print_expr(out, n.fn, kApp);
                   out << ' ';
                   print_expr(out, n.arg, kAtom);
                   close(kApp);
                 },
                 [&](const ast::Lam& n) {
                   open(kTop);
                   out << "fun ";
                   names_out(out, n.params);
                   out << " => ";
                   print_expr(out, n.body, kTop);
                   close(kTop);
                 },
                 [&](const ast::Pi& n) {
                   open(kTop);
                   if (n.names.empty()) {
                     print_expr(out, n.dom, kApp);
                   } else {
                     out << '(';
                     names_out(out, n.names);
                     out << " : ";
                     print_expr(out, n.dom, kTop);
                     out << ')';
                   }
                   out << " -> ";
                   print_expr(out, n.cod, kTop);
                   close(kTop);
                 },
                 [&](const ast::NatLit& n) { out << n.value; },
                 [&](const ast::NatType&) { out << "Nat"; },
                 [&](const ast::Suc& n) {
                   open(kApp);
                   out << "suc ";
                   print_expr(out, n.pred, kAtom);
                   close(kApp);
                 },
                 [&](const ast::NatElim& n) {
                   open(kApp);
                   out << "natelim";
                   for (const auto* x : {&n.target, &n.motive, &n.base, &n.step}) {
                     out << ' ';
                     print_expr(out, *x, kAtom);
                   }
                   close(kApp);
                 },
                 [&](const ast::Id& n) {
                   open(kApp);
                   out << "Id";
                   for (const auto* x : {&n.type, &n.lhs, &n.rhs}) {
                     out << ' ';
                     print_expr(out, *x, kAtom);
                   }
                   close(kApp);
                 },
                 [&](const ast::Refl&) { out << "refl"; },
                 [&](const ast::J& n) {
                   open(kApp);
                   out << "J";
                   for (const auto* x : {&n.motive, &n.refl_case, &n.target}) {
                     out << ' ';
                     print_expr(out, *x, kAtom);
                   }
                   close(kApp);
                 },
                 [&](const ast::Univ&) { out << 'U'; },
                 [&](const ast::Unfold& n) {
                   open(kTop);
                   out << "unfold ";
                   names_out(out, n.names);
                   out << " in ";
                   print_expr(out, n.body, kTop);
                   close(kTop);
                 },
                 [&](const ast::Hole& n) { out << '?' << n.label.value_or(""); },
             },
             e->node);
}

}  // namespace

SourceFile parse_program(std::string_view input, std::string path) {
  return Parser(tokenize(input)).program(std::move(path));
}

ExprPtr parse_expr(std::string_view input) { return Parser(tokenize(input)).whole_expr(); }

std::string print_surface(const ExprPtr& e) {
  std::ostringstream out;
  print_expr(out, e, kTop);
  return out.str();
}

std::string print_surface(const SurfaceDecl& d) {
  std::ostringstream out;
  if (d.abbrv) out << "abbreviation ";
  if (d.abstr) out << "abstract ";
  out << "def " << display_name(d.name);
  if (!d.unfolds.empty()) {
    out << " unfolds ";
    names_out(out, d.unfolds);
  }
  out << " : ";
  print_expr(out, d.type, kTop);
  out << " := ";
  print_expr(out, d.body, kTop);
  return out.str();
}

std::string print_surface(const SourceFile& f) {
  std::string out;
  for (const auto& d : f.decls) out += print_surface(d) + "\n";
  return out;
}

SourceMap::SourceMap(std::string_view text) : text_(text) {
  line_starts_.push_back(0);
  for (std::size_t i = 0; i < text.size(); ++i)
    if (text[i] == '\n') line_starts_.push_back(static_cast<std::uint32_t>(i + 1));
}

SourceMap::Position SourceMap::position(std::uint32_t offset) const {
  offset = std::min<std::uint32_t>(offset, static_cast<std::uint32_t>(text_.size()));
  auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), offset);
  std::uint32_t line = static_cast<std::uint32_t>(it - line_starts_.begin());
  std::uint32_t col = 1;
  for (std::size_t i = line_starts_[line - 1]; i < offset; i += decode(text_, i).len) ++col;
  return {line, col};
}

std::string_view SourceMap::line_text(std::uint32_t line) const {
  if (line == 0 || line > line_starts_.size()) return {};
  std::size_t b = line_starts_[line - 1];
  std::size_t e = line < line_starts_.size() ? line_starts_[line] - 1 : text_.size();
  if (e > b && text_[e - 1] == '\r') --e;
  return text_.substr(b, e - b);
}

}  // namespace utt
