#ifndef UTT_SURFACE_HPP
#define UTT_SURFACE_HPP

// Concrete syntax of `.utt` files.
//
//   decl ::= [abbreviation | abstract] def NAME [unfolds NAMES] : expr := expr
//   expr ::= fun x.. => expr | unfold NAMES in expr | (x.. : expr).. -> expr
//          | app [-> expr]
//   app  ::= suc atom | natelim atom atom atom atom | J atom atom atom
//          | Id atom atom atom | atom, followed by atoms
//   atom ::= NAME | NUMBER | refl | U | Nat | zero | ? | ?label | ( expr )
//
// `(+)` lexes as the single identifier `+`. Line comments start with `--`.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "utt/error.hpp"

namespace utt {

enum class Tok {
  Ident,
  Number,
  Hole,  // text holds the label, possibly empty
  KwDef,
  KwUnfolds,
  KwAbbreviation,
  KwAbstract,
  KwUnfold,
  KwIn,
  KwFun,
  KwNatElim,
  KwJ,
  KwId,
  KwRefl,
  KwSuc,
  KwZero,
  KwNat,
  KwU,
  LParen,
  RParen,
  LBrace,
  RBrace,
  Colon,
  ColonEq,
  Arrow,
  FatArrow,
  Comma,
  Semicolon,
  Eof,
};

std::string_view token_name(Tok t);

struct Token {
  Tok kind;
  std::string text;
  Span span;
};

/// Throws LexError.
std::vector<Token> tokenize(std::string_view input);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

namespace ast {

struct Name { std::string name; };
struct App { ExprPtr fn; ExprPtr arg; };
struct Lam { std::vector<std::string> params; ExprPtr body; };
/// `(x y : A) -> B`; an arrow `A -> B` has no names.
struct Pi { std::vector<std::string> names; ExprPtr dom; ExprPtr cod; };
struct NatLit { std::uint64_t value; };
struct NatType {};
struct Suc { ExprPtr pred; };
struct NatElim { ExprPtr target; ExprPtr motive; ExprPtr base; ExprPtr step; };
struct Id { ExprPtr type; ExprPtr lhs; ExprPtr rhs; };
struct Refl {};
struct J { ExprPtr motive; ExprPtr refl_case; ExprPtr target; };
struct Univ {};
struct Unfold { std::vector<std::string> names; ExprPtr body; };
struct Hole { std::optional<std::string> label; };

}  // namespace ast

using ExprVariant = std::variant<ast::Name, ast::App, ast::Lam, ast::Pi, ast::NatLit, ast::NatType, ast::Suc,
                                 ast::NatElim, ast::Id, ast::Refl, ast::J, ast::Univ, ast::Unfold, ast::Hole>;

struct Expr {
  ExprVariant node;
  Span span;
};

template <class T>
const T* as(const ExprPtr& e) {
  return std::get_if<T>(&e->node);
}

ExprPtr make_expr(ExprVariant node, Span span = {});

/// Structural equality ignoring spans.
bool same_expr(const ExprPtr& a, const ExprPtr& b);

struct SurfaceDecl {
  std::string name;
  bool abbrv = false;
  bool abstr = false;
  std::vector<std::string> unfolds;
  std::vector<Span> unfold_spans;
  ExprPtr type;
  ExprPtr body;
  Span span;       // the whole declaration
  Span name_span;
};

bool same_decl(const SurfaceDecl& a, const SurfaceDecl& b);

struct SourceFile {
  std::string path;
  std::vector<SurfaceDecl> decls;
};

/// Throws LexError, ParseError (with the expected-token set) or
/// DuplicateDefinition.
SourceFile parse_program(std::string_view input, std::string path = "<input>");
ExprPtr parse_expr(std::string_view input);

std::string print_surface(const ExprPtr& e);
std::string print_surface(const SurfaceDecl& d);
std::string print_surface(const SourceFile& f);

/// Byte offsets to 1-based line and column (columns count code points).
class SourceMap {
 public:
  explicit SourceMap(std::string_view text);

  struct Position {
    std::uint32_t line;
    std::uint32_t column;
  };

  Position position(std::uint32_t offset) const;
  std::string_view line_text(std::uint32_t line) const;

 private:
  std::string_view text_;
  std::vector<std::uint32_t> line_starts_;
};

}  // namespace utt

#endif  // UTT_SURFACE_HPP
