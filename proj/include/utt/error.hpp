#ifndef UTT_ERROR_HPP
#define UTT_ERROR_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace utt {

/// Byte range into a source buffer, half open.
struct Span {
  std::uint32_t begin = 0;
  std::uint32_t end = 0;

  bool operator==(const Span&) const = default;
};

enum class ErrorCode {
  // proposition lattice
  DuplicateProp,
  UnknownProp,
  AbstractProp,
  // kernel
  DuplicateConst,
  IllTypedDecl,
  NotAType,
  TypeMismatch,
  PropNotTrue,
  BoundaryMismatch,
  CannotInfer,
  UnboundConst,
  UnstableLeak,
  // surface
  LexError,
  ParseError,
  DuplicateDefinition,
  // elaboration
  UnboundName,
  ConvMismatch,
  UnknownUnfoldTarget,
  AbstractUnfoldTarget,
  BadEliminator,
  // driver
  Io,
  Usage,
};

std::string_view code_name(ErrorCode code);

/// The single exception type thrown across the library. Errors raised on
/// surface input carry a span; kernel errors on core terms do not.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::optional<Span> span = std::nullopt)
      : std::runtime_error(std::move(message)), code_(code), span_(span) {}

  ErrorCode code() const noexcept { return code_; }
  const std::optional<Span>& span() const noexcept { return span_; }
  void set_span(Span s) { span_ = s; }

  // ConvMismatch / TypeMismatch payload, already printed.
  std::string expected;
  std::string found;
  // Expected-token set for ParseError.
  std::string expected_tokens;
  // Secondary location (e.g. the `abstract` site for AbstractUnfoldTarget).
  std::optional<Span> note_span;
  std::string note;

 private:
  ErrorCode code_;
  std::optional<Span> span_;
};

}  // namespace utt

#endif  // UTT_ERROR_HPP
