#include "utt/error.hpp"

namespace utt {

std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateProp: return "duplicate-prop";
    case ErrorCode::UnknownProp: return "unknown-prop";
    case ErrorCode::AbstractProp: return "abstract-prop";
    case ErrorCode::DuplicateConst: return "duplicate-const";
    case ErrorCode::IllTypedDecl: return "ill-typed-decl";
    case ErrorCode::NotAType: return "not-a-type";
    case ErrorCode::TypeMismatch: return "type-mismatch";
    case ErrorCode::PropNotTrue: return "prop-not-true";
    case ErrorCode::BoundaryMismatch: return "boundary-mismatch";
    case ErrorCode::CannotInfer: return "cannot-infer";
    case ErrorCode::UnboundConst: return "unbound-const";
    case ErrorCode::UnstableLeak: return "unstable-leak";
    case ErrorCode::LexError: return "lex-error";
    case ErrorCode::ParseError: return "parse-error";
    case ErrorCode::DuplicateDefinition: return "duplicate-definition";
    case ErrorCode::UnboundName: return "unbound-name";
    case ErrorCode::ConvMismatch: return "conv-mismatch";
    case ErrorCode::UnknownUnfoldTarget: return "unknown-unfold-target";
    case ErrorCode::AbstractUnfoldTarget: return "abstract-unfold-target";
    case ErrorCode::BadEliminator: return "bad-eliminator";
    case ErrorCode::Io: return "io";
    case ErrorCode::Usage: return "usage";
  }
  return "unknown";
}

}  // namespace utt
