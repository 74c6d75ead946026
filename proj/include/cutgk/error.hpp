#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cutgk {

enum class ErrorKind {
  ClosureExceedsBound,
  DegreeMismatch,
  NotAMember,
  NotASubgroup,
  KindPreconditionViolated,
  BoundExceeded,
  NotFound,
  InvalidAction,
  NotAHomomorphism,
  SingularMatrix,
  CharacteristicDividesOrder,
  UnknownGraphId,
  UnknownLemma,
  SyntaxError,
  SemanticError,
  InvalidArgument,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ClosureExceedsBound: return "ClosureExceedsBound";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::NotAMember: return "NotAMember";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::KindPreconditionViolated: return "KindPreconditionViolated";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::InvalidAction: return "InvalidAction";
    case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::CharacteristicDividesOrder: return "CharacteristicDividesOrder";
    case ErrorKind::UnknownGraphId: return "UnknownGraphId";
    case ErrorKind::UnknownLemma: return "UnknownLemma";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::SemanticError: return "SemanticError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// 1-based position inside a DSL string.
struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<SourcePos> pos = std::nullopt)
      : std::runtime_error(message), kind_(kind), pos_(pos) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::optional<SourcePos>& position() const noexcept { return pos_; }

 private:
  ErrorKind kind_;
  std::optional<SourcePos> pos_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace cutgk
