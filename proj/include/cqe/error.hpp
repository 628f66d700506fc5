#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cqe {

enum class ErrorKind {
  IllTyped,
  HoleOutsideQuotation,
  NotEvalFree,
  ContainsHole,
  NestedQuasiquote,
  Improper,
  NotAConstruction,
  NotAVariable,
  NotClosed,
  UnsupportedArity,
  UnknownType,
  UnknownConstant,
  DuplicateName,
  OpenBody,
  RuleShape,
  SubstitutionBlocked,
  QuotationTypePolymorphism,
  NotAtomicQuote,
  TypeMismatch,
  TypeArgMalformed,
  HasHoles,
  FreeOccurrence,
  SameVariable,
  WrongShape,
  ParseError,
  ElaborationError,
  UnknownTheorem,
  Io,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace cqe
