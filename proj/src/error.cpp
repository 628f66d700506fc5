#include "cqe/error.hpp"

namespace cqe {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IllTyped: return "IllTyped";
    case ErrorKind::HoleOutsideQuotation: return "HoleOutsideQuotation";
    case ErrorKind::NotEvalFree: return "NotEvalFree";
    case ErrorKind::ContainsHole: return "ContainsHole";
    case ErrorKind::NestedQuasiquote: return "NestedQuasiquote";
    case ErrorKind::Improper: return "Improper";
    case ErrorKind::NotAConstruction: return "NotAConstruction";
    case ErrorKind::NotAVariable: return "NotAVariable";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::UnsupportedArity: return "UnsupportedArity";
    case ErrorKind::UnknownType: return "UnknownType";
    case ErrorKind::UnknownConstant: return "UnknownConstant";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::OpenBody: return "OpenBody";
    case ErrorKind::RuleShape: return "RuleShape";
    case ErrorKind::SubstitutionBlocked: return "SubstitutionBlocked";
    case ErrorKind::QuotationTypePolymorphism: return "QuotationTypePolymorphism";
    case ErrorKind::NotAtomicQuote: return "NotAtomicQuote";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::TypeArgMalformed: return "TypeArgMalformed";
    case ErrorKind::HasHoles: return "HasHoles";
    case ErrorKind::FreeOccurrence: return "FreeOccurrence";
    case ErrorKind::SameVariable: return "SameVariable";
    case ErrorKind::WrongShape: return "WrongShape";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ElaborationError: return "ElaborationError";
    case ErrorKind::UnknownTheorem: return "UnknownTheorem";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace cqe
