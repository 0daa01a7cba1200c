#pragma once

#include <stdexcept>
#include <string>

namespace latrad {

enum class ErrorKind {
  NotALattice,
  NoBound,
  NotComparable,
  NotStronger,
  HostMismatch,
  PreconditionFailed,
  NotTTOrder,
  WrongKind,
  NotRadical,
  NotBarRelated,
  NotTRadical,
  EmptyNotFixed,
  SizeLimit,
  BudgetExceeded,
  UnknownCheck,
  ParseError,
  SchemaError,
  NoWitness,
  InternalInconsistency,
  NotPreserving,
  NotFixed,
};

inline const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NoBound: return "NoBound";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::NotStronger: return "NotStronger";
    case ErrorKind::HostMismatch: return "HostMismatch";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::NotTTOrder: return "NotTTOrder";
    case ErrorKind::WrongKind: return "WrongKind";
    case ErrorKind::NotRadical: return "NotRadical";
    case ErrorKind::NotBarRelated: return "NotBarRelated";
    case ErrorKind::NotTRadical: return "NotTRadical";
    case ErrorKind::EmptyNotFixed: return "EmptyNotFixed";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::UnknownCheck: return "UnknownCheck";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::NoWitness: return "NoWitness";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::NotPreserving: return "NotPreserving";
    case ErrorKind::NotFixed: return "NotFixed";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + detail),
        kind_(kind),
        detail_(detail) {}

  ErrorKind kind() const { return kind_; }
  const std::string& detail() const { return detail_; }

private:
  ErrorKind kind_;
  std::string detail_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& detail) {
  throw Error(kind, detail);
}

}  // namespace latrad
