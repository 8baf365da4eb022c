#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace grouplab {

enum class ErrorKind {
  // resource caps (CLI exit code 2)
  ClosureExceedsCap,
  CosetLimitExceeded,
  GroupTooLarge,
  GroupTooLargeForOracle,
  // invalid input (CLI exit code 1)
  EmptyGeneratorList,
  NotNormal,
  NotAbelian,
  TableNotClosed,
  NotAPairing,
  ModulusMismatch,
  WitnessInvalid,
  UnknownFamily,
  ParamOutOfRange,
  ParseError,
  ValidationError,
  InvalidArgument,
  // internal consistency failures; these indicate a bug, never bad input
  KappaRelatorViolation,
  RelatorNotKilled,
  InconsistentOrders,
  PairingAxiomFailed,
  GammaNotBijective,
  DiagramNotCommutative,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ClosureExceedsCap: return "ClosureExceedsCap";
    case ErrorKind::CosetLimitExceeded: return "CosetLimitExceeded";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::GroupTooLargeForOracle: return "GroupTooLargeForOracle";
    case ErrorKind::EmptyGeneratorList: return "EmptyGeneratorList";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotAbelian: return "NotAbelian";
    case ErrorKind::TableNotClosed: return "TableNotClosed";
    case ErrorKind::NotAPairing: return "NotAPairing";
    case ErrorKind::ModulusMismatch: return "ModulusMismatch";
    case ErrorKind::WitnessInvalid: return "WitnessInvalid";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::KappaRelatorViolation: return "KappaRelatorViolation";
    case ErrorKind::RelatorNotKilled: return "RelatorNotKilled";
    case ErrorKind::InconsistentOrders: return "InconsistentOrders";
    case ErrorKind::PairingAxiomFailed: return "PairingAxiomFailed";
    case ErrorKind::GammaNotBijective: return "GammaNotBijective";
    case ErrorKind::DiagramNotCommutative: return "DiagramNotCommutative";
  }
  return "Unknown";
}

inline bool is_resource_cap(ErrorKind kind) {
  return kind == ErrorKind::ClosureExceedsCap || kind == ErrorKind::CosetLimitExceeded ||
         kind == ErrorKind::GroupTooLarge || kind == ErrorKind::GroupTooLargeForOracle;
}

inline bool is_internal(ErrorKind kind) {
  return kind == ErrorKind::KappaRelatorViolation || kind == ErrorKind::RelatorNotKilled ||
         kind == ErrorKind::InconsistentOrders || kind == ErrorKind::PairingAxiomFailed ||
         kind == ErrorKind::GammaNotBijective || kind == ErrorKind::DiagramNotCommutative;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace grouplab
