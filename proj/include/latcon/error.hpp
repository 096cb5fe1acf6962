#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace latcon {

enum class ErrorKind {
  ParseError,
  InvalidArgument,
  NotAPoset,
  NotALattice,
  SizeBound,
  NotACongruence,
  MemoryBudgetExceeded,
  LimitExceeded,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotAPoset: return "NotAPoset";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::SizeBound: return "SizeBound";
    case ErrorKind::NotACongruence: return "NotACongruence";
    case ErrorKind::MemoryBudgetExceeded: return "MemoryBudgetExceeded";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
  }
  return "Error";
}

/// Every failure raised by the library. what() reads "<Kind>: <detail>".
class LatconError : public std::runtime_error {
 public:
  LatconError(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace latcon
