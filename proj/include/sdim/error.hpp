#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sdim {

enum class ErrorKind {
  InvalidSpec,
  NotAGroup,
  ClosureTooLarge,
  NotAPrimeDivisor,
  Parse,
  Disconnected,
  DiameterTooLarge,
  OracleCapExceeded,
  EmptyFamily,
  InternalInconsistency,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::ClosureTooLarge: return "ClosureTooLarge";
    case ErrorKind::NotAPrimeDivisor: return "NotAPrimeDivisor";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::DiameterTooLarge: return "DiameterTooLarge";
    case ErrorKind::OracleCapExceeded: return "OracleCapExceeded";
    case ErrorKind::EmptyFamily: return "EmptyFamily";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

// Every failure raised by the library carries a kind so callers (the CLI in
// particular) can map it to an exit code without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sdim
