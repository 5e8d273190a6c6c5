#include "grm/error.hpp"

namespace grm {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::SingletonTree: return "SingletonTree";
    case ErrorKind::DomainViolation: return "DomainViolation";
    case ErrorKind::NotALeaf: return "NotALeaf";
    case ErrorKind::DegreeBoundViolated: return "DegreeBoundViolated";
    case ErrorKind::UnsupportedRegime: return "UnsupportedRegime";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Overflow: return "Overflow";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace grm
