#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace grm {

enum class ErrorKind {
  CycleDetected,
  Disconnected,
  SelfLoop,
  DuplicateEdge,
  SingletonTree,
  DomainViolation,
  NotALeaf,
  DegreeBoundViolated,
  UnsupportedRegime,
  LimitExceeded,
  Parse,
  Overflow,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so that
/// callers (the CLI in particular) can map it to a diagnostic without parsing
/// the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace grm
