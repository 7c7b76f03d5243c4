#pragma once

#include <stdexcept>
#include <string>

namespace patterns {

// Machine-readable codes for the deterministic aborts raised when a runtime
// API contract is violated.
enum class FaultCode {
  ReadPastEof,
  ReadAfterClose,
  EofAfterClose,
  DoubleClose,
  TooFewArgs,
  WrongPayloadType,
  UseAfterMove,
};

constexpr const char* to_string(FaultCode code) {
  switch (code) {
    case FaultCode::ReadPastEof: return "READ_PAST_EOF";
    case FaultCode::ReadAfterClose: return "READ_AFTER_CLOSE";
    case FaultCode::EofAfterClose: return "EOF_AFTER_CLOSE";
    case FaultCode::DoubleClose: return "DOUBLE_CLOSE";
    case FaultCode::TooFewArgs: return "TOO_FEW_ARGS";
    case FaultCode::WrongPayloadType: return "WRONG_PAYLOAD_TYPE";
    case FaultCode::UseAfterMove: return "USE_AFTER_MOVE";
  }
  return "UNKNOWN_FAULT";
}

// Trappable abort standing in for a hard runtime panic. Harnesses catch it
// and assert which rule fired via code().
class MisuseFault : public std::runtime_error {
 public:
  MisuseFault(FaultCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  FaultCode code() const noexcept { return code_; }

 private:
  FaultCode code_;
};

// A bug in test setup (opening a path that was never seeded, a descriptor
// from another filesystem, ...). Kept distinct from MisuseFault: it is not
// part of the modeled state machine.
class FixtureError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace patterns
