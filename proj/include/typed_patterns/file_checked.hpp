#pragma once

#include <optional>
#include <string>

#include <typed_patterns/syscalls.hpp>

namespace patterns::file {

// Enum-state encoding of the file machine. Every operation is total: an
// illegal request returns an absent value instead of issuing a syscall, so
// no call sequence on a CheckedFile can raise a misuse fault.
//
// open() probes EOF once so that an empty file starts in the Eof state, and
// read() re-probes after every chunk. The invariant is: state == Read
// implies the cursor is strictly before EOF, which is what makes the inner
// sys_read unconditionally safe.
class CheckedFile {
 public:
  enum class State { Read, Eof, Close };

  static CheckedFile open(sys::FakeFs& fs, const std::string& path);

  // Read state: next chunk (and a state update when it hit EOF).
  // Eof/Close states: absent, no syscall issued.
  std::optional<sys::Bytes> read();

  // True when the file was actually closed by this call; false signals a
  // double close.
  bool close();

  State state() const { return state_; }

 private:
  CheckedFile(sys::FakeFs* fs, sys::Descriptor fd, State state)
      : fs_(fs), fd_(fd), state_(state) {}

  sys::FakeFs* fs_;
  sys::Descriptor fd_;
  State state_;
};

}  // namespace patterns::file
