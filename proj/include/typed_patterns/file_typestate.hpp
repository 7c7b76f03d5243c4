#pragma once

#include <concepts>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <typed_patterns/fault.hpp>
#include <typed_patterns/syscalls.hpp>

// Typestate encoding of the file machine. The protocol state is a type
// parameter, transitions consume the handle (rvalue-qualified methods), and
// read() is only callable while the handle is in the reading state.
//
// C++ moves are non-destructive, so consumption is enforced twice:
//  - clang's consumed-object analysis makes reuse of a consumed handle a
//    compile-time diagnostic under -Wconsumed (the misuse corpus pins this);
//  - every transition checks a consumed flag and aborts with USE_AFTER_MOVE,
//    which is what other compilers and unanalyzed code paths fall back to.
#if defined(__clang__)
#define TP_CONSUMABLE [[clang::consumable(unconsumed)]]
#define TP_CONSUMES [[clang::callable_when(unconsumed)]] [[clang::set_typestate(consumed)]]
#define TP_FRESH [[clang::return_typestate(unconsumed)]]
#else
#define TP_CONSUMABLE
#define TP_CONSUMES
#define TP_FRESH
#endif

namespace patterns::file {

struct ReadingState {};
struct EofState {};

struct Continue;
struct Finished;

// Either-type for the two outcomes of a read transition.
using ReadTransition = std::variant<Continue, Finished>;

template <typename S>
class TP_CONSUMABLE TypedFile {
 public:
  TypedFile(const TypedFile&) = delete;
  TypedFile& operator=(const TypedFile&) = delete;

  TP_FRESH TypedFile(TypedFile&& other) noexcept
      : fs_(other.fs_),
        fd_(other.fd_),
        consumed_(std::exchange(other.consumed_, true)) {}

  TypedFile& operator=(TypedFile&& other) noexcept {
    fs_ = other.fs_;
    fd_ = other.fd_;
    consumed_ = std::exchange(other.consumed_, true);
    return *this;
  }

  TP_FRESH static TypedFile open(sys::FakeFs& fs, const std::string& path)
    requires std::same_as<S, ReadingState>
  {
    return TypedFile(&fs, fs.sys_open(path));
  }

  // Consumes the handle. Continues with a fresh reading-state handle and a
  // chunk, or finishes with an EOF-state handle (no read syscall issued).
  TP_CONSUMES ReadTransition read() &&
    requires std::same_as<S, ReadingState>;

  // Legal from any state; defined once generically.
  TP_CONSUMES void close() && { take().sys_close(fd_); }

 private:
  template <typename>
  friend class TypedFile;

  TP_FRESH TypedFile(sys::FakeFs* fs, sys::Descriptor fd) : fs_(fs), fd_(fd) {}

  // Marks this handle consumed; the runtime half of the consumption rule.
  sys::FakeFs& take() {
    if (consumed_) {
      throw MisuseFault(FaultCode::UseAfterMove,
                        "file handle was already consumed by a transition");
    }
    consumed_ = true;
    return *fs_;
  }

  sys::FakeFs* fs_ = nullptr;
  sys::Descriptor fd_{};
  bool consumed_ = false;
};

struct Continue {
  TypedFile<ReadingState> file;
  sys::Bytes chunk;
};

struct Finished {
  TypedFile<EofState> file;
};

template <typename S>
ReadTransition TypedFile<S>::read() &&
  requires std::same_as<S, ReadingState>
{
  sys::FakeFs& fs = take();
  if (fs.sys_eof(fd_)) {
    return Finished{TypedFile<EofState>(&fs, fd_)};
  }
  sys::Bytes chunk = fs.sys_read(fd_);
  return Continue{TypedFile<ReadingState>(&fs, fd_), std::move(chunk)};
}

// Canonical consumer: opens, reads until Finished, closes, and returns the
// chunks in order.
std::vector<sys::Bytes> drain(sys::FakeFs& fs, const std::string& path);

}  // namespace patterns::file
