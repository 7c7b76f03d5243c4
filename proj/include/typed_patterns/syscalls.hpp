#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include <typed_patterns/fault.hpp>

// In-memory filesystem exposing the classic four-call API:
//
//   sys_open(path)  -> Descriptor   fresh open descriptor, cursor at 0
//   sys_eof(d)      -> bool         aborts if d is closed
//   sys_read(d)     -> Bytes        aborts if d is closed or at EOF
//   sys_close(d)                    aborts if d is already closed
//
// Every successful call appends one record to an immutable trace, which the
// harnesses use as a golden signal. Aborted calls leave no record.

namespace patterns::sys {

// Raw byte buffer. std::string keeps payloads easy to build in tests and to
// splice across the CLI boundary; contents are arbitrary bytes.
using Bytes = std::string;

// Opaque handle into the live-descriptor table of one FakeFs.
struct Descriptor {
  int id = 0;
  friend bool operator==(Descriptor, Descriptor) = default;
};

struct DescriptorState {
  std::string path;
  std::size_t cursor = 0;
  bool open = true;
};

struct OpenRecord {
  std::string path;
  int id = 0;
  friend bool operator==(const OpenRecord&, const OpenRecord&) = default;
};
struct EofRecord {
  int id = 0;
  bool result = false;
  friend bool operator==(const EofRecord&, const EofRecord&) = default;
};
struct ReadRecord {
  int id = 0;
  std::size_t bytes_returned = 0;
  friend bool operator==(const ReadRecord&, const ReadRecord&) = default;
};
struct CloseRecord {
  int id = 0;
  friend bool operator==(const CloseRecord&, const CloseRecord&) = default;
};

using SyscallRecord = std::variant<OpenRecord, EofRecord, ReadRecord, CloseRecord>;

// One record per line, exact wire format:
//   open(<path>) -> <id>
//   eof(<id>) -> <true|false>
//   read(<id>) -> <n>
//   close(<id>)
std::string render(const SyscallRecord& record);

class FakeFs {
 public:
  FakeFs() = default;
  FakeFs(const FakeFs&) = delete;
  FakeFs& operator=(const FakeFs&) = delete;
  FakeFs(FakeFs&&) = default;
  FakeFs& operator=(FakeFs&&) = default;

  // Stores (or overwrites) a file and sets the filesystem-wide read chunk
  // size. Test plumbing only: leaves no trace record. chunk_size >= 1.
  void seed(const std::string& path, Bytes content, std::size_t chunk_size);

  // Fresh descriptor for a seeded path. Descriptor ids start at 1 and are
  // never reused within one FakeFs lifetime.
  Descriptor sys_open(const std::string& path);

  // True iff the cursor is at the end of the file.
  bool sys_eof(Descriptor d);

  // Next min(chunk_size, remaining) bytes; advances the cursor.
  Bytes sys_read(Descriptor d);

  void sys_close(Descriptor d);

  std::vector<SyscallRecord> trace() const { return trace_; }
  std::vector<std::string> trace_lines() const;

  // Inspection helper for tests; not a syscall, leaves no trace record.
  DescriptorState state_of(Descriptor d) const;
  std::size_t chunk_size() const { return chunk_size_; }

 private:
  DescriptorState& live_open(Descriptor d, FaultCode when_closed);
  const Bytes& content_of(const DescriptorState& state) const;

  std::map<std::string, Bytes> files_;
  std::size_t chunk_size_ = 1;
  std::map<int, DescriptorState> live_;
  std::vector<SyscallRecord> trace_;
  int next_id_ = 1;
};

}  // namespace patterns::sys
