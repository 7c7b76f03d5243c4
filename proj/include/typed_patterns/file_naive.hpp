#pragma once

#include <string>

#include <typed_patterns/syscalls.hpp>

namespace patterns::file {

// Thin wrapper that forwards each call to the syscall layer verbatim.
// Deliberately offers no protection: reading past EOF, double close and
// read-after-close all surface as misuse faults at runtime.
class NaiveFile {
 public:
  static NaiveFile open(sys::FakeFs& fs, const std::string& path);

  bool eof();
  sys::Bytes read();
  void close();

  sys::Descriptor fd() const { return fd_; }

 private:
  NaiveFile(sys::FakeFs* fs, sys::Descriptor fd) : fs_(fs), fd_(fd) {}

  sys::FakeFs* fs_;
  sys::Descriptor fd_;
};

}  // namespace patterns::file
