#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <typed_patterns/fault.hpp>

// Test-only oracles and generators. Everything here is computed
// independently of the library implementation it checks.

namespace testsupport {

// Chunking oracle: reading a file of `length` bytes in chunks of
// `chunk_size` yields these chunk sizes, by direct enumeration.
inline std::vector<std::size_t> expected_chunk_sizes(std::size_t length,
                                                     std::size_t chunk_size) {
  std::vector<std::size_t> sizes;
  std::size_t remaining = length;
  while (remaining > 0) {
    const std::size_t n = remaining < chunk_size ? remaining : chunk_size;
    sizes.push_back(n);
    remaining -= n;
  }
  return sizes;
}

// Trace oracle for the canonical read-to-EOF-then-close loop: one open, an
// eof probe before every chunk, a final eof probe that answers true, one
// close.
inline std::vector<std::string> expected_drain_trace(const std::string& path,
                                                     std::size_t length,
                                                     std::size_t chunk_size,
                                                     int id = 1) {
  const std::string sid = std::to_string(id);
  std::vector<std::string> lines;
  lines.push_back("open(" + path + ") -> " + sid);
  for (const std::size_t n : expected_chunk_sizes(length, chunk_size)) {
    lines.push_back("eof(" + sid + ") -> false");
    lines.push_back("read(" + sid + ") -> " + std::to_string(n));
  }
  lines.push_back("eof(" + sid + ") -> true");
  lines.push_back("close(" + sid + ")");
  return lines;
}

inline std::string random_bytes(std::mt19937& rng, std::size_t length) {
  std::uniform_int_distribution<int> byte(0, 255);
  std::string content;
  content.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    content.push_back(static_cast<char>(byte(rng)));
  }
  return content;
}

// Runs fn and reports the fault code it aborted with, if any.
template <typename Fn>
std::optional<patterns::FaultCode> fault_code_of(Fn&& fn) {
  try {
    std::forward<Fn>(fn)();
  } catch (const patterns::MisuseFault& fault) {
    return fault.code();
  }
  return std::nullopt;
}

}  // namespace testsupport
