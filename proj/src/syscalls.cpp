#include <typed_patterns/syscalls.hpp>

#include <algorithm>
#include <utility>

namespace patterns::sys {

std::string render(const SyscallRecord& record) {
  struct Renderer {
    std::string operator()(const OpenRecord& r) const {
      return "open(" + r.path + ") -> " + std::to_string(r.id);
    }
    std::string operator()(const EofRecord& r) const {
      return "eof(" + std::to_string(r.id) + ") -> " + (r.result ? "true" : "false");
    }
    std::string operator()(const ReadRecord& r) const {
      return "read(" + std::to_string(r.id) + ") -> " + std::to_string(r.bytes_returned);
    }
    std::string operator()(const CloseRecord& r) const {
      return "close(" + std::to_string(r.id) + ")";
    }
  };
  return std::visit(Renderer{}, record);
}

void FakeFs::seed(const std::string& path, Bytes content, std::size_t chunk_size) {
  if (chunk_size < 1) {
    throw FixtureError("seed: chunk_size must be >= 1");
  }
  files_[path] = std::move(content);
  chunk_size_ = chunk_size;
}

Descriptor FakeFs::sys_open(const std::string& path) {
  if (files_.find(path) == files_.end()) {
    throw FixtureError("sys_open: path was never seeded: " + path);
  }
  Descriptor d{next_id_++};
  live_.emplace(d.id, DescriptorState{path, 0, true});
  trace_.push_back(OpenRecord{path, d.id});
  return d;
}

bool FakeFs::sys_eof(Descriptor d) {
  DescriptorState& state = live_open(d, FaultCode::EofAfterClose);
  const bool result = state.cursor == content_of(state).size();
  trace_.push_back(EofRecord{d.id, result});
  return result;
}

Bytes FakeFs::sys_read(Descriptor d) {
  DescriptorState& state = live_open(d, FaultCode::ReadAfterClose);
  const Bytes& content = content_of(state);
  if (state.cursor == content.size()) {
    throw MisuseFault(FaultCode::ReadPastEof,
                      "sys_read on descriptor " + std::to_string(d.id) + " at EOF");
  }
  const std::size_t n = std::min(chunk_size_, content.size() - state.cursor);
  Bytes chunk = content.substr(state.cursor, n);
  state.cursor += n;
  trace_.push_back(ReadRecord{d.id, n});
  return chunk;
}

void FakeFs::sys_close(Descriptor d) {
  DescriptorState& state = live_open(d, FaultCode::DoubleClose);
  state.open = false;
  trace_.push_back(CloseRecord{d.id});
}

std::vector<std::string> FakeFs::trace_lines() const {
  std::vector<std::string> lines;
  lines.reserve(trace_.size());
  for (const SyscallRecord& record : trace_) {
    lines.push_back(render(record));
  }
  return lines;
}

DescriptorState FakeFs::state_of(Descriptor d) const {
  auto it = live_.find(d.id);
  if (it == live_.end()) {
    throw FixtureError("state_of: unknown descriptor " + std::to_string(d.id));
  }
  return it->second;
}

DescriptorState& FakeFs::live_open(Descriptor d, FaultCode when_closed) {
  auto it = live_.find(d.id);
  if (it == live_.end()) {
    throw FixtureError("unknown descriptor " + std::to_string(d.id) +
                       " (descriptor from another filesystem?)");
  }
  if (!it->second.open) {
    throw MisuseFault(when_closed,
                      "descriptor " + std::to_string(d.id) + " is closed");
  }
  return it->second;
}

const Bytes& FakeFs::content_of(const DescriptorState& state) const {
  return files_.at(state.path);
}

}  // namespace patterns::sys
