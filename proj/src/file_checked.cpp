#include <typed_patterns/file_checked.hpp>

namespace patterns::file {

CheckedFile CheckedFile::open(sys::FakeFs& fs, const std::string& path) {
  sys::Descriptor fd = fs.sys_open(path);
  State state = fs.sys_eof(fd) ? State::Eof : State::Read;
  return CheckedFile(&fs, fd, state);
}

std::optional<sys::Bytes> CheckedFile::read() {
  switch (state_) {
    case State::Read: {
      sys::Bytes chunk = fs_->sys_read(fd_);
      if (fs_->sys_eof(fd_)) {
        state_ = State::Eof;
      }
      return chunk;
    }
    case State::Eof:
    case State::Close:
      return std::nullopt;
  }
  return std::nullopt;
}

bool CheckedFile::close() {
  switch (state_) {
    case State::Read:
    case State::Eof:
      fs_->sys_close(fd_);
      state_ = State::Close;
      return true;
    case State::Close:
      return false;
  }
  return false;
}

}  // namespace patterns::file
