#include <typed_patterns/file_naive.hpp>

namespace patterns::file {

NaiveFile NaiveFile::open(sys::FakeFs& fs, const std::string& path) {
  return NaiveFile(&fs, fs.sys_open(path));
}

bool NaiveFile::eof() { return fs_->sys_eof(fd_); }

sys::Bytes NaiveFile::read() { return fs_->sys_read(fd_); }

void NaiveFile::close() { fs_->sys_close(fd_); }

}  // namespace patterns::file
