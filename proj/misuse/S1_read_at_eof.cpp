// EXPECT: constraints not satisfied
// read() exists only on reading-state handles; an EOF-state handle offers
// just close().
#include <typed_patterns/file_typestate.hpp>
#include <typed_patterns/syscalls.hpp>

#include <utility>
#include <variant>

using namespace patterns;

int main() {
  sys::FakeFs fs;
  fs.seed("f.txt", "", 4);
  auto f = file::TypedFile<file::ReadingState>::open(fs, "f.txt");
  auto step = std::move(f).read();
  auto& finished = std::get<file::Finished>(step);
  auto again = std::move(finished.file).read(); // MISUSE
  std::move(finished.file).close();
  return 0;
}
