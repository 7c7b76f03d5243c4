// EXPECT: 'consumed' state
// FLAGS: -Werror=consumed
// close() consumes the handle; touching it again must not compile.
#include <typed_patterns/file_typestate.hpp>
#include <typed_patterns/syscalls.hpp>

#include <utility>

using namespace patterns;

int main() {
  sys::FakeFs fs;
  fs.seed("f.txt", "0123456789", 4);
  auto f = file::TypedFile<file::ReadingState>::open(fs, "f.txt");
  std::move(f).close();
  std::move(f).close(); // MISUSE
  return 0;
}
