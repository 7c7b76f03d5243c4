#include <typed_patterns/file_typestate.hpp>

namespace patterns::file {

std::vector<sys::Bytes> drain(sys::FakeFs& fs, const std::string& path) {
  std::vector<sys::Bytes> chunks;
  TypedFile<ReadingState> file = TypedFile<ReadingState>::open(fs, path);
  for (;;) {
    ReadTransition step = std::move(file).read();
    if (Continue* cont = std::get_if<Continue>(&step)) {
      chunks.push_back(std::move(cont->chunk));
      file = std::move(cont->file);
    } else {
      std::move(std::get<Finished>(step).file).close();
      return chunks;
    }
  }
}

}  // namespace patterns::file
