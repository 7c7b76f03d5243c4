#pragma once

#include <concepts>
#include <ostream>
#include <sstream>
#include <string>

namespace patterns::format {

// Anything the formatter can render into a hole.
template <typename T>
concept Stringifiable = requires(std::ostream& os, const T& value) {
  { os << value };
};

// Single rendering rule shared by every formatter encoding, so their outputs
// are comparable byte for byte.
template <Stringifiable T>
std::string to_display_string(const T& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

}  // namespace patterns::format
