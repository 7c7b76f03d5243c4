// EXPECT: no matching function
// Zero holes, one argument: the empty-template rule only accepts an empty
// argument list.
#include <typed_patterns/format_static.hpp>

#include <string>

using namespace patterns::format;

int main() {
  const std::string ok = format_static(static_list(), static_list());
  format_static(static_list(), static_list(std::string("extra"))); // MISUSE
  (void)ok;
  return 0;
}
