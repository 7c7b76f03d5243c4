// EXPECT: no matching function
// One hole, zero arguments: no induction rule pairs a hole head with an
// empty argument list.
#include <typed_patterns/format_static.hpp>

#include <string>

using namespace patterns::format;

int main() {
  const auto tpl = static_list(StaticLiteral{"Hello "}, StaticHole{});
  const std::string ok = format_static(tpl, static_list(std::string("World")));
  const std::string bad = format_static(tpl, static_list()); // MISUSE
  (void)ok;
  return 0;
}
