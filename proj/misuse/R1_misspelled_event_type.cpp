// EXPECT: undeclared identifier
// Event identity is the type itself, so a misspelled event name is an
// unknown type, not a silent no-op.
#include <typed_patterns/demo_events.hpp>
#include <typed_patterns/event_registry.hpp>

using namespace patterns::events;
using namespace patterns::events::demo;

int main() {
  TypedRegistry bus;
  bus.register_listener([](const OnClick& ev) { (void)ev; });
  bus.trigger(OnClick{1, 3});
  bus.trigger(OnClack{1, 3}); // MISUSE
  return 0;
}
