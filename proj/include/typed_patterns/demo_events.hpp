#pragma once

#include <string>

#include <typed_patterns/event_registry.hpp>

// Fixture event types shared by the CLI demo, the bindings and the tests.

namespace patterns::events::demo {

struct OnClick {
  int mouse_x = 0;
  int mouse_y = 0;
};

struct OnKeyPress {
  std::string key;
};

struct OnResize {
  int width = 0;
  int height = 0;
};

std::string render(const OnClick& ev);
std::string render(const OnKeyPress& ev);
std::string render(const OnResize& ev);

// Canonical demo: one OnClick listener, one OnKeyPress listener, then a
// click at (1, 3) followed by an Enter key press, run on a TypedRegistry.
InvocationLog run_typed_demo_scenario();

}  // namespace patterns::events::demo
