#include <typed_patterns/demo_events.hpp>

namespace patterns::events::demo {

std::string render(const OnClick& ev) {
  return "mouse_x=" + std::to_string(ev.mouse_x) +
         " mouse_y=" + std::to_string(ev.mouse_y);
}

std::string render(const OnKeyPress& ev) { return "key=" + ev.key; }

std::string render(const OnResize& ev) {
  return "width=" + std::to_string(ev.width) +
         " height=" + std::to_string(ev.height);
}

InvocationLog run_typed_demo_scenario() {
  InvocationLog log;
  TypedRegistry bus;
  bus.register_listener([&log](const OnClick& ev) {
    log.push_back({"OnClick", render(ev), 0});
  });
  bus.register_listener([&log](const OnKeyPress& ev) {
    log.push_back({"OnKeyPress", render(ev), 0});
  });
  bus.trigger(OnClick{1, 3});
  bus.trigger(OnKeyPress{"Enter"});
  return log;
}

}  // namespace patterns::events::demo
