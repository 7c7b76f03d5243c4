#include <typed_patterns/event_registry.hpp>

#include <utility>

namespace patterns::events {

void StringRegistry::register_listener(const std::string& name, DynListener listener) {
  listeners_[name].push_back(std::move(listener));
}

void StringRegistry::trigger(const std::string& name, const std::any& payload) const {
  auto it = listeners_.find(name);
  if (it == listeners_.end()) {
    return;
  }
  const std::vector<DynListener> snapshot = it->second;
  for (const DynListener& listener : snapshot) {
    listener(payload);
  }
}

std::string render(const Invocation& invocation) {
  return invocation.event + "#" + std::to_string(invocation.listener_index) +
         " " + invocation.payload;
}

}  // namespace patterns::events
