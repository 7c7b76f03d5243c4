#pragma once

#include <any>
#include <cstddef>
#include <functional>
#include <string>
#include <typeindex>
#include <typeinfo>
#include <unordered_map>
#include <vector>

#include <typed_patterns/fault.hpp>

namespace patterns::events {

// -------------------------------------------------------------------------
// String-key encoding: names are strings, payloads are dynamically typed.
// A typo in a name is silently accepted; a payload of the wrong type blows
// up inside the listener. Both hazards are the point of this encoding.
// -------------------------------------------------------------------------

using DynListener = std::function<void(const std::any&)>;

class StringRegistry {
 public:
  // Appends under the given name; unknown names are created silently.
  void register_listener(const std::string& name, DynListener listener);

  // Invokes the listeners registered under the name, in registration order.
  // An unknown name is a no-op. Listeners registered by a callback take
  // effect from the next trigger on (the list is snapshotted first).
  void trigger(const std::string& name, const std::any& payload) const;

 private:
  std::unordered_map<std::string, std::vector<DynListener>> listeners_;
};

// Checked narrowing for string-registry payloads: a listener that expected a
// different payload type fails loudly instead of silently misbehaving.
template <typename E>
const E& expect_payload(const std::any& payload) {
  if (const E* typed = std::any_cast<E>(&payload)) {
    return *typed;
  }
  throw MisuseFault(FaultCode::WrongPayloadType,
                    std::string("listener expected ") + typeid(E).name() +
                        ", payload is " + payload.type().name());
}

// -------------------------------------------------------------------------
// Type-key encoding: the event type itself is the key. A listener can only
// be stored under the type it consumes and a trigger can only reach
// listeners of the payload's type, so name typos and payload mismatches are
// not representable.
// -------------------------------------------------------------------------

using TypeKey = std::type_index;

template <typename T>
TypeKey key_of() {
  return std::type_index(typeid(T));
}

namespace detail {

template <typename F>
struct listener_traits : listener_traits<decltype(&F::operator())> {};

template <typename C, typename E>
struct listener_traits<void (C::*)(const E&) const> {
  using event_type = E;
};
template <typename C, typename E>
struct listener_traits<void (C::*)(const E&)> {
  using event_type = E;
};
template <typename E>
struct listener_traits<void (*)(const E&)> {
  using event_type = E;
};

template <typename F>
using event_type_t = typename listener_traits<F>::event_type;

}  // namespace detail

class TypedRegistry {
 public:
  // Deduces the event type from the listener's parameter. The listener list
  // for E is created on first registration.
  template <typename F>
  void register_listener(F listener) {
    using E = detail::event_type_t<F>;
    std::any& slot = listeners_[list_key<E>()];
    if (!slot.has_value()) {
      slot = ListenerList<E>{};
    }
    // The slot under list_key<E>() always holds a ListenerList<E>; this
    // narrowing cannot fail.
    std::any_cast<ListenerList<E>&>(slot).push_back(
        std::function<void(const E&)>(std::move(listener)));
  }

  // Invokes exactly the E-listeners, in registration order. Snapshot
  // semantics as in StringRegistry.
  template <typename E>
  void trigger(const E& event) const {
    auto it = listeners_.find(list_key<E>());
    if (it == listeners_.end()) {
      return;
    }
    const ListenerList<E> snapshot = std::any_cast<const ListenerList<E>&>(it->second);
    for (const auto& listener : snapshot) {
      listener(event);
    }
  }

  template <typename E>
  std::size_t count() const {
    auto it = listeners_.find(list_key<E>());
    if (it == listeners_.end()) {
      return 0;
    }
    return std::any_cast<const ListenerList<E>&>(it->second).size();
  }

 private:
  template <typename E>
  using ListenerList = std::vector<std::function<void(const E&)>>;

  // Keyed on the identity of the listener-list type, which is in one-to-one
  // correspondence with the event type.
  template <typename E>
  static TypeKey list_key() {
    return key_of<ListenerList<E>>();
  }

  std::unordered_map<TypeKey, std::any> listeners_;
};

// One line of the invocation log the scenario harnesses build:
// which listener (by per-event registration index) saw which payload.
struct Invocation {
  std::string event;
  std::string payload;
  std::size_t listener_index = 0;
  friend bool operator==(const Invocation&, const Invocation&) = default;
};

using InvocationLog = std::vector<Invocation>;

// `<event>#<listener-index> <payload-rendering>`
std::string render(const Invocation& invocation);

}  // namespace patterns::events
