#pragma once

#include <random>
#include <string>
#include <vector>

#include <typed_patterns/demo_events.hpp>
#include <typed_patterns/event_registry.hpp>

// Scripted register/trigger scenarios over the three demo event types, run
// against both registry encodings and against a plain reference model. The
// model is the oracle: it knows nothing about either registry, it just
// replays registration order.

namespace testsupport {

using patterns::events::InvocationLog;
using namespace patterns::events::demo;

struct ScriptStep {
  bool is_register = false;
  int event = 0;  // 0=OnClick 1=OnKeyPress 2=OnResize
  int a = 0;
  int b = 0;  // payload data for triggers
};

inline const char* event_name(int event) {
  switch (event) {
    case 0: return "OnClick";
    case 1: return "OnKeyPress";
    default: return "OnResize";
  }
}

inline std::string payload_rendering(const ScriptStep& step) {
  switch (step.event) {
    case 0: return render(OnClick{step.a, step.b});
    case 1: return render(OnKeyPress{std::to_string(step.a)});
    default: return render(OnResize{step.a, step.b});
  }
}

inline std::vector<ScriptStep> random_script(std::mt19937& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> event(0, 2);
  std::uniform_int_distribution<int> value(0, 99);
  std::vector<ScriptStep> script;
  const int n = len(rng);
  script.reserve(n);
  for (int i = 0; i < n; ++i) {
    script.push_back({coin(rng) == 0, event(rng), value(rng), value(rng)});
  }
  return script;
}

// Reference model: per event, listeners are their registration indices; a
// trigger invokes them all in order.
inline InvocationLog expected_script_log(const std::vector<ScriptStep>& script) {
  std::vector<std::size_t> listeners[3];
  std::size_t next_index[3] = {0, 0, 0};
  InvocationLog log;
  for (const ScriptStep& step : script) {
    if (step.is_register) {
      listeners[step.event].push_back(next_index[step.event]++);
    } else {
      for (const std::size_t idx : listeners[step.event]) {
        log.push_back({event_name(step.event), payload_rendering(step), idx});
      }
    }
  }
  return log;
}

inline InvocationLog run_script_typed(const std::vector<ScriptStep>& script) {
  patterns::events::TypedRegistry bus;
  InvocationLog log;
  std::size_t next_index[3] = {0, 0, 0};
  for (const ScriptStep& step : script) {
    if (step.is_register) {
      const std::size_t idx = next_index[step.event]++;
      switch (step.event) {
        case 0:
          bus.register_listener([&log, idx](const OnClick& ev) {
            log.push_back({"OnClick", render(ev), idx});
          });
          break;
        case 1:
          bus.register_listener([&log, idx](const OnKeyPress& ev) {
            log.push_back({"OnKeyPress", render(ev), idx});
          });
          break;
        default:
          bus.register_listener([&log, idx](const OnResize& ev) {
            log.push_back({"OnResize", render(ev), idx});
          });
          break;
      }
    } else {
      switch (step.event) {
        case 0: bus.trigger(OnClick{step.a, step.b}); break;
        case 1: bus.trigger(OnKeyPress{std::to_string(step.a)}); break;
        default: bus.trigger(OnResize{step.a, step.b}); break;
      }
    }
  }
  return log;
}

// Same script on the string-key encoding, with keys used consistently and
// correctly (the well-behaved-client case).
inline InvocationLog run_script_string(const std::vector<ScriptStep>& script) {
  patterns::events::StringRegistry bus;
  InvocationLog log;
  std::size_t next_index[3] = {0, 0, 0};
  for (const ScriptStep& step : script) {
    if (step.is_register) {
      const std::size_t idx = next_index[step.event]++;
      switch (step.event) {
        case 0:
          bus.register_listener("OnClick", [&log, idx](const std::any& payload) {
            const auto& ev = patterns::events::expect_payload<OnClick>(payload);
            log.push_back({"OnClick", render(ev), idx});
          });
          break;
        case 1:
          bus.register_listener("OnKeyPress", [&log, idx](const std::any& payload) {
            const auto& ev = patterns::events::expect_payload<OnKeyPress>(payload);
            log.push_back({"OnKeyPress", render(ev), idx});
          });
          break;
        default:
          bus.register_listener("OnResize", [&log, idx](const std::any& payload) {
            const auto& ev = patterns::events::expect_payload<OnResize>(payload);
            log.push_back({"OnResize", render(ev), idx});
          });
          break;
      }
    } else {
      switch (step.event) {
        case 0: bus.trigger("OnClick", OnClick{step.a, step.b}); break;
        case 1: bus.trigger("OnKeyPress", OnKeyPress{std::to_string(step.a)}); break;
        default: bus.trigger("OnResize", OnResize{step.a, step.b}); break;
      }
    }
  }
  return log;
}

}  // namespace testsupport
