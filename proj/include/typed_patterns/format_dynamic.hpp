#pragma once

#include <concepts>
#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include <typed_patterns/fault.hpp>
#include <typed_patterns/stringify.hpp>
#include <typed_patterns/template_text.hpp>

namespace patterns::format {

// Type-erased "stringifiable value": rendered eagerly on construction.
class FormatArg {
 public:
  FormatArg(std::string text) : text_(std::move(text)) {}
  FormatArg(const char* text) : text_(text) {}

  template <typename T>
    requires Stringifiable<std::remove_cvref_t<T>> &&
             (!std::same_as<std::remove_cvref_t<T>, FormatArg>)
  FormatArg(T&& value) : text_(to_display_string(value)) {}

  const std::string& text() const { return text_; }

 private:
  std::string text_;
};

// Vector encoding of printf, hazards intact: each hole consumes the next
// argument, a missing argument aborts with TOO_FEW_ARGS, and extra arguments
// are silently ignored.
std::string format_dynamic(const Template& tpl, const std::vector<FormatArg>& args);

struct ArityError {
  std::size_t expected = 0;
  std::size_t got = 0;
  friend bool operator==(const ArityError&, const ArityError&) = default;
};

using CheckedFormatResult = std::variant<std::string, ArityError>;

// Safe dynamic fallback: rejects any template/argument length mismatch (in
// both directions) with an ArityError value instead of aborting.
CheckedFormatResult format_checked(const Template& tpl,
                                   const std::vector<FormatArg>& args);

}  // namespace patterns::format
