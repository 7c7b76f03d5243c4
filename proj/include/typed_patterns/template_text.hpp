#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace patterns::format {

// A format template is a flat list of literal runs and holes.
struct Literal {
  std::string text;
  friend bool operator==(const Literal&, const Literal&) = default;
};
struct Hole {
  friend bool operator==(const Hole&, const Hole&) = default;
};
using TemplateElement = std::variant<Literal, Hole>;

class Template {
 public:
  Template() = default;
  explicit Template(std::vector<TemplateElement> elements);

  const std::vector<TemplateElement>& elements() const { return elements_; }

  // Cached count of Hole elements.
  std::size_t arity() const { return arity_; }

 private:
  std::vector<TemplateElement> elements_;
  std::size_t arity_ = 0;
};

// Unbalanced brace in template text; column is the 0-based index of the
// offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t column, const std::string& message)
      : std::runtime_error(message + " at column " + std::to_string(column)),
        column_(column) {}

  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

// Template syntax: `{}` is a hole, `{{` and `}}` are literal braces, any
// other brace is a ParseError. Adjacent literal runs are merged.
Template parse_template(const std::string& text);

// Inverse of parse_template: holes print as `{}`, literal braces are
// re-escaped. render_template(parse_template(t)) == t for every valid t.
std::string render_template(const Template& tpl);

}  // namespace patterns::format
