#pragma once

#include <string>
#include <utility>

#include <typed_patterns/stringify.hpp>
#include <typed_patterns/template_text.hpp>

// Parallel-list encoding of printf. Templates and argument packs are both
// inductive cons lists whose shape is part of the type, and format_static is
// defined by simultaneous induction over the two lists:
//
//   ([],            [])            -> ""
//   (Literal : ts,  args)          -> text + format(ts, args)
//   (Hole : ts,     arg : rest)    -> display(arg) + format(ts, rest)
//
// There is no rule pairing a hole with an empty argument list, nor an empty
// template with leftover arguments, so an arity mismatch in either direction
// is a missing overload: a compile-time error, never a runtime one.
//
// Shapes exist only at compile time; a runtime-parsed Template cannot be
// promoted into one. The bridge runs the other way: to_template() forgets a
// static shape into a dynamic Template (used by the differential tests).

namespace patterns::format {

struct StaticNil {};

template <typename Head, typename Tail>
struct StaticCons {
  Head head;
  Tail tail;
};

// The two template-element head types. A literal's text stays a runtime
// value; only the element kind is lifted into the type.
struct StaticLiteral {
  std::string text;
};
struct StaticHole {};

// Builds a cons list from a flat argument pack, front first:
//   static_list(StaticLiteral{"Hello "}, StaticHole{})
//   static_list(std::string("World"))
inline StaticNil static_list() { return {}; }

template <typename Head, typename... Rest>
auto static_list(Head head, Rest... rest) {
  auto tail = static_list(std::move(rest)...);
  return StaticCons<Head, decltype(tail)>{std::move(head), std::move(tail)};
}

inline std::string format_static(const StaticNil&, const StaticNil&) {
  return "";
}

template <typename TplTail, typename Args>
std::string format_static(const StaticCons<StaticLiteral, TplTail>& tpl,
                          const Args& args) {
  return tpl.head.text + format_static(tpl.tail, args);
}

template <Stringifiable T, typename TplTail, typename ArgTail>
std::string format_static(const StaticCons<StaticHole, TplTail>& tpl,
                          const StaticCons<T, ArgTail>& args) {
  return to_display_string(args.head) + format_static(tpl.tail, args.tail);
}

inline void collect_elements(const StaticNil&, std::vector<TemplateElement>&) {}

template <typename Tail>
void collect_elements(const StaticCons<StaticLiteral, Tail>& list,
                      std::vector<TemplateElement>& out) {
  out.push_back(Literal{list.head.text});
  collect_elements(list.tail, out);
}

template <typename Tail>
void collect_elements(const StaticCons<StaticHole, Tail>& list,
                      std::vector<TemplateElement>& out) {
  out.push_back(Hole{});
  collect_elements(list.tail, out);
}

// Forgets the static shape, yielding the equivalent dynamic Template.
template <typename List>
Template to_template(const List& list) {
  std::vector<TemplateElement> elements;
  collect_elements(list, elements);
  return Template(std::move(elements));
}

}  // namespace patterns::format
