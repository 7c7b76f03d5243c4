#include <typed_patterns/format_dynamic.hpp>

namespace patterns::format {

std::string format_dynamic(const Template& tpl, const std::vector<FormatArg>& args) {
  std::string out;
  std::size_t next_arg = 0;
  for (const TemplateElement& element : tpl.elements()) {
    if (const Literal* lit = std::get_if<Literal>(&element)) {
      out += lit->text;
    } else {
      if (next_arg >= args.size()) {
        throw MisuseFault(FaultCode::TooFewArgs,
                          "hole " + std::to_string(next_arg + 1) + " of " +
                              std::to_string(tpl.arity()) + " has no argument");
      }
      out += args[next_arg++].text();
    }
  }
  return out;
}

CheckedFormatResult format_checked(const Template& tpl,
                                   const std::vector<FormatArg>& args) {
  if (args.size() != tpl.arity()) {
    return ArityError{tpl.arity(), args.size()};
  }
  return format_dynamic(tpl, args);
}

}  // namespace patterns::format
