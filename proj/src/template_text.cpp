#include <typed_patterns/template_text.hpp>

#include <utility>

namespace patterns::format {

Template::Template(std::vector<TemplateElement> elements)
    : elements_(std::move(elements)) {
  for (const TemplateElement& element : elements_) {
    if (std::holds_alternative<Hole>(element)) {
      ++arity_;
    }
  }
}

Template parse_template(const std::string& text) {
  std::vector<TemplateElement> elements;
  std::string run;
  auto flush = [&] {
    if (!run.empty()) {
      elements.push_back(Literal{std::move(run)});
      run.clear();
    }
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '{') {
      if (i + 1 < text.size() && text[i + 1] == '{') {
        run += '{';
        ++i;
      } else if (i + 1 < text.size() && text[i + 1] == '}') {
        flush();
        elements.push_back(Hole{});
        ++i;
      } else {
        throw ParseError(i, "unbalanced '{'");
      }
    } else if (c == '}') {
      if (i + 1 < text.size() && text[i + 1] == '}') {
        run += '}';
        ++i;
      } else {
        throw ParseError(i, "unbalanced '}'");
      }
    } else {
      run += c;
    }
  }
  flush();
  return Template(std::move(elements));
}

std::string render_template(const Template& tpl) {
  std::string out;
  for (const TemplateElement& element : tpl.elements()) {
    if (const Literal* lit = std::get_if<Literal>(&element)) {
      for (const char c : lit->text) {
        if (c == '{') {
          out += "{{";
        } else if (c == '}') {
          out += "}}";
        } else {
          out += c;
        }
      }
    } else {
      out += "{}";
    }
  }
  return out;
}

}  // namespace patterns::format
