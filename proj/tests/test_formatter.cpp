#include <doctest.h>

#include <typed_patterns/format_dynamic.hpp>
#include <typed_patterns/format_static.hpp>
#include <typed_patterns/template_text.hpp>

#include <random>

#include "format_shapes.hpp"
#include "support.hpp"

using namespace patterns;
using namespace patterns::format;
using testsupport::fault_code_of;

namespace {

Template hello_template() {
  return Template({Literal{"Hello "}, Hole{}});
}

std::size_t column_of_parse_error(const std::string& text) {
  try {
    parse_template(text);
  } catch (const ParseError& err) {
    return err.column();
  }
  FAIL("expected a ParseError for: ", text);
  return std::size_t(-1);
}

}  // namespace

// --- parsing ---

TEST_CASE("parse: holes, escapes, merging") {
  const Template hello = parse_template("Hello {}");
  REQUIRE(hello.elements().size() == 2);
  CHECK(hello.elements()[0] == TemplateElement{Literal{"Hello "}});
  CHECK(hello.elements()[1] == TemplateElement{Hole{}});
  CHECK(hello.arity() == 1);

  CHECK(parse_template("").elements().empty());

  const Template escaped = parse_template("a{{b");
  REQUIRE(escaped.elements().size() == 1);
  CHECK(escaped.elements()[0] == TemplateElement{Literal{"a{b"}});
  CHECK(escaped.arity() == 0);

  const Template both = parse_template("{{}}");
  REQUIRE(both.elements().size() == 1);
  CHECK(both.elements()[0] == TemplateElement{Literal{"{}"}});

  const Template multi = parse_template("a{}b{}c");
  CHECK(multi.arity() == 2);
  REQUIRE(multi.elements().size() == 5);
}

TEST_CASE("parse: unbalanced braces carry the offending column") {
  CHECK(column_of_parse_error("a{b") == 1);
  CHECK(column_of_parse_error("}x") == 0);
  CHECK(column_of_parse_error("Hello {") == 6);
  CHECK(column_of_parse_error("x}") == 1);
}

TEST_CASE("round trip: rendering a parsed template reproduces the input") {
  for (const std::string text :
       {"Hello {}", "", "a{{b", "{{}}", "{}{}{}", "x {} y {{z}} {}"}) {
    CHECK(render_template(parse_template(text)) == text);
  }

  // property over randomly generated valid template texts
  std::mt19937 rng(31);
  const std::vector<std::string> tokens = {"{}", "{{", "}}", "a", "bc", " ", "0"};
  std::uniform_int_distribution<std::size_t> n_tokens(0, 12);
  std::uniform_int_distribution<std::size_t> pick(0, tokens.size() - 1);
  for (int round = 0; round < 300; ++round) {
    std::string text;
    const std::size_t n = n_tokens(rng);
    for (std::size_t i = 0; i < n; ++i) {
      text += tokens[pick(rng)];
    }
    CHECK(render_template(parse_template(text)) == text);
  }
}

// --- dynamic encoding (hazards intact) ---

TEST_CASE("dynamic: substitutes arguments in order") {
  CHECK(format_dynamic(hello_template(), {"World"}) == "Hello World");
  CHECK(format_dynamic(Template({Hole{}, Literal{" and "}, Hole{}}), {1, 2}) ==
        "1 and 2");
}

TEST_CASE("dynamic: too few arguments aborts with TOO_FEW_ARGS") {
  CHECK(fault_code_of([] { format_dynamic(hello_template(), {}); }) ==
        FaultCode::TooFewArgs);
}

TEST_CASE("dynamic: extra arguments are silently ignored") {
  CHECK(format_dynamic(hello_template(), {"World", "Again"}) == "Hello World");
}

TEST_CASE("dynamic: an n-hole template consumes exactly the first n args") {
  std::mt19937 rng(17);
  for (int round = 0; round < 100; ++round) {
    const Template tpl({Hole{}, Literal{","}, Hole{}});
    const int a = testsupport::random_int(rng);
    const int b = testsupport::random_int(rng);
    const int ignored = testsupport::random_int(rng);
    CHECK(format_dynamic(tpl, {a, b, ignored}) ==
          std::to_string(a) + "," + std::to_string(b));
  }
}

// --- checked dynamic encoding ---

TEST_CASE("checked: agrees with dynamic when the arity matches") {
  const auto result = format_checked(hello_template(), {"World"});
  REQUIRE(std::holds_alternative<std::string>(result));
  CHECK(std::get<std::string>(result) == "Hello World");
  CHECK(std::get<std::string>(result) ==
        format_dynamic(hello_template(), {"World"}));
}

TEST_CASE("checked: rejects mismatches in both directions") {
  CHECK(format_checked(hello_template(), {}) ==
        CheckedFormatResult{ArityError{1, 0}});
  CHECK(format_checked(hello_template(), {"World", "Again"}) ==
        CheckedFormatResult{ArityError{1, 2}});
}

// --- static (parallel-list) encoding ---

TEST_CASE("static: canonical greeting example formats Hello World") {
  const auto tpl = static_list(StaticLiteral{"Hello "}, StaticHole{});
  CHECK(format_static(tpl, static_list(std::string("World"))) == "Hello World");
}

TEST_CASE("static: empty template formats to the empty string") {
  CHECK(format_static(static_list(), static_list()) == "");
}

TEST_CASE("static: mixed argument types go through the shared stringifier") {
  const auto tpl = static_list(StaticLiteral{"n="}, StaticHole{},
                               StaticLiteral{" s="}, StaticHole{});
  CHECK(format_static(tpl, static_list(42, std::string("x"))) == "n=42 s=x");
}

TEST_CASE("static: to_template forgets the shape faithfully") {
  const auto tpl = static_list(StaticLiteral{"a"}, StaticHole{}, StaticLiteral{"b"});
  const Template dyn = to_template(tpl);
  CHECK(dyn.arity() == 1);
  CHECK(render_template(dyn) == "a{}b");
}

TEST_CASE("differential: the three encodings agree across the shape family") {
  std::mt19937 rng(4242);
  CHECK(testsupport::differential_family_mismatches(rng, 25) == 0);
}
