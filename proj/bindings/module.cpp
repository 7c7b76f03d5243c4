#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <any>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <typed_patterns/demo_events.hpp>
#include <typed_patterns/event_registry.hpp>
#include <typed_patterns/file_checked.hpp>
#include <typed_patterns/file_naive.hpp>
#include <typed_patterns/file_typestate.hpp>
#include <typed_patterns/format_dynamic.hpp>
#include <typed_patterns/misuse.hpp>
#include <typed_patterns/syscalls.hpp>
#include <typed_patterns/witness.hpp>

namespace py = pybind11;
using namespace patterns;

namespace {

// format_checked returns ArityError as a value; python callers get it as an
// exception instead.
class ArityErrorException : public std::runtime_error {
 public:
  explicit ArityErrorException(const format::ArityError& err)
      : std::runtime_error("expected " + std::to_string(err.expected) +
                           " arguments, got " + std::to_string(err.got)) {}
};

std::vector<format::FormatArg> to_format_args(const py::sequence& args) {
  std::vector<format::FormatArg> out;
  out.reserve(py::len(args));
  for (const py::handle& item : args) {
    out.emplace_back(py::str(item).cast<std::string>());
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Typed API-design pattern catalog: runtime side of the encodings";

  py::register_exception<MisuseFault>(m, "MisuseFault");
  py::register_exception<FixtureError>(m, "FixtureError");
  py::register_exception<format::ParseError>(m, "ParseError");
  py::register_exception<ArityErrorException>(m, "ArityError");

  // --- syscall simulator ---

  py::class_<sys::Descriptor>(m, "Descriptor")
      .def_readonly("id", &sys::Descriptor::id)
      .def("__repr__", [](const sys::Descriptor& d) {
        return "Descriptor(id=" + std::to_string(d.id) + ")";
      });

  py::class_<sys::FakeFs>(m, "FakeFs")
      .def(py::init<>())
      .def("seed", &sys::FakeFs::seed, py::arg("path"), py::arg("content"),
           py::arg("chunk_size"))
      .def("sys_open", &sys::FakeFs::sys_open, py::arg("path"))
      .def("sys_eof", &sys::FakeFs::sys_eof, py::arg("descriptor"))
      .def(
          "sys_read",
          [](sys::FakeFs& fs, sys::Descriptor d) { return py::bytes(fs.sys_read(d)); },
          py::arg("descriptor"))
      .def("sys_close", &sys::FakeFs::sys_close, py::arg("descriptor"))
      .def("trace_lines", &sys::FakeFs::trace_lines)
      .def_property_readonly("chunk_size", &sys::FakeFs::chunk_size);

  // --- file state machine encodings ---

  py::class_<file::NaiveFile>(m, "NaiveFile")
      .def_static("open", &file::NaiveFile::open, py::arg("fs"), py::arg("path"),
                  py::keep_alive<0, 1>())
      .def("eof", &file::NaiveFile::eof)
      .def("read", [](file::NaiveFile& f) { return py::bytes(f.read()); })
      .def("close", &file::NaiveFile::close);

  py::class_<file::CheckedFile> checked(m, "CheckedFile");
  py::enum_<file::CheckedFile::State>(checked, "State")
      .value("Read", file::CheckedFile::State::Read)
      .value("Eof", file::CheckedFile::State::Eof)
      .value("Close", file::CheckedFile::State::Close);
  checked
      .def_static("open", &file::CheckedFile::open, py::arg("fs"), py::arg("path"),
                  py::keep_alive<0, 1>())
      .def("read",
           [](file::CheckedFile& f) -> std::optional<py::bytes> {
             if (auto chunk = f.read()) {
               return py::bytes(*chunk);
             }
             return std::nullopt;
           })
      .def("close", &file::CheckedFile::close)
      .def_property_readonly("state", &file::CheckedFile::state);

  m.def(
      "drain",
      [](sys::FakeFs& fs, const std::string& path) {
        py::list chunks;
        for (const sys::Bytes& chunk : file::drain(fs, path)) {
          chunks.append(py::bytes(chunk));
        }
        return chunks;
      },
      py::arg("fs"), py::arg("path"),
      "open, read every chunk, close; returns the chunks");

  // --- formatter ---

  py::class_<format::Template>(m, "Template")
      .def_property_readonly("arity", &format::Template::arity)
      .def("render", &format::render_template)
      .def("__repr__", [](const format::Template& tpl) {
        return "Template(\"" + format::render_template(tpl) + "\")";
      });

  m.def("parse_template", &format::parse_template, py::arg("text"));
  m.def("render_template", &format::render_template, py::arg("template"));
  m.def(
      "format_dynamic",
      [](const format::Template& tpl, const py::sequence& args) {
        return format::format_dynamic(tpl, to_format_args(args));
      },
      py::arg("template"), py::arg("args"),
      "hazardous encoding: aborts on missing args, ignores extras");
  m.def(
      "format_checked",
      [](const format::Template& tpl, const py::sequence& args) {
        auto result = format::format_checked(tpl, to_format_args(args));
        if (const auto* err = std::get_if<format::ArityError>(&result)) {
          throw ArityErrorException(*err);
        }
        return std::get<std::string>(result);
      },
      py::arg("template"), py::arg("args"),
      "raises ArityError on any template/argument length mismatch");

  // --- event registry ---

  py::class_<events::StringRegistry>(m, "StringRegistry")
      .def(py::init<>())
      .def(
          "register",
          [](events::StringRegistry& r, const std::string& name, py::function f) {
            r.register_listener(name, [f](const std::any& payload) {
              f(std::any_cast<const py::object&>(payload));
            });
          },
          py::arg("name"), py::arg("listener"))
      .def(
          "trigger",
          [](const events::StringRegistry& r, const std::string& name,
             py::object payload) { r.trigger(name, std::any(std::move(payload))); },
          py::arg("name"), py::arg("payload"));

  m.def("run_typed_demo_scenario", [] {
    std::vector<std::string> lines;
    for (const events::Invocation& invocation : events::demo::run_typed_demo_scenario()) {
      lines.push_back(events::render(invocation));
    }
    return lines;
  });

  // --- witness ---

  py::class_<witness::User>(m, "User")
      .def(py::init<std::string, bool>(), py::arg("name"), py::arg("admin") = false)
      .def_readwrite("name", &witness::User::name)
      .def_readwrite("admin", &witness::User::admin);

  py::class_<witness::AdminToken>(m, "AdminToken");  // only try_admin constructs

  m.def("is_admin", &witness::is_admin, py::arg("user"));
  m.def("try_admin", &witness::try_admin, py::arg("user"));
  m.def(
      "render_admin_panel",
      [](const witness::AdminToken& token) { return witness::render_admin_panel(token).body; },
      py::arg("token"));
  m.def("render_404", [] { return witness::render_404().body; });
  m.def(
      "route_admin_panel",
      [](const witness::User& user) { return witness::route_admin_panel(user).body; },
      py::arg("user"));
}
