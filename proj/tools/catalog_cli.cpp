// catalog-cli - demo front door for the pattern catalog plus the
// negative-compilation (misuse corpus) harness.
//
// Exit codes: 0 success, 1 runtime hazard demonstrated, 2 usage error.

#include <CLI11.hpp>

#include <cstddef>
#include <iostream>
#include <string>
#include <vector>

#include <typed_patterns/demo_events.hpp>
#include <typed_patterns/file_typestate.hpp>
#include <typed_patterns/format_dynamic.hpp>
#include <typed_patterns/misuse.hpp>
#include <typed_patterns/syscalls.hpp>
#include <typed_patterns/witness.hpp>

namespace {

std::vector<patterns::format::FormatArg> split_csv(const std::string& csv) {
  std::vector<patterns::format::FormatArg> args;
  if (csv.empty()) {
    return args;
  }
  std::size_t begin = 0;
  for (;;) {
    const std::size_t comma = csv.find(',', begin);
    if (comma == std::string::npos) {
      args.emplace_back(csv.substr(begin));
      return args;
    }
    args.emplace_back(csv.substr(begin, comma - begin));
    begin = comma + 1;
  }
}

int run_format(const std::string& template_text, const std::string& csv) {
  patterns::format::Template tpl;
  try {
    tpl = patterns::format::parse_template(template_text);
  } catch (const patterns::format::ParseError& err) {
    std::cerr << "template parse error: " << err.what() << "\n";
    return 2;
  }
  const auto result = patterns::format::format_checked(tpl, split_csv(csv));
  if (const auto* arity = std::get_if<patterns::format::ArityError>(&result)) {
    std::cerr << "arity error: expected " << arity->expected << ", got "
              << arity->got << "\n";
    return 2;
  }
  std::cout << std::get<std::string>(result) << "\n";
  return 0;
}

int run_file(const std::string& path, const std::string& content,
             std::size_t chunk_size) {
  patterns::sys::FakeFs fs;
  fs.seed(path, content, chunk_size);
  const std::vector<patterns::sys::Bytes> chunks = patterns::file::drain(fs, path);
  for (std::size_t i = 0; i < chunks.size(); ++i) {
    std::cout << "chunk " << i << ": " << chunks[i] << "\n";
  }
  for (const std::string& line : fs.trace_lines()) {
    std::cout << line << "\n";
  }
  return 0;
}

int run_events(bool empty) {
  if (empty) {
    return 0;
  }
  for (const patterns::events::Invocation& invocation :
       patterns::events::demo::run_typed_demo_scenario()) {
    std::cout << patterns::events::render(invocation) << "\n";
  }
  return 0;
}

int run_admin(const std::string& name) {
  static const std::vector<patterns::witness::User> fixture = {
      {"alice", true},
      {"bob", false},
  };
  for (const patterns::witness::User& user : fixture) {
    if (user.name == name) {
      std::cout << patterns::witness::route_admin_panel(user).body << "\n";
      return 0;
    }
  }
  std::cerr << "unknown user: " << name << "\n";
  return 2;
}

std::string first_line(const std::string& text) {
  return text.substr(0, text.find('\n'));
}

patterns::misuse::HarnessConfig make_config(const std::string& compiler,
                                            std::vector<std::string> includes) {
  patterns::misuse::HarnessConfig config;
  config.compiler = compiler;
  config.include_dirs =
      includes.empty() ? std::vector<std::string>{TP_SOURCE_INCLUDE_DIR}
                       : std::move(includes);
  return config;
}

int run_misuse(const std::string& dir, const patterns::misuse::HarnessConfig& config) {
  const auto entries = patterns::misuse::load_corpus(dir);
  if (entries.empty()) {
    std::cerr << "warning: no corpus entries found in " << dir << "\n";
  }
  const patterns::misuse::CorpusReport report =
      patterns::misuse::run_corpus(entries, config);
  for (const patterns::misuse::EntryResult& result : report.results) {
    std::cout << result.id << ": " << to_string(result.outcome) << "\n";
    if (result.outcome != patterns::misuse::Outcome::RejectedAsExpected) {
      std::cout << "  " << first_line(result.diagnostic) << "\n";
    }
  }
  using patterns::misuse::Outcome;
  std::cout << "summary: total=" << report.total()
            << " rejected-as-expected=" << report.count(Outcome::RejectedAsExpected)
            << " compiled-unexpectedly=" << report.count(Outcome::CompiledUnexpectedly)
            << " wrong-diagnostic=" << report.count(Outcome::WrongDiagnostic) << "\n";
  return report.all_rejected() ? 0 : 1;
}

int run_misuse_sanity(const std::string& dir,
                      const patterns::misuse::HarnessConfig& config) {
  const auto entries = patterns::misuse::load_corpus(dir);
  if (entries.empty()) {
    std::cerr << "warning: no corpus entries found in " << dir << "\n";
  }
  const patterns::misuse::SanityReport report =
      patterns::misuse::run_sanity(entries, config);
  std::size_t clean = 0;
  for (const patterns::misuse::SanityResult& result : report.results) {
    std::cout << result.id << ": "
              << (result.compiles_clean ? "compiles-clean" : "still-failing") << "\n";
    if (result.compiles_clean) {
      ++clean;
    } else {
      std::cout << "  " << first_line(result.diagnostic) << "\n";
    }
  }
  std::cout << "summary: total=" << report.total() << " clean=" << clean << "\n";
  return report.all_clean() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"demo front door for the typed API-design pattern catalog"};
  app.require_subcommand(1);
  int exit_code = 0;

  // format --template <s> --args <csv>
  auto* format_cmd = app.add_subcommand("format", "format a template with the checked encoding");
  auto template_text = std::make_shared<std::string>();
  auto args_csv = std::make_shared<std::string>();
  format_cmd->add_option("--template", *template_text, "template text, {} per hole")->required();
  format_cmd->add_option("--args", *args_csv, "comma-separated arguments");
  format_cmd->callback([&exit_code, template_text, args_csv] {
    exit_code = run_format(*template_text, *args_csv);
  });

  // file --path <s> --content <s> --chunk-size <n>
  auto* file_cmd = app.add_subcommand("file", "drain a seeded file and print the syscall trace");
  auto file_path = std::make_shared<std::string>();
  auto file_content = std::make_shared<std::string>();
  auto chunk_size = std::make_shared<std::size_t>(0);
  file_cmd->add_option("--path", *file_path, "fixture path")->required();
  file_cmd->add_option("--content", *file_content, "fixture content bytes")->required();
  file_cmd->add_option("--chunk-size", *chunk_size, "bytes per read")
      ->required()
      ->check(CLI::PositiveNumber);
  file_cmd->callback([&exit_code, file_path, file_content, chunk_size] {
    exit_code = run_file(*file_path, *file_content, *chunk_size);
  });

  // events [--empty]
  auto* events_cmd = app.add_subcommand("events", "replay the event scenario and print the log");
  auto empty_scenario = std::make_shared<bool>(false);
  events_cmd->add_flag("--empty", *empty_scenario, "run an empty scenario");
  events_cmd->callback([&exit_code, empty_scenario] {
    exit_code = run_events(*empty_scenario);
  });

  // admin --user <s>
  auto* admin_cmd = app.add_subcommand("admin", "render the admin route for a fixture user");
  auto user_name = std::make_shared<std::string>();
  admin_cmd->add_option("--user", *user_name, "fixture user name")->required();
  admin_cmd->callback([&exit_code, user_name] { exit_code = run_admin(*user_name); });

  // misuse run <dir> / misuse sanity <dir>
  auto* misuse_cmd = app.add_subcommand("misuse", "negative-compilation harness");
  misuse_cmd->require_subcommand(1);
  auto corpus_dir = std::make_shared<std::string>();
  auto compiler = std::make_shared<std::string>("clang++");
  auto includes = std::make_shared<std::vector<std::string>>();

  auto* run_cmd = misuse_cmd->add_subcommand("run", "expect every entry to be rejected");
  run_cmd->add_option("dir", *corpus_dir, "corpus directory")->required();
  run_cmd->add_option("--compiler", *compiler, "compiler to invoke");
  run_cmd->add_option("--include", *includes, "extra include directory");
  run_cmd->callback([&exit_code, corpus_dir, compiler, includes] {
    exit_code = run_misuse(*corpus_dir, make_config(*compiler, *includes));
  });

  auto* sanity_cmd = misuse_cmd->add_subcommand(
      "sanity", "expect every entry to compile once its marked line is removed");
  sanity_cmd->add_option("dir", *corpus_dir, "corpus directory")->required();
  sanity_cmd->add_option("--compiler", *compiler, "compiler to invoke");
  sanity_cmd->add_option("--include", *includes, "extra include directory");
  sanity_cmd->callback([&exit_code, corpus_dir, compiler, includes] {
    exit_code = run_misuse_sanity(*corpus_dir, make_config(*compiler, *includes));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return 2;
  } catch (const patterns::MisuseFault& fault) {
    std::cerr << "misuse fault: " << fault.what() << "\n";
    return 1;
  } catch (const patterns::FixtureError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return exit_code;
}
