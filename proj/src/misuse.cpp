#include <typed_patterns/misuse.hpp>

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include <sys/wait.h>

#include <typed_patterns/fault.hpp>

namespace patterns::misuse {

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

std::string shell_quote(const std::string& s) {
  std::string quoted = "'";
  for (const char c : s) {
    if (c == '\'') {
      quoted += "'\\''";
    } else {
      quoted += c;
    }
  }
  quoted += "'";
  return quoted;
}

RunResult run_command(const std::string& command) {
  RunResult result;
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  if (pipe == nullptr) {
    throw FixtureError("failed to spawn: " + command);
  }
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), n);
  }
  const int status = pclose(pipe);
  if (WIFEXITED(status)) {
    result.exit_code = WEXITSTATUS(status);
  }
  return result;
}

std::string compile_command(const HarnessConfig& config, const MisuseEntry& entry,
                            const fs::path& source) {
  std::ostringstream cmd;
  cmd << config.compiler << " -std=c++20 -fsyntax-only";
  for (const std::string& dir : config.include_dirs) {
    cmd << " -I" << shell_quote(dir);
  }
  for (const std::string& flag : entry.extra_flags) {
    cmd << " " << flag;
  }
  cmd << " " << shell_quote(source.string());
  return cmd.str();
}

void require_compiler(const HarnessConfig& config) {
  const RunResult probe = run_command(shell_quote(config.compiler) + " --version");
  if (probe.exit_code != 0) {
    throw FixtureError("compiler not runnable: " + config.compiler);
  }
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw FixtureError("cannot read corpus entry: " + path.string());
  }
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// Trailing-comment value of `// KEY: value` on one line, if present.
std::optional<std::string> header_value(const std::string& line, const std::string& key) {
  const std::string prefix = "// " + key + ":";
  if (line.rfind(prefix, 0) != 0) {
    return std::nullopt;
  }
  std::string value = line.substr(prefix.size());
  const auto begin = value.find_first_not_of(" \t");
  if (begin == std::string::npos) {
    return std::string{};
  }
  const auto end = value.find_last_not_of(" \t\r");
  return value.substr(begin, end - begin + 1);
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> split_flags(const std::string& text) {
  std::vector<std::string> flags;
  std::istringstream in(text);
  std::string flag;
  while (in >> flag) {
    flags.push_back(flag);
  }
  return flags;
}

fs::path sanity_scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "typed-patterns-misuse";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

std::size_t CorpusReport::count(Outcome outcome) const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(),
                    [outcome](const EntryResult& r) { return r.outcome == outcome; }));
}

bool SanityReport::all_clean() const {
  return std::all_of(results.begin(), results.end(),
                     [](const SanityResult& r) { return r.compiles_clean; });
}

std::vector<MisuseEntry> load_corpus(const fs::path& dir) {
  if (!fs::is_directory(dir)) {
    throw FixtureError("misuse corpus directory not found: " + dir.string());
  }
  std::vector<MisuseEntry> entries;
  for (const fs::directory_entry& file : fs::directory_iterator(dir)) {
    if (!file.is_regular_file() || file.path().extension() != ".cpp") {
      continue;
    }
    MisuseEntry entry;
    entry.source = file.path();
    const std::string stem = file.path().stem().string();
    entry.id = stem.substr(0, stem.find('_'));

    for (const std::string& line : split_lines(read_file(file.path()))) {
      if (auto marker = header_value(line, "EXPECT")) {
        entry.expected_marker = *marker;
      } else if (auto flags = header_value(line, "FLAGS")) {
        entry.extra_flags = split_flags(*flags);
      } else {
        break;  // headers come first
      }
    }
    if (entry.expected_marker.empty()) {
      throw FixtureError("corpus entry has no '// EXPECT:' header: " +
                         file.path().string());
    }
    entries.push_back(std::move(entry));
  }
  std::sort(entries.begin(), entries.end(),
            [](const MisuseEntry& a, const MisuseEntry& b) { return a.id < b.id; });
  return entries;
}

CorpusReport run_corpus(const std::vector<MisuseEntry>& entries,
                        const HarnessConfig& config) {
  require_compiler(config);
  CorpusReport report;
  for (const MisuseEntry& entry : entries) {
    const RunResult run = run_command(compile_command(config, entry, entry.source));
    EntryResult result{entry.id, Outcome::CompiledUnexpectedly, run.output};
    if (run.exit_code != 0) {
      result.outcome = run.output.find(entry.expected_marker) != std::string::npos
                           ? Outcome::RejectedAsExpected
                           : Outcome::WrongDiagnostic;
    }
    report.results.push_back(std::move(result));
  }
  return report;
}

SanityReport run_sanity(const std::vector<MisuseEntry>& entries,
                        const HarnessConfig& config) {
  require_compiler(config);
  const fs::path scratch = sanity_scratch_dir();
  SanityReport report;
  for (const MisuseEntry& entry : entries) {
    const fs::path stripped = scratch / entry.source.filename();
    {
      std::ofstream out(stripped, std::ios::binary | std::ios::trunc);
      for (const std::string& line : split_lines(read_file(entry.source))) {
        if (line.find("// MISUSE") == std::string::npos) {
          out << line << '\n';
        }
      }
    }
    const RunResult run = run_command(compile_command(config, entry, stripped));
    report.results.push_back({entry.id, run.exit_code == 0, run.output});
  }
  return report;
}

}  // namespace patterns::misuse
