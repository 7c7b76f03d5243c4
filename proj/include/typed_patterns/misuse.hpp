#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

// Negative-compilation harness. Each corpus entry is a small standalone
// program that misuses one of the safe encodings and must therefore be
// rejected by the compiler, with a pinned diagnostic substring. Removing the
// entry's single `// MISUSE` line must leave a program that compiles clean
// (sanity mode), proving the entry isolates exactly one misuse.
//
// Entry file format:
//   // EXPECT: <diagnostic substring>
//   // FLAGS: <extra compiler flags>        (optional)
//   ...program text, one line ending in  // MISUSE

namespace patterns::misuse {

struct MisuseEntry {
  std::string id;                        // filename stem up to the first '_'
  std::filesystem::path source;
  std::string expected_marker;
  std::vector<std::string> extra_flags;
};

enum class Outcome { RejectedAsExpected, CompiledUnexpectedly, WrongDiagnostic };

constexpr const char* to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::RejectedAsExpected: return "rejected-as-expected";
    case Outcome::CompiledUnexpectedly: return "compiled-unexpectedly";
    case Outcome::WrongDiagnostic: return "wrong-diagnostic";
  }
  return "unknown";
}

struct EntryResult {
  std::string id;
  Outcome outcome = Outcome::CompiledUnexpectedly;
  std::string diagnostic;  // full compiler output
};

struct CorpusReport {
  std::vector<EntryResult> results;  // sorted by id

  std::size_t total() const { return results.size(); }
  std::size_t count(Outcome outcome) const;
  bool all_rejected() const { return count(Outcome::RejectedAsExpected) == total(); }
};

struct SanityResult {
  std::string id;
  bool compiles_clean = false;
  std::string diagnostic;
};

struct SanityReport {
  std::vector<SanityResult> results;  // sorted by id

  std::size_t total() const { return results.size(); }
  bool all_clean() const;
};

struct HarnessConfig {
  // The consumed-state entry (S2) relies on clang's consumed-object
  // analysis, so the harness drives clang++ by default.
  std::string compiler = "clang++";
  std::vector<std::string> include_dirs;
};

// Scans a directory for *.cpp entries, sorted by id. Throws FixtureError on
// a missing directory or an entry without an EXPECT header.
std::vector<MisuseEntry> load_corpus(const std::filesystem::path& dir);

// Compiles each entry in isolation (syntax-only). An entry passes iff
// compilation fails and the diagnostic contains its expected marker.
// Throws FixtureError if the configured compiler cannot be run.
CorpusReport run_corpus(const std::vector<MisuseEntry>& entries,
                        const HarnessConfig& config);

// Re-compiles each entry with its marked line removed, expecting success.
SanityReport run_sanity(const std::vector<MisuseEntry>& entries,
                        const HarnessConfig& config);

}  // namespace patterns::misuse
