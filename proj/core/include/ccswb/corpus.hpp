#pragma once

// Bundled models and the expected-results manifest that ties them to the
// reference verdicts.
//
// Manifest format: one entry per line, tab-separated fields
//
//   model-file  command  args  verdict  [witness]  [state counts]
//
// `command` is eq (args "P Q") or mc (args "P FORMULA"; the formula is
// everything after the first space). A missing witness or state-count field,
// or a single '-', means "not recorded". State counts are space-separated,
// one per explored process. Blank lines and lines starting with '#' are
// ignored.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ccswb/report.hpp"
#include "ccswb/semantics.hpp"

namespace ccswb {

struct ManifestEntry {
  std::size_t line = 0;
  std::string model_file;
  std::string command;
  std::vector<std::string> args;
  Verdict expected_verdict = Verdict::Ok;
  std::optional<std::string> expected_witness;
  std::vector<std::size_t> expected_states;

  // "manifest:<line> <model> <command> <args>"
  std::string id() const;
};

// Throws SourceError on a malformed line.
std::vector<ManifestEntry> parse_manifest(std::string_view text);

struct EntryOutcome {
  ManifestEntry entry;
  bool passed = false;
  std::string detail;
  std::optional<RunReport> report;
};

struct ManifestReport {
  std::vector<EntryOutcome> outcomes;

  bool passed() const;
  std::size_t failures() const;
};

// Throws ccswb::Error when the file cannot be read.
std::string read_text_file(const std::filesystem::path& path);

// Replays every entry of <corpus_dir>/manifest through the library. A
// missing manifest throws; a missing model file fails its entry.
ManifestReport verify_manifest(const std::filesystem::path& corpus_dir,
                               const ExploreLimits& limits = {});

}  // namespace ccswb
