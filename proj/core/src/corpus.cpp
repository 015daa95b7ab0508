#include "ccswb/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "ccswb/errors.hpp"
#include "ccswb/parser.hpp"

namespace ccswb {

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t end = text.find(sep, start);
    out.emplace_back(text.substr(start, end == std::string_view::npos ? end : end - start));
    if (end == std::string_view::npos) return out;
    start = end + 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

bool recorded(std::string_view field) { return !field.empty() && field != "-"; }

std::string join_sizes(const std::vector<std::size_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i != 0) out += ' ';
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace

std::string ManifestEntry::id() const {
  std::string out = "manifest:" + std::to_string(line) + " " + model_file + " " + command;
  for (const auto& a : args) out += " " + a;
  return out;
}

std::vector<ManifestEntry> parse_manifest(std::string_view text) {
  std::vector<ManifestEntry> entries;
  std::size_t line_no = 0;
  for (const std::string& raw : split(text, '\n')) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> fields = split(line, '\t');
    if (fields.size() < 4 || fields.size() > 6)
      throw SourceError(line_no, 1, "manifest entry needs 4 to 6 tab-separated fields");
    for (auto& f : fields) f = std::string(trim(f));

    ManifestEntry e;
    e.line = line_no;
    e.model_file = fields[0];
    e.command = fields[1];
    const std::string& args = fields[2];
    const std::size_t space = args.find(' ');
    if (e.command == "eq") {
      e.args = split(args, ' ');
      e.args.erase(std::remove(e.args.begin(), e.args.end(), std::string()), e.args.end());
      if (e.args.size() != 2) throw SourceError(line_no, 1, "eq expects two process names");
    } else if (e.command == "mc") {
      if (space == std::string::npos)
        throw SourceError(line_no, 1, "mc expects a process name and a formula");
      e.args = {args.substr(0, space), std::string(trim(std::string_view(args).substr(space + 1)))};
    } else {
      throw SourceError(line_no, 1, "unknown manifest command '" + e.command + "'",
                        {"eq", "mc"});
    }
    auto verdict = parse_verdict(fields[3]);
    if (!verdict) throw SourceError(line_no, 1, "unknown verdict '" + fields[3] + "'");
    e.expected_verdict = *verdict;
    if (fields.size() > 4 && recorded(fields[4])) e.expected_witness = fields[4];
    if (fields.size() > 5 && recorded(fields[5])) {
      for (const auto& n : split(fields[5], ' ')) {
        if (n.empty()) continue;
        if (!std::all_of(n.begin(), n.end(), [](char c) { return c >= '0' && c <= '9'; }))
          throw SourceError(line_no, 1, "state count must be a number");
        e.expected_states.push_back(std::stoul(n));
      }
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

bool ManifestReport::passed() const { return failures() == 0; }

std::size_t ManifestReport::failures() const {
  return static_cast<std::size_t>(std::count_if(
      outcomes.begin(), outcomes.end(), [](const EntryOutcome& o) { return !o.passed; }));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ManifestReport verify_manifest(const std::filesystem::path& corpus_dir,
                               const ExploreLimits& limits) {
  const auto entries = parse_manifest(read_text_file(corpus_dir / "manifest"));
  std::map<std::string, Model> models;
  ManifestReport report;
  for (const auto& entry : entries) {
    EntryOutcome outcome;
    outcome.entry = entry;
    try {
      auto it = models.find(entry.model_file);
      if (it == models.end()) {
        const auto path = corpus_dir / entry.model_file;
        if (!std::filesystem::exists(path)) throw Error("missing model file '" + path.string() + "'");
        it = models.emplace(entry.model_file, parse_model(read_text_file(path))).first;
      }
      RunReport run = entry.command == "eq"
                          ? run_equivalence(it->second, entry.args[0], entry.args[1], limits).report
                          : run_model_check(it->second, entry.args[0],
                                            parse_formula(entry.args[1]), limits)
                                .report;
      std::vector<std::string> problems;
      if (run.verdict != entry.expected_verdict)
        problems.push_back("verdict " + std::string(to_string(run.verdict)) + ", expected " +
                           std::string(to_string(entry.expected_verdict)));
      if (run.witness != entry.expected_witness)
        problems.push_back("witness " + run.witness.value_or("-") + ", expected " +
                           entry.expected_witness.value_or("-"));
      if (!entry.expected_states.empty()) {
        std::vector<std::size_t> got;
        if (run.states_a) got.push_back(*run.states_a);
        if (run.states_b) got.push_back(*run.states_b);
        if (got != entry.expected_states)
          problems.push_back("states " + join_sizes(got) + ", expected " +
                             join_sizes(entry.expected_states));
      }
      outcome.passed = problems.empty();
      for (const auto& p : problems) {
        if (!outcome.detail.empty()) outcome.detail += "; ";
        outcome.detail += p;
      }
      outcome.report = std::move(run);
    } catch (const Error& e) {
      outcome.passed = false;
      outcome.detail = e.what();
    }
    report.outcomes.push_back(std::move(outcome));
  }
  return report;
}

}  // namespace ccswb
