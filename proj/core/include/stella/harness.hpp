#ifndef STELLA_HARNESS_HPP
#define STELLA_HARNESS_HPP

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stella/error.hpp"
#include "stella/interp.hpp"
#include "stella/typecheck.hpp"

namespace stella {

struct Report {
  enum class Status { Ok, TypeError, ParseError, Runtime };
  Status status = Status::Ok;
  std::optional<ErrorTag> tag;
  std::string message;
  Span span;
  std::string path;
};

// Parses and typechecks one source text, folding outcomes into a Report.
Report check_source(const std::string& source, const std::string& path,
                    TypeCheckOptions opts = {});

std::string read_file(const std::filesystem::path& path);

struct CorpusCase {
  enum class Kind { WellTyped, IllTyped, Run };
  Kind kind = Kind::WellTyped;
  std::filesystem::path path;
  ErrorTag expected_tag{};
  // extra acceptable tags from an optional .tags sidecar
  std::vector<ErrorTag> alternative_tags;
  // input/output pairs from the .expect sidecar, verbatim
  std::vector<std::pair<std::string, std::string>> io;
};

struct CaseResult {
  std::string path;
  bool passed = false;
  std::string detail;
};

struct HarnessReport {
  std::vector<CaseResult> results;
  int passed = 0;
  int failed = 0;

  std::string summary_line() const;
};

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Layout: well-typed/**.stella, ill-typed/<TAG>/**.stella,
// run/<name>.stella with sidecar <name>.expect (`input N` / `output V`
// lines). Cases come back sorted by path. Throws CorpusError when the
// layout is malformed.
std::vector<CorpusCase> scan_corpus(const std::filesystem::path& dir);

HarnessReport run_corpus(const std::vector<CorpusCase>& cases,
                         std::uint64_t fuel = 10'000'000);

// What `stella run` prints for an Outcome; also used to compare against
// `output` expectations.
std::string outcome_to_string(const Outcome& outcome);

}  // namespace stella

#endif  // STELLA_HARNESS_HPP
