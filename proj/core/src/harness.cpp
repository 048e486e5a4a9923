#include "stella/harness.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "stella/interp.hpp"
#include "stella/parser.hpp"

namespace fs = std::filesystem;

namespace stella {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw CorpusError("cannot read file: " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Report check_source(const std::string& source, const std::string& path,
                    TypeCheckOptions opts) {
  Report r;
  r.path = path;
  try {
    Program p = parse_program(source);
    typecheck_program(p, opts);
  } catch (const ParseException& ex) {
    r.status = Report::Status::ParseError;
    r.message = ex.error().message;
    r.span = ex.error().span;
  } catch (const TypeError& ex) {
    r.status = Report::Status::TypeError;
    r.tag = ex.diagnostic().tag;
    r.message = ex.diagnostic().message;
    r.span = ex.diagnostic().span;
  }
  return r;
}

std::string outcome_to_string(const Outcome& outcome) {
  switch (outcome.kind) {
    case Outcome::Kind::Normal:
      return value_to_string(outcome.value);
    case Outcome::Kind::Thrown:
      return "uncaught exception: " + value_to_string(outcome.value);
    case Outcome::Kind::Panicked:
      return "panic!";
    case Outcome::Kind::RuntimeError:
      return "runtime error: " + outcome.error;
  }
  return "";
}

std::string HarnessReport::summary_line() const {
  return "passed " + std::to_string(passed) + " / failed " +
         std::to_string(failed) + " / total " +
         std::to_string(passed + failed);
}

namespace {

std::vector<fs::path> stella_files(const fs::path& dir) {
  std::vector<fs::path> out;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".stella") {
      out.push_back(entry.path());
    }
  }
  return out;
}

std::vector<ErrorTag> read_tag_sidecar(const fs::path& case_path) {
  fs::path sidecar = case_path;
  sidecar.replace_extension(".tags");
  std::vector<ErrorTag> out;
  if (!fs::exists(sidecar)) return out;
  std::istringstream in(read_file(sidecar));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ErrorTag tag;
    if (!tag_from_name(line, tag)) {
      throw CorpusError("unknown tag '" + line + "' in " + sidecar.string());
    }
    out.push_back(tag);
  }
  return out;
}

CorpusCase make_run_case(const fs::path& file) {
  CorpusCase c;
  c.kind = CorpusCase::Kind::Run;
  c.path = file;
  fs::path expect = file;
  expect.replace_extension(".expect");
  if (!fs::exists(expect)) {
    throw CorpusError("missing sidecar " + expect.string());
  }
  std::istringstream in(read_file(expect));
  std::string line;
  std::string pending_input;
  bool have_input = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("input ", 0) == 0) {
      if (have_input) {
        throw CorpusError("input without output in " + expect.string());
      }
      pending_input = line.substr(6);
      have_input = true;
    } else if (line.rfind("output ", 0) == 0) {
      if (!have_input) {
        throw CorpusError("output without input in " + expect.string());
      }
      c.io.emplace_back(pending_input, line.substr(7));
      have_input = false;
    } else {
      throw CorpusError("malformed line in " + expect.string() + ": " + line);
    }
  }
  if (have_input || c.io.empty()) {
    throw CorpusError("incomplete expectations in " + expect.string());
  }
  return c;
}

void run_one(const CorpusCase& c, HarnessReport& report,
             std::uint64_t fuel) {
  CaseResult result;
  result.path = c.path.string();
  try {
    std::string source = read_file(c.path);
    switch (c.kind) {
      case CorpusCase::Kind::WellTyped: {
        Report r = check_source(source, result.path);
        result.passed = r.status == Report::Status::Ok;
        if (!result.passed) {
          result.detail = r.tag ? std::string(tag_name(*r.tag)) + ": "
                                : std::string("parse error: ");
          result.detail += r.message;
        }
        break;
      }
      case CorpusCase::Kind::IllTyped: {
        Report r = check_source(source, result.path);
        if (r.status != Report::Status::TypeError) {
          result.detail = "expected " + std::string(tag_name(c.expected_tag)) +
                          " but the program " +
                          (r.status == Report::Status::Ok ? "typechecked"
                                                          : "failed to parse");
          break;
        }
        bool acceptable = *r.tag == c.expected_tag;
        for (ErrorTag alt : c.alternative_tags) {
          acceptable = acceptable || *r.tag == alt;
        }
        result.passed = acceptable;
        if (!acceptable) {
          result.detail = "expected " + std::string(tag_name(c.expected_tag)) +
                          " but got " + tag_name(*r.tag);
        }
        break;
      }
      case CorpusCase::Kind::Run: {
        Report r = check_source(source, result.path);
        if (r.status != Report::Status::Ok) {
          result.detail = "does not typecheck: " + r.message;
          break;
        }
        Program p = parse_program(source);
        Interpreter interp(p, InterpOptions{fuel});
        result.passed = true;
        for (const auto& [input, expected] : c.io) {
          Outcome in_value = interp.eval_closed(parse_expr(input));
          if (in_value.kind != Outcome::Kind::Normal) {
            result.passed = false;
            result.detail = "input did not evaluate: " + input;
            break;
          }
          std::string got =
              outcome_to_string(interp.run_main(in_value.value));
          if (got != expected) {
            result.passed = false;
            result.detail =
                "input " + input + ": expected " + expected + " but got " + got;
            break;
          }
        }
        break;
      }
    }
  } catch (const FuelExhausted& ex) {
    result.passed = false;
    result.detail = ex.what();
  } catch (const std::exception& ex) {
    result.passed = false;
    result.detail = ex.what();
  }
  (result.passed ? report.passed : report.failed) += 1;
  report.results.push_back(std::move(result));
}

}  // namespace

std::vector<CorpusCase> scan_corpus(const fs::path& dir) {
  if (!fs::is_directory(dir)) {
    throw CorpusError("not a directory: " + dir.string());
  }
  std::vector<CorpusCase> cases;
  fs::path well = dir / "well-typed";
  if (fs::is_directory(well)) {
    for (const auto& f : stella_files(well)) {
      CorpusCase c;
      c.kind = CorpusCase::Kind::WellTyped;
      c.path = f;
      cases.push_back(std::move(c));
    }
  }
  fs::path ill = dir / "ill-typed";
  if (fs::is_directory(ill)) {
    for (const auto& entry : fs::directory_iterator(ill)) {
      if (!entry.is_directory()) {
        throw CorpusError("ill-typed cases must live under a tag directory: " +
                          entry.path().string());
      }
      ErrorTag tag;
      if (!tag_from_name(entry.path().filename().string(), tag)) {
        throw CorpusError("unknown tag directory: " + entry.path().string());
      }
      for (const auto& f : stella_files(entry.path())) {
        CorpusCase c;
        c.kind = CorpusCase::Kind::IllTyped;
        c.path = f;
        c.expected_tag = tag;
        c.alternative_tags = read_tag_sidecar(f);
        cases.push_back(std::move(c));
      }
    }
  }
  fs::path run = dir / "run";
  if (fs::is_directory(run)) {
    for (const auto& f : stella_files(run)) {
      cases.push_back(make_run_case(f));
    }
  }
  if (cases.empty()) {
    throw CorpusError("no corpus cases under " + dir.string());
  }
  std::sort(cases.begin(), cases.end(),
            [](const CorpusCase& a, const CorpusCase& b) {
              return a.path < b.path;
            });
  return cases;
}

HarnessReport run_corpus(const std::vector<CorpusCase>& cases,
                         std::uint64_t fuel) {
  HarnessReport report;
  for (const auto& c : cases) {
    run_one(c, report, fuel);
  }
  return report;
}

}  // namespace stella
