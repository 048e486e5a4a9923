#include <CLI11.hpp>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <json.hpp>
#include <string>

#include "stella/harness.hpp"
#include "stella/interp.hpp"
#include "stella/parser.hpp"
#include "stella/typecheck.hpp"

namespace {

using nlohmann::ordered_json;

struct CommonFlags {
  bool no_gate = false;
  bool json = false;
  bool trace = false;
  std::uint64_t fuel = 10'000'000;
};

void print_diagnostic(const stella::Report& r, const CommonFlags& flags) {
  std::string tag = r.status == stella::Report::Status::ParseError
                        ? "SYNTAX_ERROR"
                        : stella::tag_name(*r.tag);
  if (flags.json) {
    ordered_json obj;
    obj["tag"] = tag;
    obj["message"] = r.message;
    obj["line"] = r.span.line;
    obj["column"] = r.span.col;
    obj["file"] = r.path;
    std::cout << obj.dump() << "\n";
    return;
  }
  std::cerr << tag << ": " << r.message << " at " << r.path << ":"
            << r.span.line << ":" << r.span.col << "\n";
}

stella::TypeCheckOptions check_options(const CommonFlags& flags) {
  stella::TypeCheckOptions opts;
  opts.gate_extensions = !flags.no_gate;
  opts.trace = flags.trace;
  opts.trace_out = flags.trace ? &std::cerr : nullptr;
  return opts;
}

int cmd_check(const std::string& path, const CommonFlags& flags) {
  std::string source;
  try {
    source = stella::read_file(path);
  } catch (const std::exception& ex) {
    std::cerr << ex.what() << "\n";
    return 3;
  }
  stella::Report r = stella::check_source(source, path, check_options(flags));
  switch (r.status) {
    case stella::Report::Status::Ok:
      std::cout << "OK\n";
      return 0;
    case stella::Report::Status::TypeError:
      print_diagnostic(r, flags);
      return 1;
    default:
      print_diagnostic(r, flags);
      return 2;
  }
}

int cmd_run(const std::string& path, const std::string& input,
            const CommonFlags& flags) {
  std::string source;
  try {
    source = stella::read_file(path);
  } catch (const std::exception& ex) {
    std::cerr << ex.what() << "\n";
    return 3;
  }
  stella::Report r = stella::check_source(source, path, check_options(flags));
  if (r.status == stella::Report::Status::TypeError) {
    print_diagnostic(r, flags);
    return 1;
  }
  if (r.status == stella::Report::Status::ParseError) {
    print_diagnostic(r, flags);
    return 2;
  }
  try {
    stella::Program program = stella::parse_program(source);
    stella::Interpreter interp(program, stella::InterpOptions{flags.fuel});
    stella::Outcome in = interp.eval_closed(stella::parse_expr(input));
    if (in.kind != stella::Outcome::Kind::Normal) {
      std::cerr << "input value did not evaluate: " << input << "\n";
      return 3;
    }
    stella::Outcome out = interp.run_main(in.value);
    std::cout << stella::outcome_to_string(out) << "\n";
    return out.kind == stella::Outcome::Kind::Normal ? 0 : 4;
  } catch (const stella::ParseException& ex) {
    std::cerr << "input value does not parse: " << ex.error().message << "\n";
    return 3;
  } catch (const stella::FuelExhausted& ex) {
    std::cout << ex.what() << "\n";
    return 4;
  }
}

int cmd_test(const std::string& dir, const CommonFlags& flags) {
  try {
    auto cases = stella::scan_corpus(dir);
    stella::HarnessReport report = stella::run_corpus(cases, flags.fuel);
    for (const auto& res : report.results) {
      std::cout << (res.passed ? "PASS " : "FAIL ") << res.path;
      if (!res.passed && !res.detail.empty()) {
        std::cout << " (" << res.detail << ")";
      }
      std::cout << "\n";
    }
    std::cout << report.summary_line() << "\n";
    return report.failed == 0 ? 0 : 1;
  } catch (const stella::CorpusError& ex) {
    std::cerr << ex.what() << "\n";
    return 3;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stella language toolchain"};
  app.require_subcommand(1);
  CommonFlags flags;

  std::string check_file;
  auto* check = app.add_subcommand("check", "Typecheck a program");
  check->add_option("file", check_file)->required();
  check->add_flag("--no-gate", flags.no_gate,
                  "ignore extension gates while typechecking");
  check->add_flag("--json", flags.json, "emit diagnostics as JSON");
  check->add_flag("--trace", flags.trace, "print typing judgments");

  std::string run_file, run_input = "0";
  auto* run = app.add_subcommand("run", "Run a program's main function");
  run->add_option("file", run_file)->required();
  run->add_option("--input", run_input, "argument for main (an expression)");
  run->add_flag("--no-gate", flags.no_gate,
                "ignore extension gates while typechecking");
  run->add_flag("--json", flags.json, "emit diagnostics as JSON");
  run->add_option("--fuel", flags.fuel, "evaluation step limit");
  run->add_flag("--trace", flags.trace, "print typing judgments");

  std::string test_dir;
  auto* test = app.add_subcommand("test", "Run a conformance corpus");
  test->add_option("dir", test_dir)->required();
  test->add_option("--fuel", flags.fuel, "evaluation step limit");

  CLI11_PARSE(app, argc, argv);

  if (check->parsed()) return cmd_check(check_file, flags);
  if (run->parsed()) return cmd_run(run_file, run_input, flags);
  return cmd_test(test_dir, flags);
}
