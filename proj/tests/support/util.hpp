#ifndef TESTS_SUPPORT_UTIL_HPP
#define TESTS_SUPPORT_UTIL_HPP

#include <memory>
#include <string>
#include <vector>

#include "stella/error.hpp"
#include "stella/parser.hpp"
#include "stella/typecheck.hpp"

namespace testutil {

inline stella::TypePtr T(const std::string& src) {
  return stella::parse_type(src);
}

inline stella::ExprPtr E(const std::string& src) {
  return stella::parse_expr(src);
}

// An expression-level typechecking context over a synthetic program that
// only carries the given extension pragmas.
struct Ctx {
  stella::Program program;
  std::unique_ptr<stella::TypeChecker> tc;

  explicit Ctx(std::vector<std::string> extensions = {}, bool gate = true) {
    program.extensions = std::move(extensions);
    stella::TypeCheckOptions opts;
    opts.gate_extensions = gate;
    tc = std::make_unique<stella::TypeChecker>(program, opts);
  }

  Ctx& bind(const std::string& name, const std::string& type) {
    tc->bind_var(name, T(type));
    return *this;
  }

  stella::TypePtr infer(const std::string& expr) { return tc->infer(E(expr)); }

  void check(const std::string& expr, const std::string& type) {
    tc->check(E(expr), T(type));
  }
};

// Runs `f`, expecting a TypeError; returns its tag.
template <class F>
stella::ErrorTag error_tag(F&& f) {
  try {
    f();
  } catch (const stella::TypeError& err) {
    return err.diagnostic().tag;
  }
  throw std::runtime_error("expected a type error, but none was raised");
}

// Parses + typechecks a whole program, returning the failure tag.
inline stella::ErrorTag program_error(const std::string& source) {
  return error_tag([&] {
    stella::Program p = stella::parse_program(source);
    stella::typecheck_program(p);
  });
}

inline void accept_program(const std::string& source) {
  stella::Program p = stella::parse_program(source);
  stella::typecheck_program(p);
}

}  // namespace testutil

#endif
