#ifndef STELLA_TYPECHECK_HPP
#define STELLA_TYPECHECK_HPP

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "stella/error.hpp"
#include "stella/matching.hpp"
#include "stella/reconstruct.hpp"
#include "stella/syntax.hpp"

namespace stella {

struct TypeCheckOptions {
  // false = permissive mode: extension pragmas are ignored and every
  // construct is allowed.
  bool gate_extensions = true;
  bool trace = false;
  std::ostream* trace_out = nullptr;
};

// Exception carrier declared by the program, if any.
struct ExceptionEnv {
  enum class Mode { None, Fixed, Open };
  Mode mode = Mode::None;
  TypePtr fixed;
  std::vector<TypeField> labels;

  // Fixed type, or the variant built from open declarations; null if none.
  TypePtr carrier() const;
};

class TypeChecker {
 public:
  explicit TypeChecker(const Program& program, TypeCheckOptions opts = {});

  // Checks the whole program; throws TypeError on the first failure.
  void run();

  // Expression-level entry points (used heavily by tests). The context is
  // whatever has been bound via bind_var/declare_type_var.
  TypePtr infer(const ExprPtr& e);
  void check(const ExprPtr& e, const TypePtr& expected);

  // Constraint-typing entry point; only meaningful when the checker is in
  // reconstruction mode. Returns the (possibly metavariable-laden) type and
  // the constraints gathered while traversing `e`.
  std::pair<TypePtr, std::vector<Constraint>> generate_constraints(
      const ExprPtr& e, const TypePtr& expected = nullptr);

  void bind_var(const std::string& name, TypePtr type);
  void declare_type_var(const std::string& name);
  void set_exception_env(ExceptionEnv env) { exceptions_ = std::move(env); }

  bool subtyping_enabled() const { return subtyping_; }
  const ExceptionEnv& exception_env() const { return exceptions_; }

  // `e cast as target`: accepted when the synthesized type is related to
  // the target in either direction.
  TypePtr check_cast(const ExprPtr& e, const TypePtr& target, Span span);

 private:
  friend struct ScopeGuard;

  const Program& program_;
  TypeCheckOptions opts_;

  std::vector<std::pair<std::string, TypePtr>> vars_;
  std::vector<std::string> type_vars_;
  std::map<std::string, TypePtr> raw_aliases_;
  // resolved alias cache; a null entry marks in-progress expansion
  std::map<std::string, TypePtr> aliases_;
  ExceptionEnv exceptions_;
  bool subtyping_ = false;
  bool reconstruction_ = false;
  std::vector<Constraint> constraints_;
  std::int64_t next_meta_ = 1;
  int trace_depth_ = 0;

  // extension gates
  bool enabled(const std::string& ext) const;
  void require(const std::string& ext, Span span) const;
  void require_any(const std::string& a, const std::string& b,
                   Span span) const;

  MatchingOptions matching_options() const;

  // context
  const TypePtr* lookup_var(const std::string& name) const;
  bool type_var_in_scope(const std::string& name) const;

  // annotations
  TypePtr resolve_annotation(const TypePtr& t, Span span);
  TypePtr resolve_annotation_rec(const TypePtr& t, Span span,
                                 std::set<std::string>& bound);
  void collect_aliases_and_exceptions();
  TypePtr signature_of(const DeclPtr& d);

  // equality / subtyping / constraints
  void expect_type(const TypePtr& actual, const TypePtr& expected, Span span);
  TypePtr fresh_meta();

  // typing of declarations
  void check_function(const DeclPtr& d);

  // per-form rules that live in effects.cpp
  TypePtr infer_ref_op(const ExprPtr& e);
  void check_ref_op(const ExprPtr& e, const TypePtr& expected);
  TypePtr infer_sequence(const ExprPtr& e, const TypePtr& expected);
  TypePtr infer_exception_op(const ExprPtr& e, const TypePtr& expected);
  TypePtr exception_carrier(Span span) const;

  // match typing (rules live in typecheck.cpp, helpers in matching.cpp)
  TypePtr check_match_expr(const ExprPtr& e, const TypePtr& expected);

  TypePtr infer_impl(const ExprPtr& e);
  void check_impl(const ExprPtr& e, const TypePtr& expected);

  void trace(const std::string& what) const;
};

// Restores the variable and type-variable scopes on exit.
struct ScopeGuard {
  TypeChecker& tc;
  std::size_t vars, type_vars;
  explicit ScopeGuard(TypeChecker& c)
      : tc(c), vars(c.vars_.size()), type_vars(c.type_vars_.size()) {}
  ~ScopeGuard() {
    tc.vars_.resize(vars);
    tc.type_vars_.resize(type_vars);
  }
  ScopeGuard(const ScopeGuard&) = delete;
  ScopeGuard& operator=(const ScopeGuard&) = delete;
};

// Convenience wrapper: parse result in, first Diagnostic out (or nothing).
void typecheck_program(const Program& p, TypeCheckOptions opts = {});

}  // namespace stella

#endif  // STELLA_TYPECHECK_HPP
