#ifndef STELLA_SYNTAX_HPP
#define STELLA_SYNTAX_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace stella {

// 1-based line/column positions; end is exclusive.
struct Span {
  int line = 0;
  int col = 0;
  int end_line = 0;
  int end_col = 0;
};

// ---------------------------------------------------------------------------
// Types

enum class TypeKind {
  Bool,
  Nat,
  Unit,
  Fn,
  Tuple,
  Record,
  Sum,
  Variant,
  List,
  Ref,
  Top,
  Bot,
  Var,
  Forall,
  Mu,
  Meta,
  Alias,
};

struct Type;
using TypePtr = std::shared_ptr<const Type>;

struct TypeField {
  std::string label;
  TypePtr type;
};

struct Type {
  TypeKind kind;
  // Fn parameters, Tuple components, Sum {left, right}.
  std::vector<TypePtr> params;
  // Fn result, List/Ref element, Forall/Mu body.
  TypePtr inner;
  // Record / Variant fields, in declaration order.
  std::vector<TypeField> fields;
  // Var / Alias name, Mu binder.
  std::string name;
  // Forall binders.
  std::vector<std::string> binders;
  std::int64_t meta_id = 0;
};

namespace ty {
TypePtr boolean();
TypePtr nat();
TypePtr unit();
TypePtr top();
TypePtr bot();
TypePtr fn(std::vector<TypePtr> params, TypePtr result);
TypePtr tuple(std::vector<TypePtr> components);
TypePtr record(std::vector<TypeField> fields);
TypePtr sum(TypePtr left, TypePtr right);
TypePtr variant(std::vector<TypeField> fields);
TypePtr list(TypePtr elem);
TypePtr ref(TypePtr elem);
TypePtr var(std::string name);
TypePtr forall(std::vector<std::string> binders, TypePtr body);
TypePtr mu(std::string binder, TypePtr body);
TypePtr meta(std::int64_t id);
TypePtr alias(std::string name);
}  // namespace ty

const TypePtr* record_field(const TypePtr& t, const std::string& label);

// ---------------------------------------------------------------------------
// Patterns

enum class PatternKind {
  Var,
  Wildcard,
  True,
  False,
  Zero,
  Succ,
  Unit,
  Inl,
  Inr,
  Variant,
  Tuple,
  Record,
  List,
  Cons,
  Ascription,
  Int,
};

struct Pattern;
using PatternPtr = std::shared_ptr<const Pattern>;

struct PatternField {
  std::string label;
  PatternPtr pat;
};

struct Pattern {
  PatternKind kind;
  Span span;
  std::vector<PatternPtr> args;
  std::vector<PatternField> fields;
  std::string name;  // Var binder or Variant label
  TypePtr type;      // Ascription
  std::uint64_t value = 0;  // Int literal
};

namespace pat {
PatternPtr var(std::string name, Span s = {});
PatternPtr wildcard(Span s = {});
PatternPtr ptrue(Span s = {});
PatternPtr pfalse(Span s = {});
PatternPtr zero(Span s = {});
PatternPtr succ(PatternPtr p, Span s = {});
PatternPtr punit(Span s = {});
PatternPtr inl(PatternPtr p, Span s = {});
PatternPtr inr(PatternPtr p, Span s = {});
PatternPtr variant(std::string label, PatternPtr p, Span s = {});
PatternPtr tuple(std::vector<PatternPtr> ps, Span s = {});
PatternPtr record(std::vector<PatternField> fs, Span s = {});
PatternPtr list(std::vector<PatternPtr> ps, Span s = {});
PatternPtr cons(PatternPtr head, PatternPtr tail, Span s = {});
PatternPtr ascription(PatternPtr p, TypePtr t, Span s = {});
PatternPtr intlit(std::uint64_t v, Span s = {});
}  // namespace pat

// A pattern is "simple" when every sub-pattern under a constructor is a
// variable or wildcard; anything deeper needs #structural-patterns.
bool pattern_is_simple(const PatternPtr& p);

// ---------------------------------------------------------------------------
// Expressions

enum class ExprKind {
  Var,
  True,
  False,
  Zero,
  Succ,
  NatIsZero,
  NatPred,
  NatRec,
  NatLit,
  If,
  Abstraction,
  GenericAbstraction,
  Application,
  TypeApplication,
  Tuple,
  TupleProj,
  Record,
  RecordProj,
  Inl,
  Inr,
  Variant,
  ListLit,
  ConsList,
  ListHead,
  ListTail,
  ListIsEmpty,
  Match,
  Let,
  LetRec,
  Ascription,
  Sequence,
  NewRef,
  Deref,
  Assign,
  Panic,
  Throw,
  TryWith,
  TryCatch,
  CastAs,
  Fix,
  Fold,
  Unfold,
  Unit,
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Param {
  std::string name;
  TypePtr type;
};

struct MatchCase {
  PatternPtr pattern;
  ExprPtr body;
};

struct ExprField {
  std::string label;
  ExprPtr value;
};

struct Binding {
  std::string name;
  TypePtr type;  // required for letrec, null for let
  ExprPtr value;
};

struct Expr {
  ExprKind kind;
  Span span;
  std::vector<ExprPtr> args;            // positional children
  std::vector<Param> params;            // Abstraction
  std::vector<std::string> binders;     // GenericAbstraction
  std::vector<TypePtr> type_args;       // TypeApplication; [0] for
                                        // Ascription/CastAs/Fold/Unfold
  std::vector<ExprField> fields;        // Record
  std::vector<MatchCase> cases;         // Match
  std::vector<Binding> bindings;        // Let / LetRec
  std::string name;                     // Var, projection/injection label
  std::uint64_t nat = 0;                // NatLit
  std::size_t index = 0;                // TupleProj (1-based)
};

namespace ex {
ExprPtr var(std::string name, Span s = {});
ExprPtr etrue(Span s = {});
ExprPtr efalse(Span s = {});
ExprPtr zero(Span s = {});
ExprPtr succ(ExprPtr e, Span s = {});
ExprPtr nat_iszero(ExprPtr e, Span s = {});
ExprPtr nat_pred(ExprPtr e, Span s = {});
ExprPtr nat_rec(ExprPtr n, ExprPtr z, ExprPtr step, Span s = {});
ExprPtr nat_lit(std::uint64_t v, Span s = {});
ExprPtr cond(ExprPtr c, ExprPtr t, ExprPtr f, Span s = {});
ExprPtr abstraction(std::vector<Param> params, ExprPtr body, Span s = {});
ExprPtr generic_abstraction(std::vector<std::string> binders,
                            ExprPtr abstraction, Span s = {});
ExprPtr application(ExprPtr f, std::vector<ExprPtr> args, Span s = {});
ExprPtr type_application(ExprPtr f, std::vector<TypePtr> type_args,
                         Span s = {});
ExprPtr tuple(std::vector<ExprPtr> exprs, Span s = {});
ExprPtr tuple_proj(ExprPtr e, std::size_t index, Span s = {});
ExprPtr record(std::vector<ExprField> fields, Span s = {});
ExprPtr record_proj(ExprPtr e, std::string label, Span s = {});
ExprPtr inl(ExprPtr e, Span s = {});
ExprPtr inr(ExprPtr e, Span s = {});
ExprPtr variant(std::string label, ExprPtr e, Span s = {});
ExprPtr list(std::vector<ExprPtr> exprs, Span s = {});
ExprPtr cons(ExprPtr head, ExprPtr tail, Span s = {});
ExprPtr list_head(ExprPtr e, Span s = {});
ExprPtr list_tail(ExprPtr e, Span s = {});
ExprPtr list_isempty(ExprPtr e, Span s = {});
ExprPtr match(ExprPtr scrutinee, std::vector<MatchCase> cases, Span s = {});
ExprPtr let(std::vector<Binding> bindings, ExprPtr body, Span s = {});
ExprPtr letrec(std::vector<Binding> bindings, ExprPtr body, Span s = {});
ExprPtr ascription(ExprPtr e, TypePtr t, Span s = {});
ExprPtr sequence(ExprPtr e1, ExprPtr e2, Span s = {});
ExprPtr new_ref(ExprPtr e, Span s = {});
ExprPtr deref(ExprPtr e, Span s = {});
ExprPtr assign(ExprPtr lhs, ExprPtr rhs, Span s = {});
ExprPtr panic(Span s = {});
ExprPtr throw_(ExprPtr e, Span s = {});
ExprPtr try_with(ExprPtr body, ExprPtr fallback, Span s = {});
ExprPtr try_catch(ExprPtr body, PatternPtr p, ExprPtr handler, Span s = {});
ExprPtr cast_as(ExprPtr e, TypePtr t, Span s = {});
ExprPtr fix(ExprPtr e, Span s = {});
ExprPtr fold(TypePtr t, ExprPtr e, Span s = {});
ExprPtr unfold(TypePtr t, ExprPtr e, Span s = {});
ExprPtr unit(Span s = {});
}  // namespace ex

// ---------------------------------------------------------------------------
// Declarations and programs

enum class DeclKind {
  Function,
  TypeAlias,
  ExceptionType,
  ExceptionVariant,
};

struct Decl;
using DeclPtr = std::shared_ptr<const Decl>;

struct Decl {
  DeclKind kind;
  Span span;
  std::string name;  // function/alias name or exception variant label
  std::vector<std::string> generic_binders;
  std::vector<Param> params;
  TypePtr type;  // return type / alias target / exception carrier
  std::vector<DeclPtr> nested;
  ExprPtr body;
};

struct Program {
  std::string language = "core";
  std::vector<std::string> extensions;  // ordered, duplicate-free
  std::vector<DeclPtr> decls;

  bool has_extension(const std::string& name) const;
};

// ---------------------------------------------------------------------------
// Extension registry

// All extensions defined by the language; anything else is unknown.
const std::vector<std::string>& extension_registry();
bool extension_is_known(const std::string& name);

// ---------------------------------------------------------------------------
// Structural equality modulo source spans

bool type_equal(const TypePtr& a, const TypePtr& b);
bool pattern_equal(const PatternPtr& a, const PatternPtr& b);
bool expr_equal(const ExprPtr& a, const ExprPtr& b);
bool decl_equal(const DeclPtr& a, const DeclPtr& b);
bool program_equal(const Program& a, const Program& b);

}  // namespace stella

#endif  // STELLA_SYNTAX_HPP
