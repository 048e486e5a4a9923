#include "stella/syntax.hpp"

#include <algorithm>
#include <set>

#include "stella/alias.hpp"
#include "stella/error.hpp"

namespace stella {

namespace {

TypePtr make_type(Type t) { return std::make_shared<Type>(std::move(t)); }

PatternPtr make_pat(Pattern p) { return std::make_shared<Pattern>(std::move(p)); }

ExprPtr make_expr(Expr e) { return std::make_shared<Expr>(std::move(e)); }

}  // namespace

namespace ty {

TypePtr boolean() {
  static const TypePtr t = make_type({TypeKind::Bool});
  return t;
}

TypePtr nat() {
  static const TypePtr t = make_type({TypeKind::Nat});
  return t;
}

TypePtr unit() {
  static const TypePtr t = make_type({TypeKind::Unit});
  return t;
}

TypePtr top() {
  static const TypePtr t = make_type({TypeKind::Top});
  return t;
}

TypePtr bot() {
  static const TypePtr t = make_type({TypeKind::Bot});
  return t;
}

TypePtr fn(std::vector<TypePtr> params, TypePtr result) {
  Type t{TypeKind::Fn};
  t.params = std::move(params);
  t.inner = std::move(result);
  return make_type(std::move(t));
}

TypePtr tuple(std::vector<TypePtr> components) {
  Type t{TypeKind::Tuple};
  t.params = std::move(components);
  return make_type(std::move(t));
}

TypePtr record(std::vector<TypeField> fields) {
  Type t{TypeKind::Record};
  t.fields = std::move(fields);
  return make_type(std::move(t));
}

TypePtr sum(TypePtr left, TypePtr right) {
  Type t{TypeKind::Sum};
  t.params = {std::move(left), std::move(right)};
  return make_type(std::move(t));
}

TypePtr variant(std::vector<TypeField> fields) {
  Type t{TypeKind::Variant};
  t.fields = std::move(fields);
  return make_type(std::move(t));
}

TypePtr list(TypePtr elem) {
  Type t{TypeKind::List};
  t.inner = std::move(elem);
  return make_type(std::move(t));
}

TypePtr ref(TypePtr elem) {
  Type t{TypeKind::Ref};
  t.inner = std::move(elem);
  return make_type(std::move(t));
}

TypePtr var(std::string name) {
  Type t{TypeKind::Var};
  t.name = std::move(name);
  return make_type(std::move(t));
}

TypePtr forall(std::vector<std::string> binders, TypePtr body) {
  Type t{TypeKind::Forall};
  t.binders = std::move(binders);
  t.inner = std::move(body);
  return make_type(std::move(t));
}

TypePtr mu(std::string binder, TypePtr body) {
  Type t{TypeKind::Mu};
  t.name = std::move(binder);
  t.inner = std::move(body);
  return make_type(std::move(t));
}

TypePtr meta(std::int64_t id) {
  Type t{TypeKind::Meta};
  t.meta_id = id;
  return make_type(std::move(t));
}

TypePtr alias(std::string name) {
  Type t{TypeKind::Alias};
  t.name = std::move(name);
  return make_type(std::move(t));
}

}  // namespace ty

const TypePtr* record_field(const TypePtr& t, const std::string& label) {
  for (const auto& f : t->fields) {
    if (f.label == label) return &f.type;
  }
  return nullptr;
}

namespace pat {

PatternPtr var(std::string name, Span s) {
  Pattern p{PatternKind::Var, s};
  p.name = std::move(name);
  return make_pat(std::move(p));
}

PatternPtr wildcard(Span s) { return make_pat({PatternKind::Wildcard, s}); }
PatternPtr ptrue(Span s) { return make_pat({PatternKind::True, s}); }
PatternPtr pfalse(Span s) { return make_pat({PatternKind::False, s}); }
PatternPtr zero(Span s) { return make_pat({PatternKind::Zero, s}); }

PatternPtr succ(PatternPtr child, Span s) {
  Pattern p{PatternKind::Succ, s};
  p.args = {std::move(child)};
  return make_pat(std::move(p));
}

PatternPtr punit(Span s) { return make_pat({PatternKind::Unit, s}); }

PatternPtr inl(PatternPtr child, Span s) {
  Pattern p{PatternKind::Inl, s};
  p.args = {std::move(child)};
  return make_pat(std::move(p));
}

PatternPtr inr(PatternPtr child, Span s) {
  Pattern p{PatternKind::Inr, s};
  p.args = {std::move(child)};
  return make_pat(std::move(p));
}

PatternPtr variant(std::string label, PatternPtr child, Span s) {
  Pattern p{PatternKind::Variant, s};
  p.name = std::move(label);
  p.args = {std::move(child)};
  return make_pat(std::move(p));
}

PatternPtr tuple(std::vector<PatternPtr> ps, Span s) {
  Pattern p{PatternKind::Tuple, s};
  p.args = std::move(ps);
  return make_pat(std::move(p));
}

PatternPtr record(std::vector<PatternField> fs, Span s) {
  Pattern p{PatternKind::Record, s};
  p.fields = std::move(fs);
  return make_pat(std::move(p));
}

PatternPtr list(std::vector<PatternPtr> ps, Span s) {
  Pattern p{PatternKind::List, s};
  p.args = std::move(ps);
  return make_pat(std::move(p));
}

PatternPtr cons(PatternPtr head, PatternPtr tail, Span s) {
  Pattern p{PatternKind::Cons, s};
  p.args = {std::move(head), std::move(tail)};
  return make_pat(std::move(p));
}

PatternPtr ascription(PatternPtr child, TypePtr t, Span s) {
  Pattern p{PatternKind::Ascription, s};
  p.args = {std::move(child)};
  p.type = std::move(t);
  return make_pat(std::move(p));
}

PatternPtr intlit(std::uint64_t v, Span s) {
  Pattern p{PatternKind::Int, s};
  p.value = v;
  return make_pat(std::move(p));
}

}  // namespace pat

bool pattern_is_simple(const PatternPtr& p) {
  auto leaf = [](const PatternPtr& c) {
    return c->kind == PatternKind::Var || c->kind == PatternKind::Wildcard;
  };
  switch (p->kind) {
    case PatternKind::Var:
    case PatternKind::Wildcard:
    case PatternKind::True:
    case PatternKind::False:
    case PatternKind::Zero:
    case PatternKind::Unit:
    case PatternKind::Int:
      return true;
    case PatternKind::Succ:
    case PatternKind::Inl:
    case PatternKind::Inr:
    case PatternKind::Variant:
    case PatternKind::Cons:
    case PatternKind::Tuple:
    case PatternKind::List:
      return std::all_of(p->args.begin(), p->args.end(), leaf);
    case PatternKind::Record:
      return std::all_of(p->fields.begin(), p->fields.end(),
                         [&](const PatternField& f) { return leaf(f.pat); });
    case PatternKind::Ascription:
      return false;
  }
  return false;
}

namespace ex {

ExprPtr var(std::string name, Span s) {
  Expr e{ExprKind::Var, s};
  e.name = std::move(name);
  return make_expr(std::move(e));
}

ExprPtr etrue(Span s) { return make_expr({ExprKind::True, s}); }
ExprPtr efalse(Span s) { return make_expr({ExprKind::False, s}); }
ExprPtr zero(Span s) { return make_expr({ExprKind::Zero, s}); }

namespace {
ExprPtr unary(ExprKind k, ExprPtr e, Span s) {
  Expr r{k, s};
  r.args = {std::move(e)};
  return make_expr(std::move(r));
}
}  // namespace

ExprPtr succ(ExprPtr e, Span s) { return unary(ExprKind::Succ, std::move(e), s); }
ExprPtr nat_iszero(ExprPtr e, Span s) {
  return unary(ExprKind::NatIsZero, std::move(e), s);
}
ExprPtr nat_pred(ExprPtr e, Span s) {
  return unary(ExprKind::NatPred, std::move(e), s);
}

ExprPtr nat_rec(ExprPtr n, ExprPtr z, ExprPtr step, Span s) {
  Expr e{ExprKind::NatRec, s};
  e.args = {std::move(n), std::move(z), std::move(step)};
  return make_expr(std::move(e));
}

ExprPtr nat_lit(std::uint64_t v, Span s) {
  Expr e{ExprKind::NatLit, s};
  e.nat = v;
  return make_expr(std::move(e));
}

ExprPtr cond(ExprPtr c, ExprPtr t, ExprPtr f, Span s) {
  Expr e{ExprKind::If, s};
  e.args = {std::move(c), std::move(t), std::move(f)};
  return make_expr(std::move(e));
}

ExprPtr abstraction(std::vector<Param> params, ExprPtr body, Span s) {
  Expr e{ExprKind::Abstraction, s};
  e.params = std::move(params);
  e.args = {std::move(body)};
  return make_expr(std::move(e));
}

ExprPtr generic_abstraction(std::vector<std::string> binders, ExprPtr inner,
                            Span s) {
  Expr e{ExprKind::GenericAbstraction, s};
  e.binders = std::move(binders);
  e.args = {std::move(inner)};
  return make_expr(std::move(e));
}

ExprPtr application(ExprPtr f, std::vector<ExprPtr> args, Span s) {
  Expr e{ExprKind::Application, s};
  e.args.push_back(std::move(f));
  for (auto& a : args) e.args.push_back(std::move(a));
  return make_expr(std::move(e));
}

ExprPtr type_application(ExprPtr f, std::vector<TypePtr> type_args, Span s) {
  Expr e{ExprKind::TypeApplication, s};
  e.args = {std::move(f)};
  e.type_args = std::move(type_args);
  return make_expr(std::move(e));
}

ExprPtr tuple(std::vector<ExprPtr> exprs, Span s) {
  Expr e{ExprKind::Tuple, s};
  e.args = std::move(exprs);
  return make_expr(std::move(e));
}

ExprPtr tuple_proj(ExprPtr e0, std::size_t index, Span s) {
  Expr e{ExprKind::TupleProj, s};
  e.args = {std::move(e0)};
  e.index = index;
  return make_expr(std::move(e));
}

ExprPtr record(std::vector<ExprField> fields, Span s) {
  Expr e{ExprKind::Record, s};
  e.fields = std::move(fields);
  return make_expr(std::move(e));
}

ExprPtr record_proj(ExprPtr e0, std::string label, Span s) {
  Expr e{ExprKind::RecordProj, s};
  e.args = {std::move(e0)};
  e.name = std::move(label);
  return make_expr(std::move(e));
}

ExprPtr inl(ExprPtr e, Span s) { return unary(ExprKind::Inl, std::move(e), s); }
ExprPtr inr(ExprPtr e, Span s) { return unary(ExprKind::Inr, std::move(e), s); }

ExprPtr variant(std::string label, ExprPtr e0, Span s) {
  Expr e{ExprKind::Variant, s};
  e.name = std::move(label);
  e.args = {std::move(e0)};
  return make_expr(std::move(e));
}

ExprPtr list(std::vector<ExprPtr> exprs, Span s) {
  Expr e{ExprKind::ListLit, s};
  e.args = std::move(exprs);
  return make_expr(std::move(e));
}

ExprPtr cons(ExprPtr head, ExprPtr tail, Span s) {
  Expr e{ExprKind::ConsList, s};
  e.args = {std::move(head), std::move(tail)};
  return make_expr(std::move(e));
}

ExprPtr list_head(ExprPtr e, Span s) {
  return unary(ExprKind::ListHead, std::move(e), s);
}
ExprPtr list_tail(ExprPtr e, Span s) {
  return unary(ExprKind::ListTail, std::move(e), s);
}
ExprPtr list_isempty(ExprPtr e, Span s) {
  return unary(ExprKind::ListIsEmpty, std::move(e), s);
}

ExprPtr match(ExprPtr scrutinee, std::vector<MatchCase> cases, Span s) {
  Expr e{ExprKind::Match, s};
  e.args = {std::move(scrutinee)};
  e.cases = std::move(cases);
  return make_expr(std::move(e));
}

ExprPtr let(std::vector<Binding> bindings, ExprPtr body, Span s) {
  Expr e{ExprKind::Let, s};
  e.bindings = std::move(bindings);
  e.args = {std::move(body)};
  return make_expr(std::move(e));
}

ExprPtr letrec(std::vector<Binding> bindings, ExprPtr body, Span s) {
  Expr e{ExprKind::LetRec, s};
  e.bindings = std::move(bindings);
  e.args = {std::move(body)};
  return make_expr(std::move(e));
}

ExprPtr ascription(ExprPtr e0, TypePtr t, Span s) {
  Expr e{ExprKind::Ascription, s};
  e.args = {std::move(e0)};
  e.type_args = {std::move(t)};
  return make_expr(std::move(e));
}

ExprPtr sequence(ExprPtr e1, ExprPtr e2, Span s) {
  Expr e{ExprKind::Sequence, s};
  e.args = {std::move(e1), std::move(e2)};
  return make_expr(std::move(e));
}

ExprPtr new_ref(ExprPtr e, Span s) {
  return unary(ExprKind::NewRef, std::move(e), s);
}
ExprPtr deref(ExprPtr e, Span s) {
  return unary(ExprKind::Deref, std::move(e), s);
}

ExprPtr assign(ExprPtr lhs, ExprPtr rhs, Span s) {
  Expr e{ExprKind::Assign, s};
  e.args = {std::move(lhs), std::move(rhs)};
  return make_expr(std::move(e));
}

ExprPtr panic(Span s) { return make_expr({ExprKind::Panic, s}); }

ExprPtr throw_(ExprPtr e, Span s) {
  return unary(ExprKind::Throw, std::move(e), s);
}

ExprPtr try_with(ExprPtr body, ExprPtr fallback, Span s) {
  Expr e{ExprKind::TryWith, s};
  e.args = {std::move(body), std::move(fallback)};
  return make_expr(std::move(e));
}

ExprPtr try_catch(ExprPtr body, PatternPtr p, ExprPtr handler, Span s) {
  Expr e{ExprKind::TryCatch, s};
  e.args = {std::move(body), std::move(handler)};
  e.cases = {MatchCase{std::move(p), nullptr}};
  return make_expr(std::move(e));
}

ExprPtr cast_as(ExprPtr e0, TypePtr t, Span s) {
  Expr e{ExprKind::CastAs, s};
  e.args = {std::move(e0)};
  e.type_args = {std::move(t)};
  return make_expr(std::move(e));
}

ExprPtr fix(ExprPtr e, Span s) { return unary(ExprKind::Fix, std::move(e), s); }

ExprPtr fold(TypePtr t, ExprPtr e0, Span s) {
  Expr e{ExprKind::Fold, s};
  e.args = {std::move(e0)};
  e.type_args = {std::move(t)};
  return make_expr(std::move(e));
}

ExprPtr unfold(TypePtr t, ExprPtr e0, Span s) {
  Expr e{ExprKind::Unfold, s};
  e.args = {std::move(e0)};
  e.type_args = {std::move(t)};
  return make_expr(std::move(e));
}

ExprPtr unit(Span s) { return make_expr({ExprKind::Unit, s}); }

}  // namespace ex

bool Program::has_extension(const std::string& name) const {
  return std::find(extensions.begin(), extensions.end(), name) !=
         extensions.end();
}

const std::vector<std::string>& extension_registry() {
  static const std::vector<std::string> registry = {
      "#unit-type",
      "#pairs",
      "#tuples",
      "#records",
      "#sum-types",
      "#variants",
      "#lists",
      "#let-bindings",
      "#letrec-bindings",
      "#nested-function-declarations",
      "#multiparameter-functions",
      "#currying",
      "#type-ascriptions",
      "#sequencing",
      "#structural-patterns",
      "#general-recursion",
      "#type-aliases",
      "#natural-literals",
      "#references",
      "#panic",
      "#exceptions",
      "#exception-type-declaration",
      "#open-variant-exceptions",
      "#structural-subtyping",
      "#top-type",
      "#bottom-type",
      "#type-cast",
      "#universal-types",
      "#recursive-types",
      "#type-reconstruction",
  };
  return registry;
}

bool extension_is_known(const std::string& name) {
  const auto& r = extension_registry();
  return std::find(r.begin(), r.end(), name) != r.end();
}

// ---------------------------------------------------------------------------
// Structural equality (spans ignored)

bool type_equal(const TypePtr& a, const TypePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  if (a->name != b->name) return false;
  if (a->binders != b->binders) return false;
  if (a->meta_id != b->meta_id) return false;
  if (a->params.size() != b->params.size()) return false;
  for (std::size_t i = 0; i < a->params.size(); ++i) {
    if (!type_equal(a->params[i], b->params[i])) return false;
  }
  if ((a->inner == nullptr) != (b->inner == nullptr)) return false;
  if (a->inner && !type_equal(a->inner, b->inner)) return false;
  if (a->fields.size() != b->fields.size()) return false;
  for (std::size_t i = 0; i < a->fields.size(); ++i) {
    if (a->fields[i].label != b->fields[i].label) return false;
    if (!type_equal(a->fields[i].type, b->fields[i].type)) return false;
  }
  return true;
}

bool pattern_equal(const PatternPtr& a, const PatternPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->name != b->name || a->value != b->value)
    return false;
  if ((a->type == nullptr) != (b->type == nullptr)) return false;
  if (a->type && !type_equal(a->type, b->type)) return false;
  if (a->args.size() != b->args.size()) return false;
  for (std::size_t i = 0; i < a->args.size(); ++i) {
    if (!pattern_equal(a->args[i], b->args[i])) return false;
  }
  if (a->fields.size() != b->fields.size()) return false;
  for (std::size_t i = 0; i < a->fields.size(); ++i) {
    if (a->fields[i].label != b->fields[i].label) return false;
    if (!pattern_equal(a->fields[i].pat, b->fields[i].pat)) return false;
  }
  return true;
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->name != b->name || a->nat != b->nat ||
      a->index != b->index || a->binders != b->binders)
    return false;
  if (a->args.size() != b->args.size()) return false;
  for (std::size_t i = 0; i < a->args.size(); ++i) {
    if (!expr_equal(a->args[i], b->args[i])) return false;
  }
  if (a->params.size() != b->params.size()) return false;
  for (std::size_t i = 0; i < a->params.size(); ++i) {
    if (a->params[i].name != b->params[i].name) return false;
    if (!type_equal(a->params[i].type, b->params[i].type)) return false;
  }
  if (a->type_args.size() != b->type_args.size()) return false;
  for (std::size_t i = 0; i < a->type_args.size(); ++i) {
    if (!type_equal(a->type_args[i], b->type_args[i])) return false;
  }
  if (a->fields.size() != b->fields.size()) return false;
  for (std::size_t i = 0; i < a->fields.size(); ++i) {
    if (a->fields[i].label != b->fields[i].label) return false;
    if (!expr_equal(a->fields[i].value, b->fields[i].value)) return false;
  }
  if (a->cases.size() != b->cases.size()) return false;
  for (std::size_t i = 0; i < a->cases.size(); ++i) {
    if (!pattern_equal(a->cases[i].pattern, b->cases[i].pattern)) return false;
    if ((a->cases[i].body == nullptr) != (b->cases[i].body == nullptr))
      return false;
    if (a->cases[i].body && !expr_equal(a->cases[i].body, b->cases[i].body))
      return false;
  }
  if (a->bindings.size() != b->bindings.size()) return false;
  for (std::size_t i = 0; i < a->bindings.size(); ++i) {
    if (a->bindings[i].name != b->bindings[i].name) return false;
    if ((a->bindings[i].type == nullptr) != (b->bindings[i].type == nullptr))
      return false;
    if (a->bindings[i].type &&
        !type_equal(a->bindings[i].type, b->bindings[i].type))
      return false;
    if (!expr_equal(a->bindings[i].value, b->bindings[i].value)) return false;
  }
  return true;
}

bool decl_equal(const DeclPtr& a, const DeclPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->name != b->name ||
      a->generic_binders != b->generic_binders)
    return false;
  if (a->params.size() != b->params.size()) return false;
  for (std::size_t i = 0; i < a->params.size(); ++i) {
    if (a->params[i].name != b->params[i].name) return false;
    if (!type_equal(a->params[i].type, b->params[i].type)) return false;
  }
  if ((a->type == nullptr) != (b->type == nullptr)) return false;
  if (a->type && !type_equal(a->type, b->type)) return false;
  if (a->nested.size() != b->nested.size()) return false;
  for (std::size_t i = 0; i < a->nested.size(); ++i) {
    if (!decl_equal(a->nested[i], b->nested[i])) return false;
  }
  if ((a->body == nullptr) != (b->body == nullptr)) return false;
  if (a->body && !expr_equal(a->body, b->body)) return false;
  return true;
}

bool program_equal(const Program& a, const Program& b) {
  if (a.language != b.language || a.extensions != b.extensions) return false;
  if (a.decls.size() != b.decls.size()) return false;
  for (std::size_t i = 0; i < a.decls.size(); ++i) {
    if (!decl_equal(a.decls[i], b.decls[i])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Alias expansion

namespace {

TypePtr resolve_alias_rec(const TypePtr& t,
                          const std::map<std::string, TypePtr>& aliases,
                          std::set<std::string>& expanding,
                          std::set<std::string>& bound) {
  switch (t->kind) {
    case TypeKind::Alias: {
      auto it = aliases.find(t->name);
      if (it == aliases.end()) {
        fail(ErrorTag::ERROR_UNDEFINED_TYPE_ALIAS,
             "type alias '" + t->name + "' is not defined");
      }
      if (!expanding.insert(t->name).second) {
        fail(ErrorTag::ERROR_CYCLIC_TYPE_ALIAS,
             "type alias '" + t->name + "' is cyclic");
      }
      TypePtr r = resolve_alias_rec(it->second, aliases, expanding, bound);
      expanding.erase(t->name);
      return r;
    }
    case TypeKind::Var:
      return t;
    default:
      break;
  }
  Type out = *t;
  bool changed = false;
  for (auto& p : out.params) {
    TypePtr r = resolve_alias_rec(p, aliases, expanding, bound);
    if (r != p) changed = true;
    p = r;
  }
  for (auto& f : out.fields) {
    TypePtr r = resolve_alias_rec(f.type, aliases, expanding, bound);
    if (r != f.type) changed = true;
    f.type = r;
  }
  if (out.inner) {
    std::vector<std::string> introduced;
    if (out.kind == TypeKind::Mu) {
      if (bound.insert(out.name).second) introduced.push_back(out.name);
    } else if (out.kind == TypeKind::Forall) {
      for (const auto& b : out.binders) {
        if (bound.insert(b).second) introduced.push_back(b);
      }
    }
    TypePtr r = resolve_alias_rec(out.inner, aliases, expanding, bound);
    for (const auto& b : introduced) bound.erase(b);
    if (r != out.inner) changed = true;
    out.inner = r;
  }
  if (!changed) return t;
  return std::make_shared<Type>(std::move(out));
}

}  // namespace

TypePtr resolve_alias(const TypePtr& t,
                      const std::map<std::string, TypePtr>& aliases) {
  std::set<std::string> expanding;
  std::set<std::string> bound;
  return resolve_alias_rec(t, aliases, expanding, bound);
}

// ---------------------------------------------------------------------------
// Error tags

const char* tag_name(ErrorTag tag) {
  switch (tag) {
    case ErrorTag::ERROR_MISSING_MAIN: return "ERROR_MISSING_MAIN";
    case ErrorTag::ERROR_DUPLICATE_FUNCTION: return "ERROR_DUPLICATE_FUNCTION";
    case ErrorTag::ERROR_EXTENSION_NOT_ENABLED:
      return "ERROR_EXTENSION_NOT_ENABLED";
    case ErrorTag::ERROR_UNDEFINED_VARIABLE: return "ERROR_UNDEFINED_VARIABLE";
    case ErrorTag::ERROR_NOT_A_FUNCTION: return "ERROR_NOT_A_FUNCTION";
    case ErrorTag::ERROR_INCORRECT_NUMBER_OF_ARGUMENTS:
      return "ERROR_INCORRECT_NUMBER_OF_ARGUMENTS";
    case ErrorTag::ERROR_UNEXPECTED_TYPE_FOR_EXPRESSION:
      return "ERROR_UNEXPECTED_TYPE_FOR_EXPRESSION";
    case ErrorTag::ERROR_UNEXPECTED_LAMBDA: return "ERROR_UNEXPECTED_LAMBDA";
    case ErrorTag::ERROR_UNEXPECTED_TUPLE_LENGTH:
      return "ERROR_UNEXPECTED_TUPLE_LENGTH";
    case ErrorTag::ERROR_MISSING_RECORD_FIELDS:
      return "ERROR_MISSING_RECORD_FIELDS";
    case ErrorTag::ERROR_UNEXPECTED_RECORD_FIELDS:
      return "ERROR_UNEXPECTED_RECORD_FIELDS";
    case ErrorTag::ERROR_UNEXPECTED_VARIANT_LABEL:
      return "ERROR_UNEXPECTED_VARIANT_LABEL";
    case ErrorTag::ERROR_AMBIGUOUS_SUM_TYPE: return "ERROR_AMBIGUOUS_SUM_TYPE";
    case ErrorTag::ERROR_AMBIGUOUS_VARIANT_TYPE:
      return "ERROR_AMBIGUOUS_VARIANT_TYPE";
    case ErrorTag::ERROR_AMBIGUOUS_LIST_TYPE:
      return "ERROR_AMBIGUOUS_LIST_TYPE";
    case ErrorTag::ERROR_AMBIGUOUS_PANIC_TYPE:
      return "ERROR_AMBIGUOUS_PANIC_TYPE";
    case ErrorTag::ERROR_AMBIGUOUS_THROW_TYPE:
      return "ERROR_AMBIGUOUS_THROW_TYPE";
    case ErrorTag::ERROR_AMBIGUOUS_REFERENCE_TYPE:
      return "ERROR_AMBIGUOUS_REFERENCE_TYPE";
    case ErrorTag::ERROR_NONEXHAUSTIVE_MATCH_PATTERNS:
      return "ERROR_NONEXHAUSTIVE_MATCH_PATTERNS";
    case ErrorTag::ERROR_ILLEGAL_EMPTY_MATCHING:
      return "ERROR_ILLEGAL_EMPTY_MATCHING";
    case ErrorTag::ERROR_UNEXPECTED_PATTERN_FOR_TYPE:
      return "ERROR_UNEXPECTED_PATTERN_FOR_TYPE";
    case ErrorTag::ERROR_DUPLICATE_PATTERN_VARIABLE:
      return "ERROR_DUPLICATE_PATTERN_VARIABLE";
    case ErrorTag::ERROR_EXCEPTION_TYPE_NOT_DECLARED:
      return "ERROR_EXCEPTION_TYPE_NOT_DECLARED";
    case ErrorTag::ERROR_UNEXPECTED_SUBTYPE: return "ERROR_UNEXPECTED_SUBTYPE";
    case ErrorTag::ERROR_UNDEFINED_TYPE_VARIABLE:
      return "ERROR_UNDEFINED_TYPE_VARIABLE";
    case ErrorTag::ERROR_NOT_A_GENERIC_FUNCTION:
      return "ERROR_NOT_A_GENERIC_FUNCTION";
    case ErrorTag::ERROR_INCORRECT_NUMBER_OF_TYPE_ARGUMENTS:
      return "ERROR_INCORRECT_NUMBER_OF_TYPE_ARGUMENTS";
    case ErrorTag::ERROR_OCCURS_CHECK_INFINITE_TYPE:
      return "ERROR_OCCURS_CHECK_INFINITE_TYPE";
    case ErrorTag::ERROR_UNDEFINED_TYPE_ALIAS:
      return "ERROR_UNDEFINED_TYPE_ALIAS";
    case ErrorTag::ERROR_CYCLIC_TYPE_ALIAS: return "ERROR_CYCLIC_TYPE_ALIAS";
    case ErrorTag::ERROR_NOT_A_REFERENCE: return "ERROR_NOT_A_REFERENCE";
    case ErrorTag::ERROR_INCORRECT_ARITY_OF_MAIN:
      return "ERROR_INCORRECT_ARITY_OF_MAIN";
    case ErrorTag::ERROR_INCOMPATIBLE_EXTENSIONS:
      return "ERROR_INCOMPATIBLE_EXTENSIONS";
  }
  return "ERROR_UNKNOWN";
}

bool tag_from_name(const std::string& name, ErrorTag& out) {
  static const std::map<std::string, ErrorTag> table = [] {
    std::map<std::string, ErrorTag> m;
    for (int i = 0;
         i <= static_cast<int>(ErrorTag::ERROR_INCOMPATIBLE_EXTENSIONS); ++i) {
      auto t = static_cast<ErrorTag>(i);
      m[tag_name(t)] = t;
    }
    return m;
  }();
  auto it = table.find(name);
  if (it == table.end()) return false;
  out = it->second;
  return true;
}

}  // namespace stella
