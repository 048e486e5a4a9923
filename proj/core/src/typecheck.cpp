#include "stella/typecheck.hpp"

#include <algorithm>
#include <ostream>
#include <set>

#include "stella/matching.hpp"
#include "stella/poly.hpp"
#include "stella/pretty.hpp"
#include "stella/subtype.hpp"

namespace stella {

namespace {

// Highest metavariable id appearing anywhere in the program, so fresh
// metavariables never collide with parsed `auto`s.

std::int64_t max_meta_type(const TypePtr& t) {
  if (!t) return 0;
  std::int64_t m = t->kind == TypeKind::Meta ? t->meta_id : 0;
  for (const auto& p : t->params) m = std::max(m, max_meta_type(p));
  for (const auto& f : t->fields) m = std::max(m, max_meta_type(f.type));
  m = std::max(m, max_meta_type(t->inner));
  return m;
}

std::int64_t max_meta_pattern(const PatternPtr& p) {
  std::int64_t m = max_meta_type(p->type);
  for (const auto& a : p->args) m = std::max(m, max_meta_pattern(a));
  for (const auto& f : p->fields) m = std::max(m, max_meta_pattern(f.pat));
  return m;
}

std::int64_t max_meta_expr(const ExprPtr& e) {
  std::int64_t m = 0;
  for (const auto& a : e->args) m = std::max(m, max_meta_expr(a));
  for (const auto& p : e->params) m = std::max(m, max_meta_type(p.type));
  for (const auto& t : e->type_args) m = std::max(m, max_meta_type(t));
  for (const auto& f : e->fields) m = std::max(m, max_meta_expr(f.value));
  for (const auto& c : e->cases) {
    m = std::max(m, max_meta_pattern(c.pattern));
    // try-catch stores its handler elsewhere and leaves the body null
    if (c.body) m = std::max(m, max_meta_expr(c.body));
  }
  for (const auto& b : e->bindings) {
    m = std::max(m, max_meta_type(b.type));
    m = std::max(m, max_meta_expr(b.value));
  }
  return m;
}

std::int64_t max_meta_decl(const DeclPtr& d) {
  std::int64_t m = max_meta_type(d->type);
  for (const auto& p : d->params) m = std::max(m, max_meta_type(p.type));
  for (const auto& n : d->nested) m = std::max(m, max_meta_decl(n));
  if (d->body) m = std::max(m, max_meta_expr(d->body));
  return m;
}

std::int64_t max_meta_program(const Program& p) {
  std::int64_t m = 0;
  for (const auto& d : p.decls) m = std::max(m, max_meta_decl(d));
  return m;
}

}  // namespace

TypePtr ExceptionEnv::carrier() const {
  switch (mode) {
    case Mode::None:
      return nullptr;
    case Mode::Fixed:
      return fixed;
    case Mode::Open:
      return ty::variant(labels);
  }
  return nullptr;
}

TypeChecker::TypeChecker(const Program& program, TypeCheckOptions opts)
    : program_(program), opts_(opts) {
  subtyping_ = program_.has_extension("#structural-subtyping");
  reconstruction_ = program_.has_extension("#type-reconstruction");
  next_meta_ = max_meta_program(program_) + 1;
}

bool TypeChecker::enabled(const std::string& ext) const {
  return program_.has_extension(ext);
}

void TypeChecker::require(const std::string& ext, Span span) const {
  if (!opts_.gate_extensions || enabled(ext)) return;
  fail(ErrorTag::ERROR_EXTENSION_NOT_ENABLED,
       "this construct requires " + ext, span);
}

void TypeChecker::require_any(const std::string& a, const std::string& b,
                              Span span) const {
  if (!opts_.gate_extensions || enabled(a) || enabled(b)) return;
  fail(ErrorTag::ERROR_EXTENSION_NOT_ENABLED,
       "this construct requires " + a + " or " + b, span);
}

MatchingOptions TypeChecker::matching_options() const {
  MatchingOptions o;
  o.structural_patterns =
      !opts_.gate_extensions || enabled("#structural-patterns");
  o.natural_literals = !opts_.gate_extensions || enabled("#natural-literals");
  return o;
}

const TypePtr* TypeChecker::lookup_var(const std::string& name) const {
  for (auto it = vars_.rbegin(); it != vars_.rend(); ++it) {
    if (it->first == name) return &it->second;
  }
  return nullptr;
}

bool TypeChecker::type_var_in_scope(const std::string& name) const {
  return std::find(type_vars_.begin(), type_vars_.end(), name) !=
         type_vars_.end();
}

void TypeChecker::bind_var(const std::string& name, TypePtr type) {
  vars_.emplace_back(name, std::move(type));
}

void TypeChecker::declare_type_var(const std::string& name) {
  type_vars_.push_back(name);
}

TypePtr TypeChecker::fresh_meta() { return ty::meta(next_meta_++); }

// ---------------------------------------------------------------------------
// Annotations

TypePtr TypeChecker::resolve_annotation(const TypePtr& t, Span span) {
  std::set<std::string> bound(type_vars_.begin(), type_vars_.end());
  return resolve_annotation_rec(t, span, bound);
}

TypePtr TypeChecker::resolve_annotation_rec(const TypePtr& t, Span span,
                                            std::set<std::string>& bound) {
  switch (t->kind) {
    case TypeKind::Bool:
    case TypeKind::Nat:
      return t;
    case TypeKind::Unit:
      // only the `unit` literal is gated; the type may appear in
      // annotations of gated constructs such as variants
      return t;
    case TypeKind::Top:
      require_any("#top-type", "#structural-subtyping", span);
      return t;
    case TypeKind::Bot:
      require_any("#bottom-type", "#structural-subtyping", span);
      return t;
    case TypeKind::Meta:
      require("#type-reconstruction", span);
      return t;
    case TypeKind::Var:
    case TypeKind::Alias: {
      if (t->kind == TypeKind::Var && bound.count(t->name)) return t;
      auto cached = aliases_.find(t->name);
      if (cached != aliases_.end() && cached->second) return cached->second;
      if (cached != aliases_.end()) {
        // null entry marks an alias currently being expanded
        fail(ErrorTag::ERROR_CYCLIC_TYPE_ALIAS,
             "type alias '" + t->name + "' refers to itself", span);
      }
      auto raw = raw_aliases_.find(t->name);
      if (raw == raw_aliases_.end()) {
        if (t->kind == TypeKind::Alias || enabled("#type-aliases") ||
            !opts_.gate_extensions) {
          fail(ErrorTag::ERROR_UNDEFINED_TYPE_ALIAS,
               "undefined type '" + t->name + "'", span);
        }
        fail(ErrorTag::ERROR_UNDEFINED_TYPE_VARIABLE,
             "undefined type variable '" + t->name + "'", span);
      }
      aliases_[t->name] = nullptr;
      std::set<std::string> body_bound;
      TypePtr resolved =
          resolve_annotation_rec(raw->second, span, body_bound);
      aliases_[t->name] = resolved;
      return resolved;
    }
    case TypeKind::Fn: {
      if (t->params.size() != 1) require("#multiparameter-functions", span);
      std::vector<TypePtr> ps;
      for (const auto& p : t->params) {
        ps.push_back(resolve_annotation_rec(p, span, bound));
      }
      return ty::fn(std::move(ps), resolve_annotation_rec(t->inner, span, bound));
    }
    case TypeKind::Tuple: {
      if (t->params.size() == 2) {
        require_any("#pairs", "#tuples", span);
      } else {
        require("#tuples", span);
      }
      std::vector<TypePtr> ps;
      for (const auto& p : t->params) {
        ps.push_back(resolve_annotation_rec(p, span, bound));
      }
      return ty::tuple(std::move(ps));
    }
    case TypeKind::Record: {
      require("#records", span);
      std::vector<TypeField> fs;
      for (const auto& f : t->fields) {
        fs.push_back({f.label, resolve_annotation_rec(f.type, span, bound)});
      }
      return ty::record(std::move(fs));
    }
    case TypeKind::Sum: {
      require("#sum-types", span);
      return ty::sum(resolve_annotation_rec(t->params[0], span, bound),
                     resolve_annotation_rec(t->params[1], span, bound));
    }
    case TypeKind::Variant: {
      require("#variants", span);
      std::vector<TypeField> fs;
      for (const auto& f : t->fields) {
        fs.push_back({f.label, resolve_annotation_rec(f.type, span, bound)});
      }
      return ty::variant(std::move(fs));
    }
    case TypeKind::List: {
      require("#lists", span);
      return ty::list(resolve_annotation_rec(t->inner, span, bound));
    }
    case TypeKind::Ref: {
      require("#references", span);
      return ty::ref(resolve_annotation_rec(t->inner, span, bound));
    }
    case TypeKind::Forall: {
      require("#universal-types", span);
      std::vector<std::string> added;
      for (const auto& b : t->binders) {
        if (bound.insert(b).second) added.push_back(b);
      }
      TypePtr body = resolve_annotation_rec(t->inner, span, bound);
      for (const auto& b : added) bound.erase(b);
      return ty::forall(t->binders, body);
    }
    case TypeKind::Mu: {
      require("#recursive-types", span);
      bool added = bound.insert(t->name).second;
      TypePtr body = resolve_annotation_rec(t->inner, span, bound);
      if (added) bound.erase(t->name);
      return ty::mu(t->name, body);
    }
  }
  fail(ErrorTag::ERROR_UNEXPECTED_TYPE_FOR_EXPRESSION, "malformed type", span);
}

void TypeChecker::collect_aliases_and_exceptions() {
  for (const auto& d : program_.decls) {
    switch (d->kind) {
      case DeclKind::TypeAlias: {
        require("#type-aliases", d->span);
        if (raw_aliases_.count(d->name)) {
          fail(ErrorTag::ERROR_DUPLICATE_FUNCTION,
               "duplicate declaration of type '" + d->name + "'", d->span);
        }
        raw_aliases_[d->name] = d->type;
        break;
      }
      default:
        break;
    }
  }
  for (const auto& d : program_.decls) {
    switch (d->kind) {
      case DeclKind::ExceptionType: {
        require("#exception-type-declaration", d->span);
        if (exceptions_.mode != ExceptionEnv::Mode::None) {
          fail(ErrorTag::ERROR_INCOMPATIBLE_EXTENSIONS,
               "conflicting exception declarations", d->span);
        }
        exceptions_.mode = ExceptionEnv::Mode::Fixed;
        exceptions_.fixed = resolve_annotation(d->type, d->span);
        break;
      }
      case DeclKind::ExceptionVariant: {
        require("#open-variant-exceptions", d->span);
        if (exceptions_.mode == ExceptionEnv::Mode::Fixed) {
          fail(ErrorTag::ERROR_INCOMPATIBLE_EXTENSIONS,
               "conflicting exception declarations", d->span);
        }
        exceptions_.mode = ExceptionEnv::Mode::Open;
        for (const auto& f : exceptions_.labels) {
          if (f.label == d->name) {
            fail(ErrorTag::ERROR_UNEXPECTED_VARIANT_LABEL,
                 "duplicate exception variant '" + d->name + "'", d->span);
          }
        }
        exceptions_.labels.push_back(
            {d->name, resolve_annotation(d->type, d->span)});
        break;
      }
      default:
        break;
    }
  }
}

TypePtr TypeChecker::signature_of(const DeclPtr& d) {
  ScopeGuard scope(*this);
  for (const auto& b : d->generic_binders) type_vars_.push_back(b);
  if (!d->generic_binders.empty()) require("#universal-types", d->span);
  if (d->params.size() != 1) require("#multiparameter-functions", d->span);
  std::vector<TypePtr> ps;
  for (const auto& p : d->params) {
    ps.push_back(resolve_annotation(p.type, d->span));
  }
  TypePtr fn = ty::fn(std::move(ps), resolve_annotation(d->type, d->span));
  if (!d->generic_binders.empty()) {
    fn = ty::forall(d->generic_binders, fn);
  }
  return fn;
}

// ---------------------------------------------------------------------------
// Comparison under the active discipline

void TypeChecker::expect_type(const TypePtr& actual, const TypePtr& expected,
                              Span span) {
  if (reconstruction_) {
    constraints_.push_back({actual, expected, span});
    return;
  }
  if (subtyping_) {
    if (!is_subtype(actual, expected)) {
      fail(ErrorTag::ERROR_UNEXPECTED_SUBTYPE,
           type_to_string(actual) + " is not a subtype of " +
               type_to_string(expected),
           span);
    }
    return;
  }
  if (!type_eq(actual, expected)) {
    fail(ErrorTag::ERROR_UNEXPECTED_TYPE_FOR_EXPRESSION,
         "expected " + type_to_string(expected) + " but found " +
             type_to_string(actual),
         span);
  }
}

// ---------------------------------------------------------------------------
// Program-level checking

void TypeChecker::run() {
  if (enabled("#exceptions")) {
    bool fixed = enabled("#exception-type-declaration");
    bool open = enabled("#open-variant-exceptions");
    if (fixed == open) {
      fail(ErrorTag::ERROR_INCOMPATIBLE_EXTENSIONS,
           "#exceptions requires exactly one of #exception-type-declaration "
           "and #open-variant-exceptions");
    }
  }
  if (enabled("#type-reconstruction") && enabled("#structural-subtyping")) {
    fail(ErrorTag::ERROR_INCOMPATIBLE_EXTENSIONS,
         "#type-reconstruction and #structural-subtyping cannot be combined");
  }

  collect_aliases_and_exceptions();

  const DeclPtr* main_decl = nullptr;
  for (const auto& d : program_.decls) {
    if (d->kind != DeclKind::Function) continue;
    if (lookup_var(d->name)) {
      fail(ErrorTag::ERROR_DUPLICATE_FUNCTION,
           "duplicate declaration of function '" + d->name + "'", d->span);
    }
    bind_var(d->name, signature_of(d));
    if (d->name == "main") main_decl = &d;
  }

  if (!main_decl) {
    fail(ErrorTag::ERROR_MISSING_MAIN, "program has no main function");
  }
  if (!(*main_decl)->generic_binders.empty() ||
      (*main_decl)->params.size() != 1) {
    fail(ErrorTag::ERROR_INCORRECT_ARITY_OF_MAIN,
         "main must take exactly one parameter and must not be generic",
         (*main_decl)->span);
  }

  for (const auto& d : program_.decls) {
    if (d->kind == DeclKind::Function) check_function(d);
  }

  if (reconstruction_) {
    (void)unify(constraints_);
  }
}

void TypeChecker::check_function(const DeclPtr& d) {
  ScopeGuard scope(*this);
  for (const auto& b : d->generic_binders) type_vars_.push_back(b);
  for (const auto& p : d->params) {
    bind_var(p.name, resolve_annotation(p.type, d->span));
  }
  TypePtr ret = resolve_annotation(d->type, d->span);
  if (!d->nested.empty()) require("#nested-function-declarations", d->span);
  for (const auto& n : d->nested) {
    if (n->kind != DeclKind::Function) {
      fail(ErrorTag::ERROR_UNEXPECTED_TYPE_FOR_EXPRESSION,
           "only function declarations may be nested", n->span);
    }
    bind_var(n->name, signature_of(n));
  }
  for (const auto& n : d->nested) check_function(n);
  check(d->body, ret);
}

// ---------------------------------------------------------------------------
// Expression entry points

void TypeChecker::trace(const std::string& what) const {
  if (!opts_.trace || !opts_.trace_out) return;
  for (int i = 0; i < trace_depth_; ++i) *opts_.trace_out << "  ";
  *opts_.trace_out << what << "\n";
}

TypePtr TypeChecker::infer(const ExprPtr& e) {
  if (opts_.trace && opts_.trace_out) {
    trace("infer " + expr_to_string(e));
    ++trace_depth_;
    TypePtr t = infer_impl(e);
    --trace_depth_;
    trace("=> " + type_to_string(t));
    return t;
  }
  return infer_impl(e);
}

void TypeChecker::check(const ExprPtr& e, const TypePtr& expected) {
  if (opts_.trace && opts_.trace_out) {
    trace("check " + expr_to_string(e) + " : " + type_to_string(expected));
    ++trace_depth_;
    check_impl(e, expected);
    --trace_depth_;
    return;
  }
  check_impl(e, expected);
}

std::pair<TypePtr, std::vector<Constraint>> TypeChecker::generate_constraints(
    const ExprPtr& e, const TypePtr& expected) {
  std::size_t mark = constraints_.size();
  TypePtr t;
  if (expected) {
    check(e, expected);
    t = expected;
  } else {
    t = infer(e);
  }
  std::vector<Constraint> out(constraints_.begin() +
                                  static_cast<std::ptrdiff_t>(mark),
                              constraints_.end());
  return {t, std::move(out)};
}

// ---------------------------------------------------------------------------
// Synthesis

TypePtr TypeChecker::infer_impl(const ExprPtr& e) {
  switch (e->kind) {
    case ExprKind::Var: {
      const TypePtr* t = lookup_var(e->name);
      if (!t) {
        fail(ErrorTag::ERROR_UNDEFINED_VARIABLE,
             "undefined variable '" + e->name + "'", e->span);
      }
      return *t;
    }
    case ExprKind::True:
    case ExprKind::False:
      return ty::boolean();
    case ExprKind::Zero:
      return ty::nat();
    case ExprKind::NatLit:
      if (e->nat > 0) require("#natural-literals", e->span);
      return ty::nat();
    case ExprKind::Unit:
      require("#unit-type", e->span);
      return ty::unit();
    case ExprKind::Succ:
    case ExprKind::NatPred:
      check(e->args[0], ty::nat());
      return ty::nat();
    case ExprKind::NatIsZero:
      check(e->args[0], ty::nat());
      return ty::boolean();
    case ExprKind::NatRec: {
      check(e->args[0], ty::nat());
      TypePtr z = infer(e->args[1]);
      check(e->args[2], ty::fn({ty::nat()}, ty::fn({z}, z)));
      return z;
    }
    case ExprKind::If: {
      check(e->args[0], ty::boolean());
      TypePtr t = infer(e->args[1]);
      check(e->args[2], t);
      return t;
    }
    case ExprKind::Abstraction: {
      if (e->params.size() != 1) {
        require("#multiparameter-functions", e->span);
      }
      ScopeGuard scope(*this);
      std::vector<TypePtr> ps;
      for (const auto& p : e->params) {
        TypePtr ann = resolve_annotation(p.type, e->span);
        ps.push_back(ann);
        bind_var(p.name, ann);
      }
      TypePtr body = infer(e->args[0]);
      return ty::fn(std::move(ps), body);
    }
    case ExprKind::GenericAbstraction: {
      require("#universal-types", e->span);
      ScopeGuard scope(*this);
      for (const auto& b : e->binders) type_vars_.push_back(b);
      TypePtr inner = infer(e->args[0]);
      return ty::forall(e->binders, inner);
    }
    case ExprKind::Application: {
      TypePtr f = infer(e->args[0]);
      if (reconstruction_ && f->kind == TypeKind::Meta) {
        std::vector<TypePtr> ps;
        for (std::size_t i = 0; i < e->args.size() - 1; ++i) {
          ps.push_back(fresh_meta());
        }
        TypePtr ret = fresh_meta();
        constraints_.push_back({f, ty::fn(ps, ret), e->span});
        f = ty::fn(std::move(ps), ret);
      }
      if (f->kind != TypeKind::Fn) {
        fail(ErrorTag::ERROR_NOT_A_FUNCTION,
             "expression of type " + type_to_string(f) +
                 " is applied to arguments",
             e->span);
      }
      std::size_t given = e->args.size() - 1;
      if (f->params.size() != given) {
        fail(ErrorTag::ERROR_INCORRECT_NUMBER_OF_ARGUMENTS,
             "function expects " + std::to_string(f->params.size()) +
                 " arguments but got " + std::to_string(given),
             e->span);
      }
      if (given != 1) require("#multiparameter-functions", e->span);
      for (std::size_t i = 0; i < given; ++i) {
        check(e->args[i + 1], f->params[i]);
      }
      return f->inner;
    }
    case ExprKind::TypeApplication: {
      require("#universal-types", e->span);
      TypePtr f = infer(e->args[0]);
      if (f->kind != TypeKind::Forall) {
        fail(ErrorTag::ERROR_NOT_A_GENERIC_FUNCTION,
             "expression of type " + type_to_string(f) +
                 " is applied to type arguments",
             e->span);
      }
      if (f->binders.size() != e->type_args.size()) {
        fail(ErrorTag::ERROR_INCORRECT_NUMBER_OF_TYPE_ARGUMENTS,
             "expected " + std::to_string(f->binders.size()) +
                 " type arguments but got " +
                 std::to_string(e->type_args.size()),
             e->span);
      }
      TypeSubstitution subst;
      for (std::size_t i = 0; i < f->binders.size(); ++i) {
        subst[f->binders[i]] = resolve_annotation(e->type_args[i], e->span);
      }
      return substitute(f->inner, subst);
    }
    case ExprKind::Tuple: {
      if (e->args.size() == 2) {
        require_any("#pairs", "#tuples", e->span);
      } else {
        require("#tuples", e->span);
      }
      std::vector<TypePtr> ps;
      for (const auto& a : e->args) ps.push_back(infer(a));
      return ty::tuple(std::move(ps));
    }
    case ExprKind::TupleProj: {
      require_any("#pairs", "#tuples", e->span);
      TypePtr t = infer(e->args[0]);
      if (t->kind != TypeKind::Tuple) {
        fail(ErrorTag::ERROR_UNEXPECTED_TYPE_FOR_EXPRESSION,
             "cannot project component " + std::to_string(e->index) +
                 " out of type " + type_to_string(t),
             e->span);
      }
      if (e->index < 1 || e->index > t->params.size()) {
        fail(ErrorTag::ERROR_UNEXPECTED_TUPLE_LENGTH,
             "tuple of length " + std::to_string(t->params.size()) +
                 " has no component " + std::to_string(e->index),
             e->span);
      }
      return t->params[e->index - 1];
    }
    case ExprKind::Record: {
      require("#records", e->span);
      std::vector<TypeField> fs;
      for (const auto& f : e->fields) {
        for (const auto& g : fs) {
          if (g.label == f.label) {
            fail(ErrorTag::ERROR_UNEXPECTED_RECORD_FIELDS,
                 "duplicate record field '" + f.label + "'", e->span);
          }
        }
        fs.push_back({f.label, infer(f.value)});
      }
      return ty::record(std::move(fs));
    }
    case ExprKind::RecordProj: {
      require("#records", e->span);
      TypePtr t = infer(e->args[0]);
      if (t->kind != TypeKind::Record) {
        fail(ErrorTag::ERROR_UNEXPECTED_TYPE_FOR_EXPRESSION,
             "cannot project field '" + e->name + "' out of type " +
                 type_to_string(t),
             e->span);
      }
      const TypePtr* field = record_field(t, e->name);
      if (!field) {
        fail(ErrorTag::ERROR_MISSING_RECORD_FIELDS,
             "record type " + type_to_string(t) + " has no field '" +
                 e->name + "'",
             e->span);
      }
      return *field;
    }
    case ExprKind::Inl:
    case ExprKind::Inr: {
      require("#sum-types", e->span);
      if (reconstruction_) {
        TypePtr known = infer(e->args[0]);
        TypePtr other = fresh_meta();
        return e->kind == ExprKind::Inl ? ty::sum(known, other)
                                        : ty::sum(other, known);
      }
      fail(ErrorTag::ERROR_AMBIGUOUS_SUM_TYPE,
           "cannot infer the type of an injection; use a type annotation",
           e->span);
    }
    case ExprKind::Variant:
      require("#variants", e->span);
      fail(ErrorTag::ERROR_AMBIGUOUS_VARIANT_TYPE,
           "cannot infer the type of a variant; use a type annotation",
           e->span);
    case ExprKind::ListLit: {
      require("#lists", e->span);
      if (e->args.empty()) {
        if (reconstruction_) return ty::list(fresh_meta());
        fail(ErrorTag::ERROR_AMBIGUOUS_LIST_TYPE,
             "cannot infer the element type of an empty list", e->span);
      }
      TypePtr elem = infer(e->args[0]);
      for (std::size_t i = 1; i < e->args.size(); ++i) {
        check(e->args[i], elem);
      }
      return ty::list(elem);
    }
    case ExprKind::ConsList: {
      require("#lists", e->span);
      TypePtr elem = infer(e->args[0]);
      check(e->args[1], ty::list(elem));
      return ty::list(elem);
    }
    case ExprKind::ListHead:
    case ExprKind::ListTail:
    case ExprKind::ListIsEmpty: {
      require("#lists", e->span);
      TypePtr t = infer(e->args[0]);
      if (reconstruction_ && t->kind == TypeKind::Meta) {
        TypePtr elem = fresh_meta();
        constraints_.push_back({t, ty::list(elem), e->span});
        t = ty::list(elem);
      }
      if (t->kind != TypeKind::List) {
        fail(ErrorTag::ERROR_UNEXPECTED_TYPE_FOR_EXPRESSION,
             "expected a list but found " + type_to_string(t), e->span);
      }
      if (e->kind == ExprKind::ListHead) return t->inner;
      if (e->kind == ExprKind::ListTail) return t;
      return ty::boolean();
    }
    case ExprKind::Match:
      return check_match_expr(e, nullptr);
    case ExprKind::Let: {
      require("#let-bindings", e->span);
      ScopeGuard scope(*this);
      for (const auto& b : e->bindings) {
        bind_var(b.name, infer(b.value));
      }
      return infer(e->args[0]);
    }
    case ExprKind::LetRec: {
      require("#letrec-bindings", e->span);
      ScopeGuard scope(*this);
      std::vector<TypePtr> anns;
      for (const auto& b : e->bindings) {
        TypePtr ann = b.type ? resolve_annotation(b.type, e->span)
                             : (reconstruction_ ? fresh_meta() : nullptr);
        if (!ann) {
          fail(ErrorTag::ERROR_UNEXPECTED_TYPE_FOR_EXPRESSION,
               "letrec bindings require a type annotation", e->span);
        }
        anns.push_back(ann);
        bind_var(b.name, ann);
      }
      for (std::size_t i = 0; i < e->bindings.size(); ++i) {
        check(e->bindings[i].value, anns[i]);
      }
      return infer(e->args[0]);
    }
    case ExprKind::Ascription: {
      require("#type-ascriptions", e->span);
      TypePtr t = resolve_annotation(e->type_args[0], e->span);
      check(e->args[0], t);
      return t;
    }
    case ExprKind::Sequence:
      return infer_sequence(e, nullptr);
    case ExprKind::NewRef:
    case ExprKind::Deref:
    case ExprKind::Assign:
      return infer_ref_op(e);
    case ExprKind::Panic:
    case ExprKind::Throw:
    case ExprKind::TryWith:
    case ExprKind::TryCatch:
      return infer_exception_op(e, nullptr);
    case ExprKind::CastAs: {
      require("#type-cast", e->span);
      TypePtr target = resolve_annotation(e->type_args[0], e->span);
      return check_cast(e->args[0], target, e->span);
    }
    case ExprKind::Fix: {
      require("#general-recursion", e->span);
      TypePtr t = infer(e->args[0]);
      if (reconstruction_ && t->kind == TypeKind::Meta) {
        TypePtr a = fresh_meta();
        constraints_.push_back({t, ty::fn({a}, a), e->span});
        return a;
      }
      if (t->kind != TypeKind::Fn) {
        fail(ErrorTag::ERROR_NOT_A_FUNCTION,
             "fix expects a function but found " + type_to_string(t),
             e->span);
      }
      if (t->params.size() != 1) {
        fail(ErrorTag::ERROR_INCORRECT_NUMBER_OF_ARGUMENTS,
             "fix expects a one-argument function", e->span);
      }
      expect_type(t->inner, t->params[0], e->span);
      return t->params[0];
    }
    case ExprKind::Fold: {
      require("#recursive-types", e->span);
      TypePtr m = resolve_annotation(e->type_args[0], e->span);
      if (m->kind != TypeKind::Mu) {
        fail(ErrorTag::ERROR_UNEXPECTED_TYPE_FOR_EXPRESSION,
             "fold expects a recursive type annotation", e->span);
      }
      TypeSubstitution subst{{m->name, m}};
      check(e->args[0], substitute(m->inner, subst));
      return m;
    }
    case ExprKind::Unfold: {
      require("#recursive-types", e->span);
      TypePtr m = resolve_annotation(e->type_args[0], e->span);
      if (m->kind != TypeKind::Mu) {
        fail(ErrorTag::ERROR_UNEXPECTED_TYPE_FOR_EXPRESSION,
             "unfold expects a recursive type annotation", e->span);
      }
      check(e->args[0], m);
      TypeSubstitution subst{{m->name, m}};
      return substitute(m->inner, subst);
    }
  }
  fail(ErrorTag::ERROR_UNEXPECTED_TYPE_FOR_EXPRESSION, "malformed expression",
       e->span);
}

// ---------------------------------------------------------------------------
// Checking

void TypeChecker::check_impl(const ExprPtr& e, const TypePtr& expected) {
  switch (e->kind) {
    case ExprKind::Abstraction: {
      TypePtr want = expected;
      if (reconstruction_ && want->kind == TypeKind::Meta) {
        std::vector<TypePtr> ps;
        for (std::size_t i = 0; i < e->params.size(); ++i) {
          ps.push_back(fresh_meta());
        }
        TypePtr ret = fresh_meta();
        TypePtr fn = ty::fn(ps, ret);
        constraints_.push_back({want, fn, e->span});
        want = fn;
      }
      if (want->kind != TypeKind::Fn) {
        fail(ErrorTag::ERROR_UNEXPECTED_LAMBDA,
             "expected an expression of type " + type_to_string(want) +
                 " but found an anonymous function",
             e->span);
      }
      if (want->params.size() != e->params.size()) {
        fail(ErrorTag::ERROR_INCORRECT_NUMBER_OF_ARGUMENTS,
             "expected a function of " + std::to_string(want->params.size()) +
                 " parameters but found one of " +
                 std::to_string(e->params.size()),
             e->span);
      }
      if (e->params.size() != 1) {
        require("#multiparameter-functions", e->span);
      }
      ScopeGuard scope(*this);
      for (std::size_t i = 0; i < e->params.size(); ++i) {
        TypePtr ann = resolve_annotation(e->params[i].type, e->span);
        // contravariance: the declared parameter must accept every value
        // the expected parameter type can supply
        expect_type(want->params[i], ann, e->span);
        bind_var(e->params[i].name, ann);
      }
      check(e->args[0], want->inner);
      return;
    }
    case ExprKind::If: {
      check(e->args[0], ty::boolean());
      check(e->args[1], expected);
      check(e->args[2], expected);
      return;
    }
    case ExprKind::Tuple: {
      TypePtr want = expected;
      if (reconstruction_ && want->kind == TypeKind::Meta) {
        std::vector<TypePtr> ps;
        for (std::size_t i = 0; i < e->args.size(); ++i) {
          ps.push_back(fresh_meta());
        }
        TypePtr t = ty::tuple(ps);
        constraints_.push_back({want, t, e->span});
        want = t;
      }
      if (want->kind != TypeKind::Tuple) break;
      if (e->args.size() == 2) {
        require_any("#pairs", "#tuples", e->span);
      } else {
        require("#tuples", e->span);
      }
      if (want->params.size() != e->args.size()) {
        fail(ErrorTag::ERROR_UNEXPECTED_TUPLE_LENGTH,
             "expected a tuple of length " +
                 std::to_string(want->params.size()) + " but found one of " +
                 std::to_string(e->args.size()),
             e->span);
      }
      for (std::size_t i = 0; i < e->args.size(); ++i) {
        check(e->args[i], want->params[i]);
      }
      return;
    }
    case ExprKind::Record: {
      if (expected->kind != TypeKind::Record) break;
      require("#records", e->span);
      for (std::size_t i = 0; i < e->fields.size(); ++i) {
        for (std::size_t j = i + 1; j < e->fields.size(); ++j) {
          if (e->fields[i].label == e->fields[j].label) {
            fail(ErrorTag::ERROR_UNEXPECTED_RECORD_FIELDS,
                 "duplicate record field '" + e->fields[i].label + "'",
                 e->span);
          }
        }
      }
      for (const auto& want : expected->fields) {
        bool found = false;
        for (const auto& f : e->fields) {
          if (f.label == want.label) {
            check(f.value, want.type);
            found = true;
            break;
          }
        }
        if (!found) {
          fail(ErrorTag::ERROR_MISSING_RECORD_FIELDS,
               "missing record field '" + want.label + "'", e->span);
        }
      }
      for (const auto& f : e->fields) {
        if (record_field(expected, f.label)) continue;
        if (!subtyping_) {
          fail(ErrorTag::ERROR_UNEXPECTED_RECORD_FIELDS,
               "unexpected record field '" + f.label + "'", e->span);
        }
        (void)infer(f.value);
      }
      if (!subtyping_ && expected->fields.size() == e->fields.size()) {
        for (std::size_t i = 0; i < e->fields.size(); ++i) {
          if (e->fields[i].label != expected->fields[i].label) {
            fail(ErrorTag::ERROR_UNEXPECTED_TYPE_FOR_EXPRESSION,
                 "record fields are not in the declared order", e->span);
          }
        }
      }
      return;
    }
    case ExprKind::Inl:
    case ExprKind::Inr: {
      require("#sum-types", e->span);
      TypePtr want = expected;
      if (reconstruction_ && want->kind == TypeKind::Meta) {
        TypePtr s = ty::sum(fresh_meta(), fresh_meta());
        constraints_.push_back({want, s, e->span});
        want = s;
      }
      if (want->kind != TypeKind::Sum) {
        fail(ErrorTag::ERROR_UNEXPECTED_TYPE_FOR_EXPRESSION,
             "expected " + type_to_string(want) +
                 " but found a sum injection",
             e->span);
      }
      check(e->args[0],
            e->kind == ExprKind::Inl ? want->params[0] : want->params[1]);
      return;
    }
    case ExprKind::Variant: {
      require("#variants", e->span);
      if (expected->kind == TypeKind::Meta) {
        fail(ErrorTag::ERROR_AMBIGUOUS_VARIANT_TYPE,
             "cannot infer the type of a variant; use a type annotation",
             e->span);
      }
      if (expected->kind != TypeKind::Variant) {
        fail(ErrorTag::ERROR_UNEXPECTED_TYPE_FOR_EXPRESSION,
             "expected " + type_to_string(expected) + " but found a variant",
             e->span);
      }
      const TypePtr* field = record_field(expected, e->name);
      if (!field) {
        fail(ErrorTag::ERROR_UNEXPECTED_VARIANT_LABEL,
             "variant type " + type_to_string(expected) +
                 " has no label '" + e->name + "'",
             e->span);
      }
      check(e->args[0], *field);
      return;
    }
    case ExprKind::ListLit: {
      require("#lists", e->span);
      TypePtr want = expected;
      if (reconstruction_ && want->kind == TypeKind::Meta) {
        TypePtr l = ty::list(fresh_meta());
        constraints_.push_back({want, l, e->span});
        want = l;
      }
      if (want->kind != TypeKind::List) {
        fail(ErrorTag::ERROR_UNEXPECTED_TYPE_FOR_EXPRESSION,
             "expected " + type_to_string(want) + " but found a list",
             e->span);
      }
      for (const auto& a : e->args) check(a, want->inner);
      return;
    }
    case ExprKind::ConsList: {
      require("#lists", e->span);
      TypePtr want = expected;
      if (reconstruction_ && want->kind == TypeKind::Meta) {
        TypePtr l = ty::list(fresh_meta());
        constraints_.push_back({want, l, e->span});
        want = l;
      }
      if (want->kind != TypeKind::List) {
        fail(ErrorTag::ERROR_UNEXPECTED_TYPE_FOR_EXPRESSION,
             "expected " + type_to_string(want) + " but found a list",
             e->span);
      }
      check(e->args[0], want->inner);
      check(e->args[1], want);
      return;
    }
    case ExprKind::Match:
      (void)check_match_expr(e, expected);
      return;
    case ExprKind::Let: {
      require("#let-bindings", e->span);
      ScopeGuard scope(*this);
      for (const auto& b : e->bindings) {
        bind_var(b.name, infer(b.value));
      }
      check(e->args[0], expected);
      return;
    }
    case ExprKind::LetRec: {
      require("#letrec-bindings", e->span);
      ScopeGuard scope(*this);
      std::vector<TypePtr> anns;
      for (const auto& b : e->bindings) {
        TypePtr ann = b.type ? resolve_annotation(b.type, e->span)
                             : (reconstruction_ ? fresh_meta() : nullptr);
        if (!ann) {
          fail(ErrorTag::ERROR_UNEXPECTED_TYPE_FOR_EXPRESSION,
               "letrec bindings require a type annotation", e->span);
        }
        anns.push_back(ann);
        bind_var(b.name, ann);
      }
      for (std::size_t i = 0; i < e->bindings.size(); ++i) {
        check(e->bindings[i].value, anns[i]);
      }
      check(e->args[0], expected);
      return;
    }
    case ExprKind::Sequence:
      (void)infer_sequence(e, expected);
      return;
    case ExprKind::NewRef:
      check_ref_op(e, expected);
      return;
    case ExprKind::Panic:
    case ExprKind::Throw:
    case ExprKind::TryWith:
    case ExprKind::TryCatch:
      (void)infer_exception_op(e, expected);
      return;
    case ExprKind::Fix: {
      require("#general-recursion", e->span);
      check(e->args[0], ty::fn({expected}, expected));
      return;
    }
    default:
      break;
  }
  TypePtr t = infer_impl(e);
  expect_type(t, expected, e->span);
}

// ---------------------------------------------------------------------------
// Match expressions

TypePtr TypeChecker::check_match_expr(const ExprPtr& e,
                                      const TypePtr& expected) {
  TypePtr scrutinee = infer(e->args[0]);
  if (e->cases.empty()) {
    fail(ErrorTag::ERROR_ILLEGAL_EMPTY_MATCHING,
         "match expression has no cases", e->span);
  }
  MatchingOptions opts = matching_options();
  TypePtr result = expected;
  for (const auto& c : e->cases) {
    ScopeGuard scope(*this);
    for (auto& [name, type] : pattern_bindings(c.pattern, scrutinee, opts)) {
      bind_var(name, type);
    }
    if (result) {
      check(c.body, result);
    } else {
      result = infer(c.body);
    }
  }
  std::vector<PatternPtr> patterns;
  bool all_simple = true;
  for (const auto& c : e->cases) {
    patterns.push_back(c.pattern);
    if (!pattern_is_simple(c.pattern)) all_simple = false;
  }
  // exhaustiveness is only decided for simple patterns; nested matches rely
  // on a catch-all or fail at run time
  if (all_simple && scrutinee->kind != TypeKind::Meta &&
      !is_exhaustive(scrutinee, patterns)) {
    fail(ErrorTag::ERROR_NONEXHAUSTIVE_MATCH_PATTERNS,
         "match on " + type_to_string(scrutinee) +
             " does not cover all values",
         e->span);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Casts

TypePtr TypeChecker::check_cast(const ExprPtr& e, const TypePtr& target,
                                Span span) {
  TypePtr from = infer(e);
  if (reconstruction_) {
    constraints_.push_back({from, target, span});
    return target;
  }
  if (!is_subtype(from, target) && !is_subtype(target, from)) {
    fail(ErrorTag::ERROR_UNEXPECTED_SUBTYPE,
         type_to_string(from) + " and " + type_to_string(target) +
             " are unrelated types",
         span);
  }
  return target;
}

void typecheck_program(const Program& p, TypeCheckOptions opts) {
  TypeChecker checker(p, opts);
  checker.run();
}

}  // namespace stella
