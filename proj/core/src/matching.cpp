#include "stella/matching.hpp"

#include <algorithm>
#include <set>

namespace stella {

namespace {

[[noreturn]] void shape_error(const PatternPtr& p, const TypePtr& t) {
  fail(ErrorTag::ERROR_UNEXPECTED_PATTERN_FOR_TYPE,
       "pattern does not match the scrutinee type", p->span);
}

void bindings_rec(const PatternPtr& p, const TypePtr& t,
                  const MatchingOptions& opts, int depth, BindingSet& out) {
  // A constructor child deeper than a variable/wildcard needs
  // #structural-patterns.
  if (depth > 0 && !opts.structural_patterns &&
      p->kind != PatternKind::Var && p->kind != PatternKind::Wildcard) {
    fail(ErrorTag::ERROR_EXTENSION_NOT_ENABLED,
         "nested patterns require #structural-patterns", p->span);
  }
  switch (p->kind) {
    case PatternKind::Var:
      for (const auto& [name, type] : out) {
        (void)type;
        if (name == p->name) {
          fail(ErrorTag::ERROR_DUPLICATE_PATTERN_VARIABLE,
               "pattern variable '" + p->name + "' is bound twice", p->span);
        }
      }
      out.emplace_back(p->name, t);
      return;
    case PatternKind::Wildcard:
      return;
    case PatternKind::True:
    case PatternKind::False:
      if (t->kind != TypeKind::Bool) shape_error(p, t);
      return;
    case PatternKind::Zero:
      if (t->kind != TypeKind::Nat) shape_error(p, t);
      return;
    case PatternKind::Int:
      if (!opts.natural_literals) {
        fail(ErrorTag::ERROR_EXTENSION_NOT_ENABLED,
             "numeric patterns require #natural-literals", p->span);
      }
      if (t->kind != TypeKind::Nat) shape_error(p, t);
      return;
    case PatternKind::Succ:
      if (t->kind != TypeKind::Nat) shape_error(p, t);
      bindings_rec(p->args[0], t, opts, depth + 1, out);
      return;
    case PatternKind::Unit:
      if (t->kind != TypeKind::Unit) shape_error(p, t);
      return;
    case PatternKind::Inl:
      if (t->kind != TypeKind::Sum) shape_error(p, t);
      bindings_rec(p->args[0], t->params[0], opts, depth + 1, out);
      return;
    case PatternKind::Inr:
      if (t->kind != TypeKind::Sum) shape_error(p, t);
      bindings_rec(p->args[0], t->params[1], opts, depth + 1, out);
      return;
    case PatternKind::Variant: {
      if (t->kind != TypeKind::Variant) shape_error(p, t);
      const TypePtr* field = record_field(t, p->name);
      if (!field) {
        fail(ErrorTag::ERROR_UNEXPECTED_PATTERN_FOR_TYPE,
             "variant label '" + p->name + "' is not part of the scrutinee type",
             p->span);
      }
      bindings_rec(p->args[0], *field, opts, depth + 1, out);
      return;
    }
    case PatternKind::Tuple: {
      if (t->kind != TypeKind::Tuple || t->params.size() != p->args.size()) {
        shape_error(p, t);
      }
      for (std::size_t i = 0; i < p->args.size(); ++i) {
        bindings_rec(p->args[i], t->params[i], opts, depth + 1, out);
      }
      return;
    }
    case PatternKind::Record: {
      if (t->kind != TypeKind::Record) shape_error(p, t);
      std::set<std::string> labels;
      for (const auto& f : p->fields) labels.insert(f.label);
      if (labels.size() != t->fields.size()) shape_error(p, t);
      for (const auto& f : p->fields) {
        const TypePtr* field = record_field(t, f.label);
        if (!field) shape_error(p, t);
        bindings_rec(f.pat, *field, opts, depth + 1, out);
      }
      return;
    }
    case PatternKind::List: {
      if (t->kind != TypeKind::List) shape_error(p, t);
      for (const auto& elem : p->args) {
        bindings_rec(elem, t->inner, opts, depth + 1, out);
      }
      return;
    }
    case PatternKind::Cons: {
      if (t->kind != TypeKind::List) shape_error(p, t);
      bindings_rec(p->args[0], t->inner, opts, depth + 1, out);
      bindings_rec(p->args[1], t, opts, depth + 1, out);
      return;
    }
    case PatternKind::Ascription: {
      // the ascribed type must match the scrutinee type exactly; treated as
      // a nested form for gating purposes
      if (!opts.structural_patterns) {
        fail(ErrorTag::ERROR_EXTENSION_NOT_ENABLED,
             "pattern ascriptions require #structural-patterns", p->span);
      }
      bindings_rec(p->args[0], t, opts, depth, out);
      return;
    }
  }
}

bool leaf_or_absent(const PatternPtr& p) {
  return p->kind == PatternKind::Var || p->kind == PatternKind::Wildcard;
}

}  // namespace

BindingSet pattern_bindings(const PatternPtr& p, const TypePtr& t,
                            const MatchingOptions& opts) {
  BindingSet out;
  bindings_rec(p, t, opts, 0, out);
  return out;
}

bool is_exhaustive(const TypePtr& t, const std::vector<PatternPtr>& patterns) {
  for (const auto& p : patterns) {
    if (leaf_or_absent(p)) return true;
  }
  switch (t->kind) {
    case TypeKind::Bool: {
      bool has_true = false, has_false = false;
      for (const auto& p : patterns) {
        if (p->kind == PatternKind::True) has_true = true;
        if (p->kind == PatternKind::False) has_false = true;
      }
      return has_true && has_false;
    }
    case TypeKind::Nat: {
      // literals cover single values only; zero plus a succ-of-variable
      // covers everything
      bool has_zero = false, has_succ = false;
      for (const auto& p : patterns) {
        if (p->kind == PatternKind::Zero) has_zero = true;
        if (p->kind == PatternKind::Succ && leaf_or_absent(p->args[0])) {
          has_succ = true;
        }
      }
      return has_zero && has_succ;
    }
    case TypeKind::Unit:
      for (const auto& p : patterns) {
        if (p->kind == PatternKind::Unit) return true;
      }
      return false;
    case TypeKind::Sum: {
      bool has_inl = false, has_inr = false;
      for (const auto& p : patterns) {
        if (p->kind == PatternKind::Inl && leaf_or_absent(p->args[0])) {
          has_inl = true;
        }
        if (p->kind == PatternKind::Inr && leaf_or_absent(p->args[0])) {
          has_inr = true;
        }
      }
      return has_inl && has_inr;
    }
    case TypeKind::Variant: {
      for (const auto& f : t->fields) {
        bool covered = false;
        for (const auto& p : patterns) {
          if (p->kind == PatternKind::Variant && p->name == f.label &&
              leaf_or_absent(p->args[0])) {
            covered = true;
            break;
          }
        }
        if (!covered) return false;
      }
      return true;
    }
    case TypeKind::List: {
      // needs the empty list and a cons with variable/wildcard parts
      bool has_empty = false, has_cons = false;
      for (const auto& p : patterns) {
        if (p->kind == PatternKind::List && p->args.empty()) has_empty = true;
        if (p->kind == PatternKind::Cons && leaf_or_absent(p->args[0]) &&
            leaf_or_absent(p->args[1])) {
          has_cons = true;
        }
      }
      return has_empty && has_cons;
    }
    case TypeKind::Tuple:
      for (const auto& p : patterns) {
        if (p->kind == PatternKind::Tuple &&
            p->args.size() == t->params.size() &&
            std::all_of(p->args.begin(), p->args.end(), leaf_or_absent)) {
          return true;
        }
      }
      return false;
    case TypeKind::Record:
      for (const auto& p : patterns) {
        if (p->kind != PatternKind::Record) continue;
        if (p->fields.size() != t->fields.size()) continue;
        bool all_leaf = std::all_of(
            p->fields.begin(), p->fields.end(),
            [](const PatternField& f) { return leaf_or_absent(f.pat); });
        if (all_leaf) return true;
      }
      return false;
    default:
      // function/reference/universal scrutinees are only covered by a
      // variable or wildcard, handled above
      return false;
  }
}

}  // namespace stella
