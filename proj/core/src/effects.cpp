#include "stella/matching.hpp"
#include "stella/pretty.hpp"
#include "stella/typecheck.hpp"

namespace stella {

// Scope restoration for pattern bindings in try-catch handlers lives in
// typecheck.cpp; here we only add and let the caller's guard pop.

TypePtr TypeChecker::exception_carrier(Span span) const {
  TypePtr t = exceptions_.carrier();
  if (!t) {
    fail(ErrorTag::ERROR_EXCEPTION_TYPE_NOT_DECLARED,
         "no exception type has been declared", span);
  }
  return t;
}

TypePtr TypeChecker::infer_ref_op(const ExprPtr& e) {
  require("#references", e->span);
  switch (e->kind) {
    case ExprKind::NewRef:
      return ty::ref(infer(e->args[0]));
    case ExprKind::Deref: {
      TypePtr t = infer(e->args[0]);
      if (reconstruction_ && t->kind == TypeKind::Meta) {
        TypePtr elem = fresh_meta();
        constraints_.push_back({t, ty::ref(elem), e->span});
        return elem;
      }
      if (t->kind != TypeKind::Ref) {
        fail(ErrorTag::ERROR_NOT_A_REFERENCE,
             "cannot dereference an expression of type " + type_to_string(t),
             e->span);
      }
      return t->inner;
    }
    case ExprKind::Assign: {
      TypePtr t = infer(e->args[0]);
      if (reconstruction_ && t->kind == TypeKind::Meta) {
        TypePtr elem = fresh_meta();
        constraints_.push_back({t, ty::ref(elem), e->span});
        t = ty::ref(elem);
      }
      if (t->kind != TypeKind::Ref) {
        fail(ErrorTag::ERROR_NOT_A_REFERENCE,
             "cannot assign to an expression of type " + type_to_string(t),
             e->span);
      }
      check(e->args[1], t->inner);
      return ty::unit();
    }
    default:
      break;
  }
  fail(ErrorTag::ERROR_UNEXPECTED_TYPE_FOR_EXPRESSION, "malformed expression",
       e->span);
}

void TypeChecker::check_ref_op(const ExprPtr& e, const TypePtr& expected) {
  require("#references", e->span);
  TypePtr want = expected;
  if (reconstruction_ && want->kind == TypeKind::Meta) {
    TypePtr r = ty::ref(fresh_meta());
    constraints_.push_back({want, r, e->span});
    want = r;
  }
  if (want->kind == TypeKind::Ref) {
    check(e->args[0], want->inner);
    return;
  }
  // against Top and friends, fall back to synthesis
  expect_type(infer_ref_op(e), want, e->span);
}

TypePtr TypeChecker::infer_sequence(const ExprPtr& e, const TypePtr& expected) {
  require("#sequencing", e->span);
  check(e->args[0], ty::unit());
  if (expected) {
    check(e->args[1], expected);
    return expected;
  }
  return infer(e->args[1]);
}

TypePtr TypeChecker::infer_exception_op(const ExprPtr& e,
                                        const TypePtr& expected) {
  switch (e->kind) {
    case ExprKind::Panic: {
      require("#panic", e->span);
      if (expected) return expected;
      if (reconstruction_) return fresh_meta();
      fail(ErrorTag::ERROR_AMBIGUOUS_PANIC_TYPE,
           "cannot infer the type of panic!; use a type annotation", e->span);
    }
    case ExprKind::Throw: {
      require("#exceptions", e->span);
      check(e->args[0], exception_carrier(e->span));
      if (expected) return expected;
      if (reconstruction_) return fresh_meta();
      fail(ErrorTag::ERROR_AMBIGUOUS_THROW_TYPE,
           "cannot infer the type of throw; use a type annotation", e->span);
    }
    case ExprKind::TryWith: {
      require("#exceptions", e->span);
      TypePtr result = expected;
      if (result) {
        check(e->args[0], result);
      } else {
        result = infer(e->args[0]);
      }
      check(e->args[1], result);
      return result;
    }
    case ExprKind::TryCatch: {
      require("#exceptions", e->span);
      TypePtr result = expected;
      if (result) {
        check(e->args[0], result);
      } else {
        result = infer(e->args[0]);
      }
      TypePtr carrier = exception_carrier(e->span);
      ScopeGuard scope(*this);
      for (auto& [name, type] :
           pattern_bindings(e->cases[0].pattern, carrier, matching_options())) {
        bind_var(name, type);
      }
      check(e->args[1], result);
      return result;
    }
    default:
      break;
  }
  fail(ErrorTag::ERROR_UNEXPECTED_TYPE_FOR_EXPRESSION, "malformed expression",
       e->span);
}

}  // namespace stella
