#include "stella/reconstruct.hpp"

#include "stella/poly.hpp"
#include "stella/pretty.hpp"

namespace stella {

namespace {

TypePtr walk(const TypePtr& t, const Substitution& s) {
  TypePtr cur = t;
  while (cur->kind == TypeKind::Meta) {
    auto it = s.find(cur->meta_id);
    if (it == s.end()) break;
    cur = it->second;
  }
  return cur;
}

bool occurs(std::int64_t id, const TypePtr& t, const Substitution& s) {
  TypePtr r = walk(t, s);
  if (r->kind == TypeKind::Meta) return r->meta_id == id;
  for (const auto& p : r->params) {
    if (occurs(id, p, s)) return true;
  }
  for (const auto& f : r->fields) {
    if (occurs(id, f.type, s)) return true;
  }
  if (r->inner && occurs(id, r->inner, s)) return true;
  return false;
}

void unify_one(const TypePtr& a, const TypePtr& b, Span origin,
               Substitution& s) {
  TypePtr l = walk(a, s);
  TypePtr r = walk(b, s);
  if (l->kind == TypeKind::Meta && r->kind == TypeKind::Meta &&
      l->meta_id == r->meta_id) {
    return;
  }
  if (l->kind == TypeKind::Meta || r->kind == TypeKind::Meta) {
    if (r->kind == TypeKind::Meta) std::swap(l, r);
    if (occurs(l->meta_id, r, s)) {
      fail(ErrorTag::ERROR_OCCURS_CHECK_INFINITE_TYPE,
           "cannot construct the infinite type " + type_to_string(l) + " = " +
               type_to_string(r),
           origin);
    }
    s[l->meta_id] = r;
    return;
  }
  auto clash = [&]() {
    fail(ErrorTag::ERROR_UNEXPECTED_TYPE_FOR_EXPRESSION,
         "cannot unify " + type_to_string(l) + " with " + type_to_string(r),
         origin);
  };
  if (l->kind != r->kind) clash();
  switch (l->kind) {
    case TypeKind::Bool:
    case TypeKind::Nat:
    case TypeKind::Unit:
    case TypeKind::Top:
    case TypeKind::Bot:
      return;
    case TypeKind::Var:
    case TypeKind::Alias:
      if (l->name != r->name) clash();
      return;
    case TypeKind::Fn:
    case TypeKind::Tuple:
    case TypeKind::Sum: {
      if (l->params.size() != r->params.size()) clash();
      for (std::size_t i = 0; i < l->params.size(); ++i) {
        unify_one(l->params[i], r->params[i], origin, s);
      }
      if ((l->inner == nullptr) != (r->inner == nullptr)) clash();
      if (l->inner) unify_one(l->inner, r->inner, origin, s);
      return;
    }
    case TypeKind::Record:
    case TypeKind::Variant: {
      if (l->fields.size() != r->fields.size()) clash();
      for (std::size_t i = 0; i < l->fields.size(); ++i) {
        if (l->fields[i].label != r->fields[i].label) clash();
        unify_one(l->fields[i].type, r->fields[i].type, origin, s);
      }
      return;
    }
    case TypeKind::List:
    case TypeKind::Ref:
      unify_one(l->inner, r->inner, origin, s);
      return;
    case TypeKind::Forall:
    case TypeKind::Mu:
      // reconstruction does not look under quantifiers; exact equality only
      if (!alpha_eq(l, r)) clash();
      return;
    case TypeKind::Meta:
      return;  // unreachable
  }
}

}  // namespace

Substitution unify(const std::vector<Constraint>& constraints) {
  Substitution s;
  for (const auto& c : constraints) {
    unify_one(c.left, c.right, c.origin, s);
  }
  return s;
}

TypePtr apply_substitution(const TypePtr& t, const Substitution& s) {
  TypePtr r = walk(t, s);
  Type out = *r;
  bool changed = r != t;
  for (auto& p : out.params) {
    TypePtr q = apply_substitution(p, s);
    if (q != p) changed = true;
    p = q;
  }
  for (auto& f : out.fields) {
    TypePtr q = apply_substitution(f.type, s);
    if (q != f.type) changed = true;
    f.type = q;
  }
  if (out.inner) {
    TypePtr q = apply_substitution(out.inner, s);
    if (q != out.inner) changed = true;
    out.inner = q;
  }
  if (!changed) return t;
  return std::make_shared<Type>(std::move(out));
}

bool contains_meta(const TypePtr& t) {
  if (t->kind == TypeKind::Meta) return true;
  for (const auto& p : t->params) {
    if (contains_meta(p)) return true;
  }
  for (const auto& f : t->fields) {
    if (contains_meta(f.type)) return true;
  }
  return t->inner && contains_meta(t->inner);
}

}  // namespace stella
