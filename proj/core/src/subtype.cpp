#include "stella/subtype.hpp"

#include <string>
#include <utility>
#include <vector>

#include "stella/poly.hpp"

namespace stella {

namespace {

struct BinderEnv {
  std::vector<std::pair<std::string, std::string>> pairs;

  bool vars_equal(const std::string& l, const std::string& r) const {
    for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
      if (it->first == l || it->second == r) {
        return it->first == l && it->second == r;
      }
    }
    return l == r;
  }

  // Contravariant positions swap which operand is "left"; the binder
  // correspondence has to swap with them.
  void swap_sides() {
    for (auto& p : pairs) std::swap(p.first, p.second);
  }
};

bool subtype_rec(const TypePtr& s, const TypePtr& t, BinderEnv& env);

bool flipped_subtype_rec(const TypePtr& s, const TypePtr& t, BinderEnv& env) {
  env.swap_sides();
  bool r = subtype_rec(s, t, env);
  env.swap_sides();
  return r;
}

bool equiv_rec(const TypePtr& a, const TypePtr& b, BinderEnv& env) {
  return subtype_rec(a, b, env) && flipped_subtype_rec(b, a, env);
}

bool subtype_rec(const TypePtr& s, const TypePtr& t, BinderEnv& env) {
  if (t->kind == TypeKind::Top) return true;
  if (s->kind == TypeKind::Bot) return true;
  if (s->kind == TypeKind::Var || t->kind == TypeKind::Var) {
    return s->kind == t->kind && env.vars_equal(s->name, t->name);
  }
  if (s->kind != t->kind) return false;
  switch (s->kind) {
    case TypeKind::Bool:
    case TypeKind::Nat:
    case TypeKind::Unit:
    case TypeKind::Top:
      return true;
    case TypeKind::Meta:
      return s->meta_id == t->meta_id;
    case TypeKind::Alias:
      return s->name == t->name;
    case TypeKind::Fn: {
      if (s->params.size() != t->params.size()) return false;
      for (std::size_t i = 0; i < s->params.size(); ++i) {
        if (!flipped_subtype_rec(t->params[i], s->params[i], env)) return false;
      }
      return subtype_rec(s->inner, t->inner, env);
    }
    case TypeKind::Tuple: {
      if (s->params.size() != t->params.size()) return false;
      for (std::size_t i = 0; i < s->params.size(); ++i) {
        if (!subtype_rec(s->params[i], t->params[i], env)) return false;
      }
      return true;
    }
    case TypeKind::Sum:
      return subtype_rec(s->params[0], t->params[0], env) &&
             subtype_rec(s->params[1], t->params[1], env);
    case TypeKind::Record: {
      // width + depth + permutation: every field of t must exist in s
      for (const auto& tf : t->fields) {
        const TypePtr* sf = record_field(s, tf.label);
        if (!sf || !subtype_rec(*sf, tf.type, env)) return false;
      }
      return true;
    }
    case TypeKind::Variant: {
      // labels of s must be a subset of labels of t, covariantly
      for (const auto& sf : s->fields) {
        const TypePtr* tf = record_field(t, sf.label);
        if (!tf || !subtype_rec(sf.type, *tf, env)) return false;
      }
      return true;
    }
    case TypeKind::List:
      return subtype_rec(s->inner, t->inner, env);
    case TypeKind::Ref:
      return equiv_rec(s->inner, t->inner, env);
    case TypeKind::Forall: {
      if (s->binders.size() != t->binders.size()) return false;
      for (std::size_t i = 0; i < s->binders.size(); ++i) {
        env.pairs.emplace_back(s->binders[i], t->binders[i]);
      }
      bool r = subtype_rec(s->inner, t->inner, env);
      env.pairs.resize(env.pairs.size() - s->binders.size());
      return r;
    }
    case TypeKind::Mu: {
      env.pairs.emplace_back(s->name, t->name);
      bool r = subtype_rec(s->inner, t->inner, env);
      env.pairs.pop_back();
      return r;
    }
    default:
      return false;
  }
}

}  // namespace

bool is_subtype(const TypePtr& s, const TypePtr& t) {
  BinderEnv env;
  return subtype_rec(s, t, env);
}

bool type_eq(const TypePtr& a, const TypePtr& b) { return alpha_eq(a, b); }

}  // namespace stella
