#include "stella/poly.hpp"

#include <vector>

namespace stella {

namespace {

void free_vars_rec(const TypePtr& t, std::set<std::string>& bound,
                   std::set<std::string>& out) {
  switch (t->kind) {
    case TypeKind::Var:
      if (!bound.count(t->name)) out.insert(t->name);
      return;
    case TypeKind::Forall: {
      std::vector<std::string> introduced;
      for (const auto& b : t->binders) {
        if (bound.insert(b).second) introduced.push_back(b);
      }
      free_vars_rec(t->inner, bound, out);
      for (const auto& b : introduced) bound.erase(b);
      return;
    }
    case TypeKind::Mu: {
      bool introduced = bound.insert(t->name).second;
      free_vars_rec(t->inner, bound, out);
      if (introduced) bound.erase(t->name);
      return;
    }
    default:
      break;
  }
  for (const auto& p : t->params) free_vars_rec(p, bound, out);
  for (const auto& f : t->fields) free_vars_rec(f.type, bound, out);
  if (t->inner) free_vars_rec(t->inner, bound, out);
}

// Splits "name7" into ("name", found suffix) for fresh-name generation.
std::string base_name(const std::string& name) {
  std::size_t end = name.size();
  while (end > 0 && std::isdigit(static_cast<unsigned char>(name[end - 1]))) {
    --end;
  }
  return end == 0 ? name : name.substr(0, end);
}

std::string fresh_name(const std::string& hint,
                       const std::set<std::string>& avoid) {
  std::string base = base_name(hint);
  for (int suffix = 1;; ++suffix) {
    std::string candidate = base + std::to_string(suffix);
    if (!avoid.count(candidate)) return candidate;
  }
}

TypePtr substitute_rec(const TypePtr& t, const TypeSubstitution& subst,
                       const std::set<std::string>& avoid) {
  switch (t->kind) {
    case TypeKind::Var: {
      auto it = subst.find(t->name);
      return it == subst.end() ? t : it->second;
    }
    case TypeKind::Forall:
    case TypeKind::Mu: {
      std::vector<std::string> binders =
          t->kind == TypeKind::Mu ? std::vector<std::string>{t->name}
                                  : t->binders;
      TypeSubstitution inner_subst = subst;
      std::set<std::string> inner_avoid = avoid;
      bool any_active = false;
      for (const auto& b : binders) {
        inner_subst.erase(b);
      }
      for (const auto& [k, v] : inner_subst) {
        (void)k;
        any_active = true;
        for (const auto& fv : free_type_vars(v)) inner_avoid.insert(fv);
      }
      if (!any_active) return t;
      // rename binders that would capture a substituted free variable
      TypeSubstitution renames;
      std::vector<std::string> new_binders;
      std::set<std::string> body_fv = free_type_vars(t->inner);
      for (const auto& fv : body_fv) inner_avoid.insert(fv);
      for (auto& b : binders) {
        bool captured = false;
        for (const auto& [k, v] : inner_subst) {
          if (!body_fv.count(k)) continue;
          if (free_type_vars(v).count(b)) {
            captured = true;
            break;
          }
        }
        if (captured) {
          std::string nb = fresh_name(b, inner_avoid);
          inner_avoid.insert(nb);
          renames[b] = ty::var(nb);
          new_binders.push_back(nb);
        } else {
          new_binders.push_back(b);
        }
      }
      TypePtr body = t->inner;
      if (!renames.empty()) {
        body = substitute_rec(body, renames, inner_avoid);
      }
      body = substitute_rec(body, inner_subst, inner_avoid);
      if (t->kind == TypeKind::Mu) {
        return ty::mu(new_binders[0], std::move(body));
      }
      return ty::forall(std::move(new_binders), std::move(body));
    }
    default:
      break;
  }
  Type out = *t;
  bool changed = false;
  for (auto& p : out.params) {
    TypePtr r = substitute_rec(p, subst, avoid);
    if (r != p) changed = true;
    p = r;
  }
  for (auto& f : out.fields) {
    TypePtr r = substitute_rec(f.type, subst, avoid);
    if (r != f.type) changed = true;
    f.type = r;
  }
  if (out.inner) {
    TypePtr r = substitute_rec(out.inner, subst, avoid);
    if (r != out.inner) changed = true;
    out.inner = r;
  }
  if (!changed) return t;
  return std::make_shared<Type>(std::move(out));
}

// Corresponding-binder environment for alpha-equivalence.
struct BinderEnv {
  std::vector<std::pair<std::string, std::string>> pairs;

  void push(const std::string& l, const std::string& r) {
    pairs.emplace_back(l, r);
  }
  void pop(std::size_t count) { pairs.resize(pairs.size() - count); }

  bool vars_equal(const std::string& l, const std::string& r) const {
    for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
      if (it->first == l || it->second == r) {
        return it->first == l && it->second == r;
      }
    }
    return l == r;  // both free
  }
};

bool alpha_eq_rec(const TypePtr& a, const TypePtr& b, BinderEnv& env) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case TypeKind::Bool:
    case TypeKind::Nat:
    case TypeKind::Unit:
    case TypeKind::Top:
    case TypeKind::Bot:
      return true;
    case TypeKind::Meta:
      return a->meta_id == b->meta_id;
    case TypeKind::Alias:
      return a->name == b->name;
    case TypeKind::Var:
      return env.vars_equal(a->name, b->name);
    case TypeKind::Fn:
    case TypeKind::Tuple:
    case TypeKind::Sum: {
      if (a->params.size() != b->params.size()) return false;
      for (std::size_t i = 0; i < a->params.size(); ++i) {
        if (!alpha_eq_rec(a->params[i], b->params[i], env)) return false;
      }
      if ((a->inner == nullptr) != (b->inner == nullptr)) return false;
      return !a->inner || alpha_eq_rec(a->inner, b->inner, env);
    }
    case TypeKind::Record:
    case TypeKind::Variant: {
      if (a->fields.size() != b->fields.size()) return false;
      for (std::size_t i = 0; i < a->fields.size(); ++i) {
        if (a->fields[i].label != b->fields[i].label) return false;
        if (!alpha_eq_rec(a->fields[i].type, b->fields[i].type, env)) {
          return false;
        }
      }
      return true;
    }
    case TypeKind::List:
    case TypeKind::Ref:
      return alpha_eq_rec(a->inner, b->inner, env);
    case TypeKind::Forall: {
      if (a->binders.size() != b->binders.size()) return false;
      for (std::size_t i = 0; i < a->binders.size(); ++i) {
        env.push(a->binders[i], b->binders[i]);
      }
      bool r = alpha_eq_rec(a->inner, b->inner, env);
      env.pop(a->binders.size());
      return r;
    }
    case TypeKind::Mu: {
      env.push(a->name, b->name);
      bool r = alpha_eq_rec(a->inner, b->inner, env);
      env.pop(1);
      return r;
    }
  }
  return false;
}

}  // namespace

std::set<std::string> free_type_vars(const TypePtr& t) {
  std::set<std::string> bound, out;
  free_vars_rec(t, bound, out);
  return out;
}

TypePtr substitute(const TypePtr& t, const TypeSubstitution& subst) {
  if (subst.empty()) return t;
  std::set<std::string> avoid = free_type_vars(t);
  for (const auto& [k, v] : subst) {
    avoid.insert(k);
    for (const auto& fv : free_type_vars(v)) avoid.insert(fv);
  }
  return substitute_rec(t, subst, avoid);
}

bool alpha_eq(const TypePtr& a, const TypePtr& b) {
  BinderEnv env;
  return alpha_eq_rec(a, b, env);
}

}  // namespace stella
