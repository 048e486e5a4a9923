#ifndef TESTS_SUPPORT_GEN_HPP
#define TESTS_SUPPORT_GEN_HPP

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "stella/syntax.hpp"

// Random closed types and subtype-/supertype-perturbations for the
// property suites. All generators are deterministic for a fixed seed.

namespace testgen {

using stella::TypeField;
using stella::TypeKind;
using stella::TypePtr;
namespace ty = stella::ty;

inline int pick(std::mt19937& rng, int n) {
  return static_cast<int>(rng() % static_cast<unsigned>(n));
}

inline bool chance(std::mt19937& rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

static const char* kLabels[] = {"a", "b", "c", "d", "e", "f", "g", "h"};

// Closed type of structural depth at most `depth`.
inline TypePtr gen_type(std::mt19937& rng, int depth) {
  if (depth <= 0) {
    switch (pick(rng, 3)) {
      case 0: return ty::nat();
      case 1: return ty::boolean();
      default: return ty::unit();
    }
  }
  switch (pick(rng, 11)) {
    case 0: return ty::nat();
    case 1: return ty::boolean();
    case 2: return ty::unit();
    case 3: {
      std::vector<TypePtr> params;
      int n = 1 + pick(rng, 2);
      for (int i = 0; i < n; ++i) params.push_back(gen_type(rng, depth - 1));
      return ty::fn(std::move(params), gen_type(rng, depth - 1));
    }
    case 4: {
      std::vector<TypePtr> comps;
      int n = 2 + pick(rng, 2);
      for (int i = 0; i < n; ++i) comps.push_back(gen_type(rng, depth - 1));
      return ty::tuple(std::move(comps));
    }
    case 5: {
      std::vector<TypeField> fs;
      int n = 1 + pick(rng, 3);
      for (int i = 0; i < n; ++i)
        fs.push_back({kLabels[i], gen_type(rng, depth - 1)});
      return ty::record(std::move(fs));
    }
    case 6:
      return ty::sum(gen_type(rng, depth - 1), gen_type(rng, depth - 1));
    case 7: {
      std::vector<TypeField> fs;
      int n = 1 + pick(rng, 3);
      for (int i = 0; i < n; ++i)
        fs.push_back({kLabels[i], gen_type(rng, depth - 1)});
      return ty::variant(std::move(fs));
    }
    case 8: return ty::list(gen_type(rng, depth - 1));
    case 9: return ty::ref(gen_type(rng, depth - 1));
    default: return chance(rng, 0.5) ? ty::top() : ty::bot();
  }
}

inline TypePtr gen_super(std::mt19937& rng, const TypePtr& t);
inline TypePtr gen_sub(std::mt19937& rng, const TypePtr& t);

// A supertype of t, biased toward non-trivial widening.
inline TypePtr gen_super(std::mt19937& rng, const TypePtr& t) {
  if (chance(rng, 0.15)) return ty::top();
  switch (t->kind) {
    case TypeKind::Record: {
      std::vector<TypeField> fs;
      for (const auto& f : t->fields) {
        if (!t->fields.empty() && chance(rng, 0.25) && t->fields.size() > 1 &&
            fs.size() + 1 < t->fields.size())
          continue;  // width: drop the field
        fs.push_back({f.label, chance(rng, 0.5) ? gen_super(rng, f.type)
                                                : f.type});
      }
      return ty::record(std::move(fs));
    }
    case TypeKind::Variant: {
      std::vector<TypeField> fs;
      for (const auto& f : t->fields)
        fs.push_back({f.label, chance(rng, 0.5) ? gen_super(rng, f.type)
                                                : f.type});
      for (const char* label : kLabels) {
        bool taken = std::any_of(fs.begin(), fs.end(), [&](const TypeField& f) {
          return f.label == label;
        });
        if (!taken && chance(rng, 0.3))
          fs.push_back({label, gen_type(rng, 1)});
      }
      return ty::variant(std::move(fs));
    }
    case TypeKind::Fn: {
      std::vector<TypePtr> params;
      for (const auto& p : t->params) params.push_back(gen_sub(rng, p));
      return ty::fn(std::move(params), gen_super(rng, t->inner));
    }
    case TypeKind::Tuple: {
      std::vector<TypePtr> comps;
      for (const auto& c : t->params) comps.push_back(gen_super(rng, c));
      return ty::tuple(std::move(comps));
    }
    case TypeKind::Sum:
      return ty::sum(gen_super(rng, t->params[0]),
                     gen_super(rng, t->params[1]));
    case TypeKind::List:
      return ty::list(gen_super(rng, t->inner));
    case TypeKind::Bot:
      return gen_type(rng, 2);
    default:
      return t;  // Ref is invariant; base types stay put
  }
}

// A subtype of t.
inline TypePtr gen_sub(std::mt19937& rng, const TypePtr& t) {
  if (chance(rng, 0.15)) return ty::bot();
  switch (t->kind) {
    case TypeKind::Record: {
      std::vector<TypeField> fs;
      for (const auto& f : t->fields)
        fs.push_back({f.label, chance(rng, 0.5) ? gen_sub(rng, f.type)
                                                : f.type});
      for (const char* label : kLabels) {
        bool taken = std::any_of(fs.begin(), fs.end(), [&](const TypeField& f) {
          return f.label == label;
        });
        if (!taken && chance(rng, 0.3))
          fs.push_back({label, gen_type(rng, 1)});
      }
      return ty::record(std::move(fs));
    }
    case TypeKind::Variant: {
      std::vector<TypeField> fs;
      for (const auto& f : t->fields) {
        if (chance(rng, 0.25) && t->fields.size() > 1 &&
            fs.size() + 1 < t->fields.size())
          continue;  // label subset
        fs.push_back({f.label, chance(rng, 0.5) ? gen_sub(rng, f.type)
                                                : f.type});
      }
      return ty::variant(std::move(fs));
    }
    case TypeKind::Fn: {
      std::vector<TypePtr> params;
      for (const auto& p : t->params) params.push_back(gen_super(rng, p));
      return ty::fn(std::move(params), gen_sub(rng, t->inner));
    }
    case TypeKind::Tuple: {
      std::vector<TypePtr> comps;
      for (const auto& c : t->params) comps.push_back(gen_sub(rng, c));
      return ty::tuple(std::move(comps));
    }
    case TypeKind::Sum:
      return ty::sum(gen_sub(rng, t->params[0]), gen_sub(rng, t->params[1]));
    case TypeKind::List:
      return ty::list(gen_sub(rng, t->inner));
    case TypeKind::Top:
      return gen_type(rng, 2);
    default:
      return t;
  }
}

}  // namespace testgen

#endif
