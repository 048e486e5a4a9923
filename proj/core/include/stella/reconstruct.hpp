#ifndef STELLA_RECONSTRUCT_HPP
#define STELLA_RECONSTRUCT_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "stella/error.hpp"
#include "stella/syntax.hpp"

namespace stella {

struct Constraint {
  TypePtr left;
  TypePtr right;
  Span origin;
};

// Metavariable solutions. Kept occurs-check clean and idempotent under
// apply_substitution.
using Substitution = std::map<std::int64_t, TypePtr>;

// First-order unification with occurs check. Throws TypeError with
// ERROR_UNEXPECTED_TYPE_FOR_EXPRESSION (constructor clash, at the
// constraint's origin) or ERROR_OCCURS_CHECK_INFINITE_TYPE.
Substitution unify(const std::vector<Constraint>& constraints);

// Replaces every solved metavariable, following chains; a fixed point of
// repeated application.
TypePtr apply_substitution(const TypePtr& t, const Substitution& s);

bool contains_meta(const TypePtr& t);

}  // namespace stella

#endif  // STELLA_RECONSTRUCT_HPP
