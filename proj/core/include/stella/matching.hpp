#ifndef STELLA_MATCHING_HPP
#define STELLA_MATCHING_HPP

#include <string>
#include <utility>
#include <vector>

#include "stella/error.hpp"
#include "stella/syntax.hpp"

namespace stella {

// Pattern variables with their types, in binding order.
using BindingSet = std::vector<std::pair<std::string, TypePtr>>;

struct MatchingOptions {
  // #structural-patterns: nesting beyond var/wildcard children is allowed.
  bool structural_patterns = false;
  // #natural-literals for integer patterns > 0.
  bool natural_literals = false;
};

// Computes the types of a pattern's variables against scrutinee type `t`
// (alias-free). Throws TypeError: ERROR_UNEXPECTED_PATTERN_FOR_TYPE,
// ERROR_EXTENSION_NOT_ENABLED, ERROR_DUPLICATE_PATTERN_VARIABLE.
BindingSet pattern_bindings(const PatternPtr& p, const TypePtr& t,
                            const MatchingOptions& opts);

// Decides coverage for simple (non-nested) patterns. Precondition: every
// pattern satisfies pattern_is_simple.
bool is_exhaustive(const TypePtr& t, const std::vector<PatternPtr>& patterns);

}  // namespace stella

#endif  // STELLA_MATCHING_HPP
