#ifndef STELLA_POLY_HPP
#define STELLA_POLY_HPP

#include <map>
#include <set>
#include <string>

#include "stella/syntax.hpp"

namespace stella {

using TypeSubstitution = std::map<std::string, TypePtr>;

std::set<std::string> free_type_vars(const TypePtr& t);

// Capture-avoiding substitution of type variables. Binders whose scope would
// capture a free variable of a substituted type are renamed to the base name
// with the smallest integer suffix not free in either operand.
TypePtr substitute(const TypePtr& t, const TypeSubstitution& subst);

// Equality up to consistent renaming of Forall/Mu binders.
bool alpha_eq(const TypePtr& a, const TypePtr& b);

}  // namespace stella

#endif  // STELLA_POLY_HPP
