#ifndef STELLA_ALIAS_HPP
#define STELLA_ALIAS_HPP

#include <map>
#include <string>

#include "stella/error.hpp"
#include "stella/syntax.hpp"

namespace stella {

// Expands every Alias node using `aliases`. Names bound by enclosing
// Forall/Mu binders are left alone. Throws TypeError with
// ERROR_UNDEFINED_TYPE_ALIAS or ERROR_CYCLIC_TYPE_ALIAS.
TypePtr resolve_alias(const TypePtr& t,
                      const std::map<std::string, TypePtr>& aliases);

}  // namespace stella

#endif  // STELLA_ALIAS_HPP
