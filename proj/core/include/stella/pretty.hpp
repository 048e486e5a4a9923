#ifndef STELLA_PRETTY_HPP
#define STELLA_PRETTY_HPP

#include <string>

#include "stella/syntax.hpp"

namespace stella {

// Emits surface syntax; the output reparses to an AST equal to the input
// up to source spans.
std::string pretty_print(const Program& p);

std::string type_to_string(const TypePtr& t);
std::string expr_to_string(const ExprPtr& e);
std::string pattern_to_string(const PatternPtr& p);

}  // namespace stella

#endif  // STELLA_PRETTY_HPP
