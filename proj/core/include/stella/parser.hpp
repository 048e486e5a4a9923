#ifndef STELLA_PARSER_HPP
#define STELLA_PARSER_HPP

#include <string>

#include "stella/error.hpp"
#include "stella/syntax.hpp"

namespace stella {

// Both throw ParseException on malformed input.
Program parse_program(const std::string& source);
ExprPtr parse_expr(const std::string& source);
TypePtr parse_type(const std::string& source);

}  // namespace stella

#endif  // STELLA_PARSER_HPP
