#ifndef STELLA_ERROR_HPP
#define STELLA_ERROR_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "stella/syntax.hpp"

namespace stella {

enum class ErrorTag {
  ERROR_MISSING_MAIN,
  ERROR_DUPLICATE_FUNCTION,
  ERROR_EXTENSION_NOT_ENABLED,
  ERROR_UNDEFINED_VARIABLE,
  ERROR_NOT_A_FUNCTION,
  ERROR_INCORRECT_NUMBER_OF_ARGUMENTS,
  ERROR_UNEXPECTED_TYPE_FOR_EXPRESSION,
  ERROR_UNEXPECTED_LAMBDA,
  ERROR_UNEXPECTED_TUPLE_LENGTH,
  ERROR_MISSING_RECORD_FIELDS,
  ERROR_UNEXPECTED_RECORD_FIELDS,
  ERROR_UNEXPECTED_VARIANT_LABEL,
  ERROR_AMBIGUOUS_SUM_TYPE,
  ERROR_AMBIGUOUS_VARIANT_TYPE,
  ERROR_AMBIGUOUS_LIST_TYPE,
  ERROR_AMBIGUOUS_PANIC_TYPE,
  ERROR_AMBIGUOUS_THROW_TYPE,
  ERROR_AMBIGUOUS_REFERENCE_TYPE,
  ERROR_NONEXHAUSTIVE_MATCH_PATTERNS,
  ERROR_ILLEGAL_EMPTY_MATCHING,
  ERROR_UNEXPECTED_PATTERN_FOR_TYPE,
  ERROR_DUPLICATE_PATTERN_VARIABLE,
  ERROR_EXCEPTION_TYPE_NOT_DECLARED,
  ERROR_UNEXPECTED_SUBTYPE,
  ERROR_UNDEFINED_TYPE_VARIABLE,
  ERROR_NOT_A_GENERIC_FUNCTION,
  ERROR_INCORRECT_NUMBER_OF_TYPE_ARGUMENTS,
  ERROR_OCCURS_CHECK_INFINITE_TYPE,
  ERROR_UNDEFINED_TYPE_ALIAS,
  ERROR_CYCLIC_TYPE_ALIAS,
  ERROR_NOT_A_REFERENCE,
  ERROR_INCORRECT_ARITY_OF_MAIN,
  ERROR_INCOMPATIBLE_EXTENSIONS,
};

const char* tag_name(ErrorTag tag);
// Returns false when `name` is not a known tag.
bool tag_from_name(const std::string& name, ErrorTag& out);

struct Diagnostic {
  ErrorTag tag;
  std::string message;
  Span span;
  std::vector<std::string> notes;
};

// Thrown by the typechecker; callers surface the Diagnostic.
class TypeError : public std::runtime_error {
 public:
  explicit TypeError(Diagnostic d)
      : std::runtime_error(std::string(tag_name(d.tag)) + ": " + d.message),
        diagnostic_(std::move(d)) {}

  const Diagnostic& diagnostic() const { return diagnostic_; }

 private:
  Diagnostic diagnostic_;
};

[[noreturn]] inline void fail(ErrorTag tag, std::string message,
                              Span span = {}) {
  throw TypeError(Diagnostic{tag, std::move(message), span, {}});
}

struct ParseError {
  std::string message;
  Span span;
  std::vector<std::string> expected;
};

class ParseException : public std::runtime_error {
 public:
  explicit ParseException(ParseError e)
      : std::runtime_error(e.message), error_(std::move(e)) {}

  const ParseError& error() const { return error_; }

 private:
  ParseError error_;
};

}  // namespace stella

#endif  // STELLA_ERROR_HPP
