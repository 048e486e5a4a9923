#ifndef STELLA_LEXER_HPP
#define STELLA_LEXER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "stella/error.hpp"
#include "stella/syntax.hpp"

namespace stella {

enum class TokenKind {
  Keyword,
  Identifier,
  ExtensionName,  // "#foo-bar"
  Integer,
  Punctuation,
  EndOfInput,
};

struct Token {
  TokenKind kind;
  std::string text;
  Span span;
};

bool is_reserved_word(const std::string& word);

// Throws ParseException on an illegal character.
std::vector<Token> tokenize(const std::string& source);

}  // namespace stella

#endif  // STELLA_LEXER_HPP
