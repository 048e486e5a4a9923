#include "stella/lexer.hpp"

#include <cctype>
#include <set>

namespace stella {

bool is_reserved_word(const std::string& word) {
  static const std::set<std::string> reserved = {
      "language", "extend",  "with",   "fn",     "generic", "return",
      "if",       "then",    "else",   "match",  "let",     "letrec",
      "in",       "as",      "cast",   "try",    "catch",   "throw",
      "new",      "fold",    "unfold", "fix",    "cons",    "true",
      "false",    "unit",    "forall", "rec",    "type",    "exception",
      "variant",  "auto",    "succ",   "inl",    "inr",
  };
  return reserved.count(word) > 0;
}

namespace {

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

}  // namespace

std::vector<Token> tokenize(const std::string& source) {
  std::vector<Token> tokens;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  const std::size_t n = source.size();

  auto advance = [&](std::size_t count) {
    for (std::size_t k = 0; k < count && i < n; ++k, ++i) {
      if (source[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };

  while (i < n) {
    char c = source[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '/' && i + 1 < n && source[i + 1] == '/') {
      while (i < n && source[i] != '\n') advance(1);
      continue;
    }
    Span s{line, col, line, col};
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < n && ident_char(source[j])) ++j;
      std::string word = source.substr(i, j - i);
      advance(j - i);
      // `panic!` is a single token
      if (word == "panic" && i < n && source[i] == '!') {
        word = "panic!";
        advance(1);
      }
      s.end_line = line;
      s.end_col = col;
      TokenKind k = is_reserved_word(word) || word == "panic!"
                        ? TokenKind::Keyword
                        : TokenKind::Identifier;
      tokens.push_back({k, std::move(word), s});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < n && std::isdigit(static_cast<unsigned char>(source[j]))) ++j;
      std::string text = source.substr(i, j - i);
      advance(j - i);
      s.end_line = line;
      s.end_col = col;
      tokens.push_back({TokenKind::Integer, std::move(text), s});
      continue;
    }
    if (c == '#') {
      std::size_t j = i + 1;
      while (j < n && (ident_char(source[j]) || source[j] == '-')) ++j;
      if (j == i + 1) {
        throw ParseException({"stray '#'", s, {}});
      }
      std::string text = source.substr(i, j - i);
      advance(j - i);
      s.end_line = line;
      s.end_col = col;
      tokens.push_back({TokenKind::ExtensionName, std::move(text), s});
      continue;
    }
    // multi-character punctuation first
    static const char* multi[] = {"->", "=>", ":=", "<|", "|>", "::"};
    bool matched = false;
    for (const char* m : multi) {
      if (source.compare(i, 2, m) == 0) {
        advance(2);
        s.end_line = line;
        s.end_col = col;
        tokens.push_back({TokenKind::Punctuation, m, s});
        matched = true;
        break;
      }
    }
    if (matched) continue;
    static const std::string singles = "(){}[]<>,;:.=+*&|_!-";
    if (singles.find(c) != std::string::npos) {
      advance(1);
      s.end_line = line;
      s.end_col = col;
      tokens.push_back({TokenKind::Punctuation, std::string(1, c), s});
      continue;
    }
    throw ParseException(
        {std::string("illegal character '") + c + "'", s, {}});
  }
  tokens.push_back({TokenKind::EndOfInput, "", {line, col, line, col}});
  return tokens;
}

}  // namespace stella
