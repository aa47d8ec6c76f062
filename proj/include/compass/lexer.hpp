#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "compass/error.hpp"

namespace compass {

// Tokens shared by the Turtle loader and the query parser.
enum class TokenKind {
  IriRef,      // <...>, text holds the IRI without brackets
  PrefixedName,  // prefix:local (either part may be empty)
  BlankLabel,  // _:label, text holds the label
  Var,         // ?name or $name, text holds the name
  String,      // unescaped string contents
  Integer,
  Decimal,
  Word,        // bare identifier: keywords, `a`, true/false, @prefix (text "@prefix")
  Punct,       // { } ( ) [ ] . ; , * = != < > <= >= && || ! ^^
  End,
};

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;

  bool is(TokenKind k, std::string_view t) const { return kind == k && text == t; }
  bool is_punct(std::string_view t) const { return is(TokenKind::Punct, t); }
};

// Splits `source` into tokens; `#` comments (outside IRIs and strings) are
// skipped. Query mode admits variables and comparison operators. Throws
// Error(error_code) with the offending position on bad input.
std::vector<Token> tokenize(std::string_view source, bool query_mode, Errc error_code);

std::string describe(const Token& t);

}  // namespace compass
