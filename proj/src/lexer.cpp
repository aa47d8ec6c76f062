#include "compass/lexer.hpp"

#include <cctype>
#include <cstdint>

namespace compass {

namespace {

bool is_name_start(unsigned char c) { return std::isalpha(c) || c == '_' || c >= 0x80; }
bool is_name_char(unsigned char c) {
  return std::isalnum(c) || c == '_' || c == '-' || c >= 0x80;
}

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

class Lexer {
 public:
  Lexer(std::string_view src, bool query_mode, Errc errc)
      : src_(src), query_mode_(query_mode), errc_(errc) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      Token t;
      t.line = line_;
      t.column = col_;
      if (pos_ >= src_.size()) {
        out.push_back(t);
        return out;
      }
      lex_one(t);
      out.push_back(std::move(t));
    }
  }

 private:
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && pos_ < src_.size(); ++i) {
      if (src_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& msg) const { throw Error(errc_, msg, line_, col_); }

  void skip_space() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool try_iriref(Token& t) {
    std::size_t j = pos_ + 1;
    while (j < src_.size()) {
      unsigned char c = static_cast<unsigned char>(src_[j]);
      if (c == '>') break;
      if (c <= 0x20 || c == '<' || c == '"' || c == '{' || c == '}' || c == '|' || c == '^' ||
          c == '`' || c == '\\') {
        return false;
      }
      ++j;
    }
    if (j >= src_.size()) return false;
    t.kind = TokenKind::IriRef;
    t.text = std::string(src_.substr(pos_ + 1, j - pos_ - 1));
    advance(j - pos_ + 1);
    return true;
  }

  void lex_string(Token& t) {
    char quote = peek();
    advance();
    t.kind = TokenKind::String;
    while (true) {
      if (pos_ >= src_.size()) fail("unterminated string");
      char c = peek();
      if (c == quote) {
        advance();
        return;
      }
      if (c == '\n') fail("newline in string");
      if (c == '\\') {
        char e = peek(1);
        advance(2);
        switch (e) {
          case 't': t.text += '\t'; break;
          case 'n': t.text += '\n'; break;
          case 'r': t.text += '\r'; break;
          case 'b': t.text += '\b'; break;
          case 'f': t.text += '\f'; break;
          case '"': t.text += '"'; break;
          case '\'': t.text += '\''; break;
          case '\\': t.text += '\\'; break;
          case 'u':
          case 'U': {
            std::size_t n = e == 'u' ? 4 : 8;
            if (pos_ + n > src_.size()) fail("truncated unicode escape");
            std::uint32_t cp = 0;
            for (std::size_t i = 0; i < n; ++i) {
              char h = src_[pos_ + i];
              if (!std::isxdigit(static_cast<unsigned char>(h))) fail("bad unicode escape");
              cp = cp * 16 + static_cast<std::uint32_t>(
                                 std::isdigit(static_cast<unsigned char>(h))
                                     ? h - '0'
                                     : std::tolower(static_cast<unsigned char>(h)) - 'a' + 10);
            }
            advance(n);
            append_utf8(t.text, cp);
            break;
          }
          default: fail(std::string("unknown escape \\") + e);
        }
        continue;
      }
      t.text += c;
      advance();
    }
  }

  void lex_number(Token& t) {
    std::size_t start = pos_;
    if (peek() == '+' || peek() == '-') advance();
    while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
    t.kind = TokenKind::Integer;
    if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      advance();
      while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
      t.kind = TokenKind::Decimal;
    }
    t.text = std::string(src_.substr(start, pos_ - start));
  }

  // Scans name characters plus embedded dots; a trailing dot is left for
  // the statement terminator.
  std::string scan_name(bool allow_colon) {
    std::size_t start = pos_;
    std::size_t end = pos_;
    std::size_t j = pos_;
    while (j < src_.size()) {
      unsigned char c = static_cast<unsigned char>(src_[j]);
      if (is_name_char(c) || (allow_colon && c == ':') || c == '%') {
        ++j;
        end = j;
      } else if (c == '.') {
        ++j;
      } else {
        break;
      }
    }
    advance(end - start);
    return std::string(src_.substr(start, end - start));
  }

  void lex_one(Token& t) {
    char c = peek();
    unsigned char uc = static_cast<unsigned char>(c);

    if (c == '<') {
      if (try_iriref(t)) return;
      if (!query_mode_) fail("malformed IRI");
      t.kind = TokenKind::Punct;
      if (peek(1) == '=') {
        t.text = "<=";
        advance(2);
      } else {
        t.text = "<";
        advance();
      }
      return;
    }
    if (c == '"' || c == '\'') {
      lex_string(t);
      return;
    }
    if (query_mode_ && (c == '?' || c == '$') && is_name_char(static_cast<unsigned char>(peek(1)))) {
      advance();
      t.kind = TokenKind::Var;
      std::size_t start = pos_;
      while (is_name_char(static_cast<unsigned char>(peek())) && peek() != '-') advance();
      t.text = std::string(src_.substr(start, pos_ - start));
      return;
    }
    if (c == '_' && peek(1) == ':') {
      advance(2);
      t.kind = TokenKind::BlankLabel;
      t.text = scan_name(false);
      if (t.text.empty()) fail("empty blank node label");
      return;
    }
    if (c == '@') {
      advance();
      t.kind = TokenKind::Word;
      t.text = "@" + scan_name(false);
      return;
    }
    if (std::isdigit(uc) ||
        ((c == '+' || c == '-') && std::isdigit(static_cast<unsigned char>(peek(1))))) {
      lex_number(t);
      return;
    }
    if (is_name_start(uc) || c == ':') {
      std::string prefix = c == ':' ? std::string() : scan_name(false);
      if (peek() == ':') {
        advance();
        t.kind = TokenKind::PrefixedName;
        t.text = prefix + ":" + scan_name(true);
      } else {
        t.kind = TokenKind::Word;
        t.text = prefix;
      }
      return;
    }

    static constexpr std::string_view two_char[] = {"!=", ">=", "&&", "||", "^^"};
    for (auto op : two_char) {
      if (peek() == op[0] && peek(1) == op[1]) {
        t.kind = TokenKind::Punct;
        t.text = std::string(op);
        advance(2);
        return;
      }
    }
    static constexpr std::string_view single = "{}()[].;,*=!>/|^+";
    if (single.find(c) != std::string_view::npos) {
      t.kind = TokenKind::Punct;
      t.text = std::string(1, c);
      advance();
      return;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view src_;
  bool query_mode_;
  Errc errc_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source, bool query_mode, Errc error_code) {
  return Lexer(source, query_mode, error_code).run();
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case TokenKind::IriRef: return "<" + t.text + ">";
    case TokenKind::BlankLabel: return "_:" + t.text;
    case TokenKind::Var: return "?" + t.text;
    case TokenKind::String: return "\"" + t.text + "\"";
    case TokenKind::End: return "end of input";
    default: return "'" + t.text + "'";
  }
}

}  // namespace compass
