#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace compass {

enum class Errc {
  MalformedTerm,
  ParseError,
  UndefinedPrefix,
  UnknownCodeClass,
  DuplicateInstance,
  UnknownClass,
  SyntaxError,
  UnsupportedFeature,
  UnparseableDate,
  UnknownClient,
  UnknownSatisfier,
  UnknownService,
  Io,
};

// Machine token for an error code, e.g. "unknown-client".
std::string_view to_token(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Error(Errc code, const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(message + " at " + std::to_string(line) + ":" +
                           std::to_string(column)),
        code_(code),
        line_(line),
        column_(column) {}

  Errc code() const noexcept { return code_; }
  // 1-based; 0 when the error carries no position.
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  Errc code_;
  std::size_t line_ = 0;
  std::size_t column_ = 0;
};

}  // namespace compass
