#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hm {

/// Raised when a computation would exceed a configured enumeration cap.
class CapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error in a group expression; offset is a byte position in the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Malformed catalog stream. line() is 1-based.
class CatalogError : public std::runtime_error {
 public:
  CatalogError(const std::string& message, std::size_t line)
      : std::runtime_error("catalog line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace hm
