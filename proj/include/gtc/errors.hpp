#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gtc {

// Malformed polynomial text; offset is the byte position of the first bad character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Precondition violation (zero polynomial where nonzero required, bad torus, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computation exceeded its configured iteration/size budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gtc
