#pragma once

#include <stdexcept>
#include <string>

namespace lyubeznik {

/// Malformed or out-of-range input (bad masks, syntax, non-squarefree monomials).
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Mathematically undefined request, e.g. minimal primes of the zero ideal.
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A structural invariant failed (d∘d ≠ 0, non-commuting chain map, ...).
class contract_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A size cap was exceeded; the message names the offending bound.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error in the ideal input grammar, with 1-based position.
class parse_error : public input_error {
 public:
  parse_error(const std::string& what, std::size_t line, std::size_t column)
      : input_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                    what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace lyubeznik
