// Exception types shared by every pnlab module.

#ifndef PNLAB_ERRORS_HPP_
#define PNLAB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace pnlab {

  struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  // Malformed presentation text; carries the 1-based line number.
  struct ParseError : Error {
    ParseError(std::size_t line, std::string const& what)
        : Error("line " + std::to_string(line) + ": " + what), line(line) {}
    std::size_t line;
  };

  // A collection exceeded its rewrite budget.
  struct BudgetExceeded : Error {
    using Error::Error;
  };

  // The requested computation is outside the supported size.
  struct ScaleLimit : Error {
    using Error::Error;
  };

  // A presentation or subgroup failed a mathematical precondition
  // (inconsistent, not normal, not powerfully nilpotent, ...).
  struct DomainError : Error {
    using Error::Error;
  };

  // An internal cross-check disagreed; always a bug or a wrong theorem.
  struct InternalError : Error {
    using Error::Error;
  };

}  // namespace pnlab

#endif  // PNLAB_ERRORS_HPP_
