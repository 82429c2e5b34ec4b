#ifndef LIARLAB_ERRORS_HPP
#define LIARLAB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace liarlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input is not a formula of the instance (substitution, naming).
struct NotAFormula : Error {
  using Error::Error;
};

// Input is not a name of the instance.
struct NotAName : Error {
  using Error::Error;
};

// A name could not be resolved to its formula within the instance's
// ledger/search budget.
struct NameUnassigned : Error {
  using Error::Error;
};

// A configured resource cap was hit before the operation finished.
struct BudgetExceeded : Error {
  using Error::Error;
};

struct SyntaxError : Error {
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position(position) {}
  std::size_t position;
};

// A free variable other than the designated `x` occurred.
struct FreeVariableError : SyntaxError {
  using SyntaxError::SyntaxError;
};

// The instance does not supply the requested self-reference transform.
struct NoSelfRefCapability : Error {
  using Error::Error;
};

}  // namespace liarlab

#endif
