#ifndef LIESTRAT_ERRORS_HPP
#define LIESTRAT_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace liestrat {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Ambient-dimension or vector-length mismatch between operands.
class DimensionMismatch : public Error {
public:
  explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

/// Input data failed a structural check (antisymmetry, Jacobi, ideal steps,
/// non-subalgebra, bad file contents).  Carries the first witness found.
class ValidationError : public Error {
public:
  ValidationError(std::string kind, std::vector<int> indices, std::string witness,
                  const std::string& msg)
      : Error(msg), kind(std::move(kind)), indices(std::move(indices)),
        witness(std::move(witness)) {}

  std::string kind;          // e.g. "jacobi", "antisymmetry", "ideal-step"
  std::vector<int> indices;  // offending basis indices, 1-based
  std::string witness;       // residual vector / offending bracket, printed
};

/// An internal mathematical assertion failed.  This always signals a bug in
/// the implementation, never bad input.
class InvariantViolation : public Error {
public:
  explicit InvariantViolation(const std::string& msg)
      : Error("invariant violation: " + msg) {}
};

/// The greedy one-parameter zeroing step of the orbit cross-section could not
/// solve for a parameter.  Carries the coordinate index and the polynomial
/// that had no usable rational root.
class ZeroingStepUnsolvable : public Error {
public:
  ZeroingStepUnsolvable(int index, std::string polynomial)
      : Error("cross-section zeroing step unsolvable at coordinate " +
              std::to_string(index) + "; t-polynomial " + polynomial),
        index(index), polynomial(std::move(polynomial)) {}

  int index;
  std::string polynomial;
};

}  // namespace liestrat

#endif
