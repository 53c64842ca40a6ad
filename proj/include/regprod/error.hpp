#ifndef REGPROD_ERROR_HPP
#define REGPROD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace regprod {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operands live in rings with different variable counts.
struct DimensionError : Error {
  using Error::Error;
};

/// A pair of maps whose composition is not zero, or a malformed complex.
struct InvalidComplexError : Error {
  using Error::Error;
};

/// Construction would exceed the configured size cap.
struct SizeError : Error {
  using Error::Error;
};

/// Input outside the hypothesis an operation is defined under.
struct HypothesisError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

} // namespace regprod

#endif // REGPROD_ERROR_HPP
