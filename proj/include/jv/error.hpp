#ifndef JV_ERROR_HPP
#define JV_ERROR_HPP

#include <stdexcept>
#include <string>

namespace jv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (generators, weights, polynomials, vectors).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Arguments outside the domain of an operation (n = 0, index out of range,
/// division by zero, gcd of two zero polynomials, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed; indicates a bug rather than bad input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace jv

#endif  // JV_ERROR_HPP
