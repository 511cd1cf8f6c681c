#ifndef MREES_ERRORS_HPP
#define MREES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mrees {

/// Malformed textual input (monomials, T-expressions, family files).
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Well-formed input that violates a structural requirement
/// (degree mismatch, non-monotone levels, refs out of range, ...).
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A configured size cap was exceeded.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Something that the mathematics guarantees cannot happen did happen.
class InvariantError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace mrees

#endif
