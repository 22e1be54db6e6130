#ifndef TDN_ERRORS_HPP
#define TDN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tdn {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid top-level parameters (d, n, order, ...).
class BadParamsError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap was exceeded (enumeration count, monomial count,
/// presentation size).  Callers may retry with larger caps.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

/// Two sets in a would-be nested family overlap without containment.
class NotNestedError : public Error {
 public:
  NotNestedError(const std::string& msg, unsigned a_bits, unsigned b_bits)
      : Error(msg), a(a_bits), b(b_bits) {}
  unsigned a;  ///< bitmask of the first offending set
  unsigned b;  ///< bitmask of the second offending set
};

/// A set of cardinality < 2 (or empty) was used where a delta-index is
/// required.
class BadCardinalityError : public Error {
 public:
  using Error::Error;
};

/// Queried set is not a member of the family (nor the adjoined root).
class NotMemberError : public Error {
 public:
  using Error::Error;
};

/// A subset argument violates its preconditions (not proper, wrong ground
/// set, ...).
class BadSubsetError : public Error {
 public:
  using Error::Error;
};

/// An exponent that must be nonnegative came out negative.
class NegativeExponentError : public Error {
 public:
  using Error::Error;
};

/// Class degree outside the valid range for the requested operation,
/// or inconsistent degree bookkeeping in a supplied exponent table.
class DegreeError : public Error {
 public:
  using Error::Error;
};

/// The degree map could not be normalized: the top graded piece does not
/// have rank one or the distinguished top power vanishes.  Signals an
/// engine bug, never expected on valid input.
class NormalizationError : public Error {
 public:
  using Error::Error;
};

/// Exact polynomial division failed; signals misuse of a fiber-product
/// rank computation.
class DivisionError : public Error {
 public:
  using Error::Error;
};

/// A space without a known cell decomposition was passed where a cellular
/// one is required.
class NotCellularError : public Error {
 public:
  using Error::Error;
};

}  // namespace tdn

#endif
