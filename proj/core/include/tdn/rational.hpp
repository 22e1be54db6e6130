#ifndef TDN_RATIONAL_HPP
#define TDN_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace tdn {

using Int = mpz_class;
using Rat = mpq_class;

/// Canonicalized rational num/den.
Rat make_rat(const Int& num, const Int& den);
Rat make_rat(long num, long den);

/// Renders "p/q", or just "p" when the denominator is one.
std::string rat_to_string(const Rat& r);

/// Parses "p" or "p/q"; throws BadParamsError on malformed input.
Rat rat_from_string(const std::string& s);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

/// Numerator of an integral rational; throws if the denominator is not one.
Int to_integer(const Rat& r);

Int factorial_int(int n);
Int binomial_int(int n, int k);

}  // namespace tdn

#endif
