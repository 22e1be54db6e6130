#include "tdn/rational.hpp"

#include "tdn/errors.hpp"

namespace tdn {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw BadParamsError("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw BadParamsError("empty rational literal");
  try {
    Rat r(s);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw BadParamsError("malformed rational literal: " + s);
  }
}

Int to_integer(const Rat& r) {
  if (r.get_den() != 1)
    throw BadParamsError("expected integer, got " + rat_to_string(r));
  return r.get_num();
}

Int factorial_int(int n) {
  Int f(1);
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Int binomial_int(int n, int k) {
  if (k < 0 || k > n) return Int(0);
  Int b(1);
  for (int i = 0; i < k; ++i) {
    b *= n - i;
    b /= i + 1;
  }
  return b;
}

}  // namespace tdn
