#ifndef TDN_QPOLY_HPP
#define TDN_QPOLY_HPP

#include <string>
#include <vector>

#include "tdn/rational.hpp"

namespace tdn {

/// Dense polynomial in q with exact rational coefficients; trailing zeros
/// stripped, arithmetic exact.  Immutable value type.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(Rat constant);
  explicit QPoly(std::vector<Rat> coeffs);  // coeffs[i] multiplies q^i

  static QPoly zero() { return QPoly(); }
  static QPoly one() { return QPoly(Rat(1)); }
  /// q^k
  static QPoly power(int k, Rat coeff = Rat(1));

  bool is_zero() const { return c_.empty(); }
  /// Degree in q; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rat coeff(int i) const;
  const std::vector<Rat>& coeffs() const { return c_; }

  bool integer_coeffs() const;
  bool even_powers_only() const;
  bool nonnegative_coeffs() const;
  /// coeff(i) == coeff(deg - i) for all i.
  bool palindromic() const;

  Rat eval(const Rat& q) const;

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const Rat& s, const QPoly& p);
  friend bool operator==(const QPoly& a, const QPoly& b) {
    return a.c_ == b.c_;
  }

  /// Human rendering, e.g. "1+5q^2+q^4"; "0" when zero.
  std::string to_string(const std::string& var = "q") const;

 private:
  void strip();
  std::vector<Rat> c_;
};

/// Rank polynomial of projective (m-1)-space: 1 + q^2 + ... + q^(2(m-1));
/// zero when m = 0.
QPoly kappa(int m);

}  // namespace tdn

#endif
