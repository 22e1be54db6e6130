#ifndef TDN_LEFSCHETZ_HPP
#define TDN_LEFSCHETZ_HPP

#include <string>
#include <vector>

#include "tdn/rational.hpp"

namespace tdn {

/// Polynomial in the Lefschetz twist symbol L with nonnegative integer
/// coefficients; coefficient of L^i records the rank of the codimension-i
/// Chow group.  Degree equals the dimension of the space described.
class LefschetzPoly {
 public:
  LefschetzPoly() = default;
  explicit LefschetzPoly(Int constant);
  explicit LefschetzPoly(std::vector<Int> coeffs);

  static LefschetzPoly zero() { return LefschetzPoly(); }
  static LefschetzPoly one() { return LefschetzPoly(Int(1)); }
  /// 1 + L + ... + L^(m-1); zero for m = 0.
  static LefschetzPoly twist_block(int m);
  /// L^a + ... + L^b (empty when a > b).
  static LefschetzPoly twist_range(int a, int b);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Int coeff(int i) const;
  const std::vector<Int>& coeffs() const { return c_; }
  bool nonnegative() const;
  bool palindromic() const;
  /// Evaluation at L = 1: the Euler characteristic of a cellular space.
  Int at_one() const;

  LefschetzPoly& operator+=(const LefschetzPoly& o);
  friend LefschetzPoly operator+(LefschetzPoly a, const LefschetzPoly& b) {
    return a += b;
  }
  friend LefschetzPoly operator*(const LefschetzPoly& a,
                                 const LefschetzPoly& b);
  friend LefschetzPoly operator*(const Int& s, const LefschetzPoly& p);
  friend bool operator==(const LefschetzPoly& a, const LefschetzPoly& b) {
    return a.c_ == b.c_;
  }

  /// Exact quotient; throws DivisionError when the division leaves a
  /// remainder or a non-integer step.
  LefschetzPoly exact_div(const LefschetzPoly& divisor) const;

  std::string to_string() const;

 private:
  void strip();
  std::vector<Int> c_;
};

}  // namespace tdn

#endif
