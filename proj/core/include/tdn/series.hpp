#ifndef TDN_SERIES_HPP
#define TDN_SERIES_HPP

#include <vector>

#include "tdn/qpoly.hpp"

namespace tdn {

/// Truncated power series in t of a fixed order M, with coefficients in
/// Q[q].  All operations truncate consistently at t^M; log and exp require
/// the expected valuation.
class TruncSeries {
 public:
  explicit TruncSeries(int order);
  TruncSeries(int order, std::vector<QPoly> coeffs);

  int order() const { return order_; }
  const QPoly& coeff(int k) const;
  void set_coeff(int k, QPoly p);
  bool is_zero() const;
  /// Smallest k with nonzero coefficient; order+1 when zero.
  int valuation() const;

  /// Copy truncated to a (not larger) order.
  TruncSeries truncated(int order) const;

  TruncSeries operator-() const;
  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) {
    return a += b;
  }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) {
    return a -= b;
  }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const QPoly& s, const TruncSeries& a);

  /// d/dt, one order lower.
  TruncSeries derivative() const;

  /// log(1 + this); requires zero constant term.
  TruncSeries log1p() const;
  /// exp(this); requires zero constant term.
  TruncSeries exp() const;

  /// The series t (valuation-one unit coefficient) at a given order.
  static TruncSeries t(int order);

 private:
  int order_;
  std::vector<QPoly> c_;  // size order_+1
};

}  // namespace tdn

#endif
