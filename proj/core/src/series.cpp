#include "tdn/series.hpp"

#include "tdn/errors.hpp"

namespace tdn {

TruncSeries::TruncSeries(int order) : order_(order) {
  if (order < 0) throw BadParamsError("series order must be >= 0");
  c_.resize(order + 1);
}

TruncSeries::TruncSeries(int order, std::vector<QPoly> coeffs)
    : TruncSeries(order) {
  if (static_cast<int>(coeffs.size()) > order + 1)
    throw BadParamsError("too many series coefficients");
  for (std::size_t i = 0; i < coeffs.size(); ++i) c_[i] = std::move(coeffs[i]);
}

const QPoly& TruncSeries::coeff(int k) const {
  if (k < 0 || k > order_) throw BadParamsError("series coefficient index");
  return c_[k];
}

void TruncSeries::set_coeff(int k, QPoly p) {
  if (k < 0 || k > order_) throw BadParamsError("series coefficient index");
  c_[k] = std::move(p);
}

bool TruncSeries::is_zero() const {
  for (const QPoly& p : c_)
    if (!p.is_zero()) return false;
  return true;
}

int TruncSeries::valuation() const {
  for (int k = 0; k <= order_; ++k)
    if (!c_[k].is_zero()) return k;
  return order_ + 1;
}

TruncSeries TruncSeries::truncated(int order) const {
  if (order > order_) throw BadParamsError("cannot extend a truncated series");
  TruncSeries out(order);
  for (int k = 0; k <= order; ++k) out.c_[k] = c_[k];
  return out;
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries out(*this);
  for (QPoly& p : out.c_) p = -p;
  return out;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  if (o.order_ != order_) throw BadParamsError("series order mismatch");
  for (int k = 0; k <= order_; ++k) c_[k] += o.c_[k];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  if (o.order_ != order_) throw BadParamsError("series order mismatch");
  for (int k = 0; k <= order_; ++k) c_[k] -= o.c_[k];
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  if (a.order_ != b.order_) throw BadParamsError("series order mismatch");
  TruncSeries out(a.order_);
  for (int i = 0; i <= a.order_; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; i + j <= a.order_; ++j)
      out.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return out;
}

TruncSeries operator*(const QPoly& s, const TruncSeries& a) {
  TruncSeries out(a.order_);
  for (int k = 0; k <= a.order_; ++k) out.c_[k] = s * a.c_[k];
  return out;
}

TruncSeries TruncSeries::derivative() const {
  if (order_ == 0) throw BadParamsError("cannot differentiate an order-0 series");
  TruncSeries out(order_ - 1);
  for (int k = 0; k < order_; ++k) out.c_[k] = Rat(k + 1) * c_[k + 1];
  return out;
}

TruncSeries TruncSeries::log1p() const {
  if (!c_[0].is_zero())
    throw BadParamsError("log(1+s) requires s to have zero constant term");
  // log(1+s) = sum_{m>=1} (-1)^{m+1} s^m / m; s^m vanishes beyond m=order.
  TruncSeries out(order_);
  TruncSeries pw(order_);
  pw.c_[0] = QPoly::one();
  for (int m = 1; m <= order_; ++m) {
    pw = pw * *this;
    out += QPoly(make_rat((m % 2 == 1) ? 1 : -1, m)) * pw;
  }
  return out;
}

TruncSeries TruncSeries::exp() const {
  if (!c_[0].is_zero())
    throw BadParamsError("exp(s) requires s to have zero constant term");
  TruncSeries out(order_);
  TruncSeries pw(order_);
  pw.c_[0] = QPoly::one();
  out.c_[0] = QPoly::one();
  Int factorial(1);
  for (int m = 1; m <= order_; ++m) {
    pw = pw * *this;
    factorial *= m;
    out += QPoly(make_rat(Int(1), factorial)) * pw;
  }
  return out;
}

TruncSeries TruncSeries::t(int order) {
  TruncSeries out(order);
  if (order >= 1) out.c_[1] = QPoly::one();
  return out;
}

}  // namespace tdn
