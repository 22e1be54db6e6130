#include "tdn/lefschetz.hpp"

#include "tdn/errors.hpp"

namespace tdn {

LefschetzPoly::LefschetzPoly(Int constant) {
  if (constant != 0) c_.push_back(std::move(constant));
}

LefschetzPoly::LefschetzPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
  strip();
}

LefschetzPoly LefschetzPoly::twist_block(int m) {
  if (m < 0) throw BadParamsError("twist block needs m >= 0");
  return LefschetzPoly(std::vector<Int>(m, Int(1)));
}

LefschetzPoly LefschetzPoly::twist_range(int a, int b) {
  if (a < 0) throw BadParamsError("twist range needs a >= 0");
  if (a > b) return LefschetzPoly();
  std::vector<Int> c(b + 1, Int(0));
  for (int i = a; i <= b; ++i) c[i] = 1;
  return LefschetzPoly(std::move(c));
}

void LefschetzPoly::strip() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Int LefschetzPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Int(0);
  return c_[i];
}

bool LefschetzPoly::nonnegative() const {
  for (const Int& v : c_)
    if (v < 0) return false;
  return true;
}

bool LefschetzPoly::palindromic() const {
  const int d = degree();
  for (int i = 0; 2 * i <= d; ++i)
    if (coeff(i) != coeff(d - i)) return false;
  return true;
}

Int LefschetzPoly::at_one() const {
  Int total(0);
  for (const Int& v : c_) total += v;
  return total;
}

LefschetzPoly& LefschetzPoly::operator+=(const LefschetzPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Int(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  strip();
  return *this;
}

LefschetzPoly operator*(const LefschetzPoly& a, const LefschetzPoly& b) {
  if (a.is_zero() || b.is_zero()) return LefschetzPoly();
  std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      c[i + j] += a.c_[i] * b.c_[j];
  return LefschetzPoly(std::move(c));
}

LefschetzPoly operator*(const Int& s, const LefschetzPoly& p) {
  if (s == 0) return LefschetzPoly();
  LefschetzPoly out(p);
  for (Int& v : out.c_) v *= s;
  return out;
}

LefschetzPoly LefschetzPoly::exact_div(const LefschetzPoly& divisor) const {
  if (divisor.is_zero()) throw DivisionError("division by the zero polynomial");
  if (is_zero()) return LefschetzPoly();
  if (degree() < divisor.degree())
    throw DivisionError("dividend degree below divisor degree");
  std::vector<Int> rem = c_;
  std::vector<Int> quot(degree() - divisor.degree() + 1, Int(0));
  const Int& lead = divisor.c_.back();
  for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
    const Int& top = rem[k + divisor.degree()];
    if (top == 0) continue;
    if (top % lead != 0)
      throw DivisionError("non-exact polynomial division step");
    quot[k] = top / lead;
    for (std::size_t i = 0; i < divisor.c_.size(); ++i)
      rem[k + i] -= quot[k] * divisor.c_[i];
  }
  for (const Int& v : rem)
    if (v != 0) throw DivisionError("polynomial division left a remainder");
  return LefschetzPoly(std::move(quot));
}

std::string LefschetzPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = 0; i <= degree(); ++i) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += c_[i].get_str();
    } else {
      if (c_[i] != 1) out += c_[i].get_str();
      out += "L";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace tdn
