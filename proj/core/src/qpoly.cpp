#include "tdn/qpoly.hpp"

#include "tdn/errors.hpp"

namespace tdn {

QPoly::QPoly(Rat constant) {
  if (constant != 0) c_.push_back(std::move(constant));
}

QPoly::QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { strip(); }

QPoly QPoly::power(int k, Rat coeff) {
  if (k < 0) throw BadParamsError("negative power of q");
  if (coeff == 0) return QPoly();
  std::vector<Rat> c(k + 1, Rat(0));
  c[k] = std::move(coeff);
  return QPoly(std::move(c));
}

void QPoly::strip() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat QPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
  return c_[i];
}

bool QPoly::integer_coeffs() const {
  for (const Rat& r : c_)
    if (r.get_den() != 1) return false;
  return true;
}

bool QPoly::even_powers_only() const {
  for (std::size_t i = 1; i < c_.size(); i += 2)
    if (c_[i] != 0) return false;
  return true;
}

bool QPoly::nonnegative_coeffs() const {
  for (const Rat& r : c_)
    if (r < 0) return false;
  return true;
}

bool QPoly::palindromic() const {
  const int d = degree();
  for (int i = 0; 2 * i <= d; ++i)
    if (coeff(i) != coeff(d - i)) return false;
  return true;
}

Rat QPoly::eval(const Rat& q) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

QPoly QPoly::operator-() const {
  QPoly out(*this);
  for (Rat& r : out.c_) r = -r;
  return out;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  strip();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  strip();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return QPoly(std::move(c));
}

QPoly operator*(const Rat& s, const QPoly& p) {
  if (s == 0) return QPoly();
  QPoly out(p);
  for (Rat& r : out.c_) r *= s;
  return out;
}

std::string QPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = 0; i <= degree(); ++i) {
    const Rat& r = c_[i];
    if (r == 0) continue;
    const bool first = out.empty();
    Rat a = r;
    if (a < 0) {
      out += "-";
      a = -a;
    } else if (!first) {
      out += "+";
    }
    std::string mag = rat_to_string(a);
    if (a.get_den() != 1) mag = "(" + mag + ")";
    if (i == 0) {
      out += mag;
    } else {
      if (mag != "1") out += mag;
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

QPoly kappa(int m) {
  if (m < 0) throw BadParamsError("kappa requires m >= 0");
  std::vector<Rat> c;
  c.resize(m == 0 ? 0 : 2 * (m - 1) + 1, Rat(0));
  for (int j = 0; j < m; ++j) c[2 * j] = Rat(1);
  return QPoly(std::move(c));
}

}  // namespace tdn
