#include "tdn/subset.hpp"

#include "tdn/errors.hpp"

namespace tdn {

Subset Subset::full(int n) {
  if (n < 0 || n > kMaxGround)
    throw BadParamsError("ground set size out of range: " + std::to_string(n));
  return Subset(n == 0 ? 0u : ((1u << n) - 1u));
}

Subset Subset::of(std::initializer_list<int> elements) {
  std::uint32_t bits = 0;
  for (int e : elements) {
    if (e < 1 || e > kMaxGround)
      throw BadSubsetError("element out of range: " + std::to_string(e));
    bits |= 1u << (e - 1);
  }
  return Subset(bits);
}

Subset Subset::from_elements(const std::vector<int>& elements, int n) {
  std::uint32_t bits = 0;
  for (int e : elements) {
    if (e < 1 || e > n)
      throw BadSubsetError("element " + std::to_string(e) +
                           " outside ground set {1,...," + std::to_string(n) +
                           "}");
    bits |= 1u << (e - 1);
  }
  return Subset(bits);
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint32_t b = bits_; b; b &= b - 1)
    out.push_back(std::countr_zero(b) + 1);
  return out;
}

std::string Subset::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) s += ",";
    s += std::to_string(e);
    first = false;
  }
  return s + "}";
}

bool nested(Subset a, Subset b) {
  return !a.intersects(b) || a.subset_of(b) || b.subset_of(a);
}

bool lex_less(Subset a, Subset b) {
  std::uint32_t x = a.bits(), y = b.bits();
  while (x && y) {
    int i = std::countr_zero(x);
    int j = std::countr_zero(y);
    if (i != j) return i < j;
    x &= x - 1;
    y &= y - 1;
  }
  return y != 0;  // a is a proper prefix of b
}

bool family_order_less(Subset a, Subset b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return lex_less(a, b);
}

bool variable_order_less(Subset a, Subset b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

}  // namespace tdn
