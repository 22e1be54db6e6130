#include "tdn/monomial.hpp"

#include <algorithm>

#include "tdn/errors.hpp"

namespace tdn {

BoundaryMonomial BoundaryMonomial::make(
    std::vector<std::pair<Subset, int>> factors) {
  for (const auto& [s, e] : factors) {
    if (s.size() < 2)
      throw BadCardinalityError("delta index " + s.to_string() +
                                " has fewer than 2 elements");
    if (e <= 0)
      throw NegativeExponentError("exponent of " + s.to_string() +
                                  " must be positive, got " +
                                  std::to_string(e));
  }
  std::sort(factors.begin(), factors.end(),
            [](const auto& a, const auto& b) {
              return variable_order_less(a.first, b.first);
            });
  BoundaryMonomial m;
  for (auto& [s, e] : factors) {
    if (!m.factors_.empty() && m.factors_.back().first == s)
      m.factors_.back().second += e;
    else
      m.factors_.emplace_back(s, e);
    m.degree_ += e;
  }
  return m;
}

BoundaryMonomial BoundaryMonomial::variable(Subset s, int exponent) {
  return make({{s, exponent}});
}

int BoundaryMonomial::exponent_of(Subset s) const {
  for (const auto& [v, e] : factors_)
    if (v == s) return e;
  return 0;
}

bool BoundaryMonomial::nested_support() const {
  for (std::size_t i = 0; i < factors_.size(); ++i)
    for (std::size_t j = i + 1; j < factors_.size(); ++j)
      if (!nested(factors_[i].first, factors_[j].first)) return false;
  return true;
}

BoundaryMonomial BoundaryMonomial::times(const BoundaryMonomial& o) const {
  BoundaryMonomial m;
  m.degree_ = degree_ + o.degree_;
  auto ia = factors_.begin(), ib = o.factors_.begin();
  while (ia != factors_.end() || ib != o.factors_.end()) {
    if (ib == o.factors_.end() ||
        (ia != factors_.end() && variable_order_less(ia->first, ib->first))) {
      m.factors_.push_back(*ia++);
    } else if (ia == factors_.end() ||
               variable_order_less(ib->first, ia->first)) {
      m.factors_.push_back(*ib++);
    } else {
      m.factors_.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  return m;
}

int BoundaryMonomial::compare(const BoundaryMonomial& a,
                              const BoundaryMonomial& b) {
  auto ia = a.factors_.begin(), ib = b.factors_.begin();
  while (ia != a.factors_.end() && ib != b.factors_.end()) {
    if (ia->first == ib->first) {
      if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
      ++ia;
      ++ib;
    } else if (variable_order_less(ia->first, ib->first)) {
      return 1;  // a has a positive exponent where b has zero
    } else {
      return -1;
    }
  }
  if (ia != a.factors_.end()) return 1;
  if (ib != b.factors_.end()) return -1;
  return 0;
}

std::string BoundaryMonomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [s, e] : factors_) {
    if (!out.empty()) out += ".";
    out += "d" + s.to_string();
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace tdn
