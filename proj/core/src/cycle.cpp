#include "tdn/cycle.hpp"

#include "tdn/errors.hpp"

namespace tdn {

CycleClass CycleClass::monomial(BoundaryMonomial m, Rat coeff) {
  CycleClass c;
  if (coeff != 0) c.terms_.emplace(std::move(m), std::move(coeff));
  return c;
}

CycleClass CycleClass::delta(Subset s, int exponent) {
  if (exponent == 0) return unit();
  return monomial(BoundaryMonomial::variable(s, exponent));
}

std::optional<int> CycleClass::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.degree();
}

void CycleClass::add_term(const BoundaryMonomial& m, const Rat& coeff) {
  if (coeff == 0) return;
  if (!terms_.empty() && terms_.begin()->first.degree() != m.degree())
    throw DegreeError("mixed degrees in cycle class: " +
                      std::to_string(terms_.begin()->first.degree()) +
                      " vs " + std::to_string(m.degree()));
  auto [it, inserted] = terms_.emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

CycleClass CycleClass::operator-() const {
  CycleClass out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

CycleClass& CycleClass::operator+=(const CycleClass& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

CycleClass& CycleClass::operator-=(const CycleClass& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

CycleClass operator*(const Rat& s, const CycleClass& c) {
  CycleClass out;
  if (s == 0) return out;
  for (const auto& [m, r] : c.terms_) out.terms_.emplace(m, s * r);
  return out;
}

CycleClass operator*(const CycleClass& a, const CycleClass& b) {
  CycleClass out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      BoundaryMonomial prod = ma.times(mb);
      if (!prod.nested_support()) continue;
      out.add_term(prod, ca * cb);
    }
  }
  return out;
}

std::string CycleClass::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += rat_to_string(c) + "*" + m.to_string();
  }
  return out;
}

}  // namespace tdn
