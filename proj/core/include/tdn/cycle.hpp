#ifndef TDN_CYCLE_HPP
#define TDN_CYCLE_HPP

#include <map>
#include <optional>
#include <string>

#include "tdn/monomial.hpp"
#include "tdn/rational.hpp"

namespace tdn {

/// A homogeneous formal linear combination of boundary monomials with
/// exact rational coefficients.  Zero coefficients are dropped; the zero
/// class has no degree.  Multiplication discards products whose support is
/// non-nested (they vanish by the quadratic boundary relation).
class CycleClass {
 public:
  CycleClass() = default;  // the zero class

  static CycleClass zero() { return CycleClass(); }
  static CycleClass monomial(BoundaryMonomial m, Rat coeff = Rat(1));
  static CycleClass unit() {
    return monomial(BoundaryMonomial::one());
  }
  static CycleClass delta(Subset s, int exponent = 1);

  bool is_zero() const { return terms_.empty(); }
  /// Homogeneous degree; nullopt for the zero class.
  std::optional<int> degree() const;
  const std::map<BoundaryMonomial, Rat, MonomialLess>& terms() const {
    return terms_;
  }

  /// Adds a term; throws DegreeError on mixed degrees.
  void add_term(const BoundaryMonomial& m, const Rat& coeff);

  CycleClass operator-() const;
  CycleClass& operator+=(const CycleClass& o);
  CycleClass& operator-=(const CycleClass& o);
  friend CycleClass operator+(CycleClass a, const CycleClass& b) {
    return a += b;
  }
  friend CycleClass operator-(CycleClass a, const CycleClass& b) {
    return a -= b;
  }
  friend CycleClass operator*(const Rat& s, const CycleClass& c);
  /// Product in the ring: non-nested supports are dropped.
  friend CycleClass operator*(const CycleClass& a, const CycleClass& b);

  friend bool operator==(const CycleClass& a, const CycleClass& b) {
    return a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  std::map<BoundaryMonomial, Rat, MonomialLess> terms_;
};

}  // namespace tdn

#endif
