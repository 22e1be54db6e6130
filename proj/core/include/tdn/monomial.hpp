#ifndef TDN_MONOMIAL_HPP
#define TDN_MONOMIAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "tdn/subset.hpp"

namespace tdn {

/// A monomial in the boundary classes delta_S: factors (variable, positive
/// exponent), kept sorted in the variable order (cardinality ascending,
/// then lexicographic).  A monomial whose support contains a non-nested
/// pair is zero-equivalent in every presentation.
class BoundaryMonomial {
 public:
  BoundaryMonomial() = default;  // the empty monomial (degree 0)

  /// Validates exponents > 0 and |S| >= 2 per factor; merges duplicates.
  static BoundaryMonomial make(std::vector<std::pair<Subset, int>> factors);
  static BoundaryMonomial one() { return BoundaryMonomial(); }
  static BoundaryMonomial variable(Subset s, int exponent = 1);

  const std::vector<std::pair<Subset, int>>& factors() const {
    return factors_;
  }
  int degree() const { return degree_; }
  bool is_one() const { return factors_.empty(); }
  int exponent_of(Subset s) const;

  /// True iff the support is pairwise nested.
  bool nested_support() const;

  BoundaryMonomial times(const BoundaryMonomial& o) const;

  /// Dense-lexicographic comparison of exponent vectors over the variable
  /// order; total and deterministic.
  static int compare(const BoundaryMonomial& a, const BoundaryMonomial& b);

  friend bool operator==(const BoundaryMonomial& a, const BoundaryMonomial& b) {
    return a.factors_ == b.factors_;
  }
  friend bool operator<(const BoundaryMonomial& a, const BoundaryMonomial& b) {
    return compare(a, b) < 0;
  }

  /// e.g. "d{1,2}^2.d{1,2,3}"; "1" for the empty monomial.
  std::string to_string() const;

 private:
  std::vector<std::pair<Subset, int>> factors_;
  int degree_ = 0;
};

struct MonomialLess {
  bool operator()(const BoundaryMonomial& a, const BoundaryMonomial& b) const {
    return BoundaryMonomial::compare(a, b) < 0;
  }
};

}  // namespace tdn

#endif
