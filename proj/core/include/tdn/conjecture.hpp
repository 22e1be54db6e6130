#ifndef TDN_CONJECTURE_HPP
#define TDN_CONJECTURE_HPP

#include <map>
#include <optional>

#include "tdn/nested.hpp"
#include "tdn/presentation.hpp"

namespace tdn {

struct ConjectureReport {
  NestedFamily family;
  CycleClass monomial;       ///< the evaluated dual-pair product
  Rat integral;
  int sign = 0;              ///< -1, 0, +1 of the integral; reported, never asserted
  bool magnitude_ok = false; ///< |integral| == 1
  /// Singleton and empty families are instances of proven statements;
  /// for those the exact value is checked against the closed form.
  bool proven_case = false;
  bool matches_proven_value = false;
  std::optional<Rat> proven_value;
};

/// Evaluates the dual-pair product attached to a nested family: by default
/// (prod over members S of delta_S^(d chi(S))) * delta_N^(d chi(N) - 1),
/// whose total degree is automatically the top degree.  With an exponent
/// table n_S (0 < n_S <= d chi(S) for members, 0 <= n_N < d chi(N) for the
/// root) the general cycle/dual product is formed; since the pair
/// recombines to the default monomial, the table is validated and the same
/// product integrated.  Throws DegreeError on inconsistent exponent
/// bookkeeping.
ConjectureReport conjecture_check(
    const RingPresentation& p, const NestedFamily& f,
    const std::optional<std::map<std::uint32_t, int>>& exponents =
        std::nullopt);

}  // namespace tdn

#endif
