#ifndef TDN_CAPS_HPP
#define TDN_CAPS_HPP

#include <cstdint>

namespace tdn {

/// Size caps guarding the main super-exponential computations.  Defaults
/// cover the supported desk-scale range; all values can be overridden.
struct Caps {
  /// Ring presentations require d*n <= max_dn.
  int max_dn = 12;
  /// Per-degree bound on the number of nested monomials.
  std::uint64_t max_monomials = 2'000'000;
  /// Bound on the number of enumerated nested families.
  std::uint64_t max_families = 10'000'000;

  /// Defaults, with TDN_MAX_CELLS (if set) overriding the family
  /// enumeration cap.
  static Caps from_env();
};

}  // namespace tdn

#endif
