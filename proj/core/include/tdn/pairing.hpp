#ifndef TDN_PAIRING_HPP
#define TDN_PAIRING_HPP

#include <string>
#include <vector>

#include "tdn/presentation.hpp"

namespace tdn {

/// The 1-cycle C_T = delta_T^(d(|T|-1)-1) * delta_N^(d(n-|T|)-1) of
/// codimension D-1.  Requires T properly contained in N with |T| >= 2;
/// both exponents come out nonnegative for such T (guarded anyway).
CycleClass curve_class(const RingPresentation& p, Subset T);

/// True for the degenerate d = 1, |T| = 2 curves excluded from the dual
/// basis: C_T degenerates and the closed-form pairing does not apply.
bool degenerate_curve(const RingPresentation& p, Subset T);

/// integrate(delta_S . C_T); the result is asserted to be an integer.
Int pair_divisor_curve(const RingPresentation& p, Subset S, Subset T);

/// Closed-form value the pairing theorem predicts for (S, T) in its range.
Int expected_pairing(const RingPresentation& p, Subset S, Subset T);

struct PairingTable {
  std::vector<Subset> rows;  ///< S over proper subsets, |S| >= 2
  std::vector<Subset> cols;  ///< T over the basis range for this d
  std::vector<std::vector<Int>> values;
  bool matches_closed_form = true;
  /// First mismatch if any, with computed and expected values.
  std::string first_mismatch;
  /// Determinant of the square restriction to the basis range (rows
  /// restricted like cols); +-1 exactly when the curves are dual to the
  /// divisor basis.
  Int basis_determinant;
  bool determinant_unit = false;
};

/// Full divisor/curve intersection table.  T is restricted to |T| >= 3
/// when d = 1 (the degenerate curves are excluded from the basis).
PairingTable pairing_table(const RingPresentation& p);

/// eta_S = sum of delta_T over N >= T >= S; nef and base point free.
CycleClass eta_class(const RingPresentation& p, Subset S);

struct NefEntry {
  Subset s;
  Subset t;
  Int value;
};

struct NefReport {
  std::vector<NefEntry> entries;
  std::vector<std::size_t> negative_indices;
  bool all_nonnegative = true;
};

/// eta_S . C_T for every S (including N) and every basis-range T; flags
/// negative values, which would contradict nefness.
NefReport nef_report(const RingPresentation& p);

/// Exact determinant of a square integer matrix (fraction-free Gaussian
/// elimination).
Int integer_determinant(std::vector<std::vector<Int>> m);

}  // namespace tdn

#endif
