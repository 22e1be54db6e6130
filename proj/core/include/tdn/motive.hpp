#ifndef TDN_MOTIVE_HPP
#define TDN_MOTIVE_HPP

#include <string>

#include "tdn/lefschetz.hpp"

namespace tdn {

/// Rank polynomial of a projective bundle of relative dimension r-1 over a
/// base with the given ranks: base * (1 + L + ... + L^(r-1)).
LefschetzPoly proj_bundle(const LefschetzPoly& base, int r);

/// Rank polynomial of a blowup along a regularly embedded center of the
/// given codimension: total + center * (L + ... + L^(codim-1)).
LefschetzPoly blowup(const LefschetzPoly& total, const LefschetzPoly& center,
                     int codim);

/// Chow-rank polynomial of T_{d,n}: one full twist block from the bundle
/// step, blowup blocks over proper subsets with the product factorization,
/// and the final point blowups.  Matches the Betti polynomial under
/// L <-> q^2.
LefschetzPoly tdn_ranks(int d, int n);

/// Ranks of a fiber product of two T-spaces over a common base:
/// a * b / base, with exact divisibility asserted (DivisionError on
/// misuse).
LefschetzPoly fiber_product_ranks(const LefschetzPoly& base,
                                  const LefschetzPoly& a,
                                  const LefschetzPoly& b);

/// A space with a known cell decomposition; product rules for Chow ranks
/// require cellular = true.
struct CellularSpace {
  std::string name;
  int dimension = 0;
  LefschetzPoly poly;
  bool cellular = false;

  static CellularSpace point();
  static CellularSpace projective(int m);
  static CellularSpace product(const CellularSpace& a, const CellularSpace& b);
  /// Parses "P2", "P1xP1", ...; throws BadParamsError on anything else.
  static CellularSpace parse(const std::string& name);
};

/// Chow-rank polynomial of the configuration compactification X[n] of a
/// cellular space X, via the blowup tower over X[n-1] x X.  The boundary
/// sum runs over all subsets S of {1..n-1} with |S| >= 2 including the
/// full set (whose blowup is the first of the tower).  Requires cellular X
/// for n >= 2 (NotCellularError) and n >= 1 (BadParamsError).
LefschetzPoly fm_ranks(const CellularSpace& X, int n);

/// Rank shadow of the boundary divisor attached to an s-element subset on
/// X[n]: fm_ranks(X, n-s+1) * tdn_ranks(dim X, s).
LefschetzPoly fm_boundary_ranks(const CellularSpace& X, int n, int s);

}  // namespace tdn

#endif
