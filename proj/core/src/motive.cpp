#include "tdn/motive.hpp"

#include <vector>

#include "tdn/errors.hpp"

namespace tdn {

LefschetzPoly proj_bundle(const LefschetzPoly& base, int r) {
  if (r < 1) throw BadParamsError("projective bundle needs rank >= 1");
  return base * LefschetzPoly::twist_block(r);
}

LefschetzPoly blowup(const LefschetzPoly& total, const LefschetzPoly& center,
                     int codim) {
  if (codim < 1) throw BadParamsError("blowup center needs codimension >= 1");
  return total + center * LefschetzPoly::twist_range(1, codim - 1);
}

LefschetzPoly tdn_ranks(int d, int n) {
  if (d < 1 || n < 2) throw BadParamsError("tdn_ranks needs d >= 1 and n >= 2");
  std::vector<LefschetzPoly> r(n + 1);
  r[2] = LefschetzPoly::twist_block(d);  // projective (d-1)-space
  for (int m = 2; m < n; ++m) {
    // From m points to m+1: projective bundle of relative dimension d,
    // blowups along product boundaries, then m point blowups.
    LefschetzPoly next = r[m] * LefschetzPoly::twist_block(d + 1);
    for (int s = 2; s <= m - 1; ++s) {
      const LefschetzPoly block =
          binomial_int(m, s) * (r[s] * r[m - s + 1]);
      next += block * LefschetzPoly::twist_range(1, d);
    }
    next += (Int(m) * r[m]) * LefschetzPoly::twist_range(1, d - 1);
    r[m + 1] = next;
  }
  return r[n];
}

LefschetzPoly fiber_product_ranks(const LefschetzPoly& base,
                                  const LefschetzPoly& a,
                                  const LefschetzPoly& b) {
  const LefschetzPoly a_rel = a.exact_div(base);  // DivisionError on misuse
  b.exact_div(base);
  return a_rel * b;
}

CellularSpace CellularSpace::point() {
  return CellularSpace{"pt", 0, LefschetzPoly::one(), true};
}

CellularSpace CellularSpace::projective(int m) {
  if (m < 0) throw BadParamsError("projective space dimension must be >= 0");
  return CellularSpace{"P" + std::to_string(m), m,
                       LefschetzPoly::twist_block(m + 1), true};
}

CellularSpace CellularSpace::product(const CellularSpace& a,
                                     const CellularSpace& b) {
  return CellularSpace{a.name + "x" + b.name, a.dimension + b.dimension,
                       a.poly * b.poly, a.cellular && b.cellular};
}

CellularSpace CellularSpace::parse(const std::string& name) {
  CellularSpace out = point();
  bool first = true;
  std::size_t pos = 0;
  while (pos < name.size()) {
    std::size_t next = name.find('x', pos);
    if (next == std::string::npos) next = name.size();
    const std::string piece = name.substr(pos, next - pos);
    if (piece.size() < 2 || (piece[0] != 'P' && piece[0] != 'p'))
      throw BadParamsError("unknown space: " + name);
    int m = 0;
    try {
      m = std::stoi(piece.substr(1));
    } catch (...) {
      throw BadParamsError("unknown space: " + name);
    }
    out = first ? projective(m) : product(out, projective(m));
    first = false;
    pos = next + 1;
  }
  if (first) throw BadParamsError("empty space name");
  return out;
}

LefschetzPoly fm_ranks(const CellularSpace& X, int n) {
  if (n < 1) throw BadParamsError("fm_ranks needs n >= 1");
  if (X.dimension < 1 && n >= 2)
    throw BadParamsError("configuration spaces need dim X >= 1");
  if (n >= 2 && !X.cellular)
    throw NotCellularError("Chow ranks of X[n] require a cellular X; no "
                           "product formula is known otherwise");
  const int d = X.dimension;
  std::vector<LefschetzPoly> fm(n + 1);
  fm[1] = X.poly;
  for (int m = 1; m < n; ++m) {
    // X[m+1] is a tower of blowups of X[m] x X: codimension d+1 centers
    // for every S <= {1..m} with |S| >= 2 (the full set first), then m
    // codimension d graph centers.
    LefschetzPoly next = fm[m] * X.poly;
    for (int s = 2; s <= m; ++s) {
      const LefschetzPoly dS = fm[m - s + 1] * tdn_ranks(d, s);
      next += (binomial_int(m, s) * dS) * LefschetzPoly::twist_range(1, d);
    }
    next += (Int(m) * fm[m]) * LefschetzPoly::twist_range(1, d - 1);
    fm[m + 1] = next;
  }
  return fm[n];
}

LefschetzPoly fm_boundary_ranks(const CellularSpace& X, int n, int s) {
  if (s < 2 || s > n) throw BadParamsError("boundary subset size out of range");
  return fm_ranks(X, n - s + 1) * tdn_ranks(X.dimension, s);
}

}  // namespace tdn
