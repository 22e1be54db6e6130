#include "tdn/pairing.hpp"

#include <algorithm>

#include "tdn/errors.hpp"

namespace tdn {

namespace {

std::vector<Subset> proper_indices(const RingPresentation& p, int min_size) {
  std::vector<Subset> out;
  for (Subset s : p.variables())
    if (s != p.ground() && s.size() >= min_size) out.push_back(s);
  return out;
}

int basis_min_size(const RingPresentation& p) { return p.d() == 1 ? 3 : 2; }

}  // namespace

CycleClass curve_class(const RingPresentation& p, Subset T) {
  if (T.size() < 2 || !T.within_ground(p.n()) || T == p.ground())
    throw BadSubsetError("curve index must be a proper subset with >= 2 "
                         "elements, got " +
                         T.to_string());
  const int eT = p.d() * (T.size() - 1) - 1;
  const int eN = p.d() * (p.n() - T.size()) - 1;
  if (eT < 0 || eN < 0)
    throw NegativeExponentError("degenerate curve exponents for " +
                                T.to_string());
  CycleClass c = CycleClass::unit();
  if (eT > 0) c = c * CycleClass::delta(T, eT);
  if (eN > 0) c = c * CycleClass::delta(p.ground(), eN);
  return c;
}

bool degenerate_curve(const RingPresentation& p, Subset T) {
  return p.d() == 1 && T.size() == 2;
}

Int pair_divisor_curve(const RingPresentation& p, Subset S, Subset T) {
  if (S.size() < 2 || !S.within_ground(p.n()) || S == p.ground())
    throw BadSubsetError("divisor index must be a proper subset with >= 2 "
                         "elements, got " +
                         S.to_string());
  const Rat v = p.integrate(CycleClass::delta(S) * curve_class(p, T));
  return to_integer(v);
}

Int expected_pairing(const RingPresentation& p, Subset S, Subset T) {
  if (S == T) return (p.d() * (p.n() - 1)) % 2 == 0 ? Int(1) : Int(-1);
  if (p.d() == 1 && S.size() == 2 && S.proper_subset_of(T))
    return (p.n() - 2) % 2 == 0 ? Int(1) : Int(-1);
  return Int(0);
}

PairingTable pairing_table(const RingPresentation& p) {
  PairingTable table;
  table.rows = proper_indices(p, 2);
  table.cols = proper_indices(p, basis_min_size(p));
  table.values.resize(table.rows.size());
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    table.values[i].reserve(table.cols.size());
    for (std::size_t j = 0; j < table.cols.size(); ++j) {
      Int v = pair_divisor_curve(p, table.rows[i], table.cols[j]);
      const Int expected = expected_pairing(p, table.rows[i], table.cols[j]);
      if (v != expected && table.matches_closed_form) {
        table.matches_closed_form = false;
        table.first_mismatch = "entry (" + table.rows[i].to_string() + ", " +
                               table.cols[j].to_string() + ") computed " +
                               v.get_str() + ", expected " + expected.get_str();
      }
      table.values[i].push_back(std::move(v));
    }
  }
  // Square restriction: rows over the same index range as the curves.
  std::vector<std::vector<Int>> square;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    if (table.rows[i].size() < basis_min_size(p)) continue;
    square.push_back(table.values[i]);
  }
  table.basis_determinant = integer_determinant(std::move(square));
  table.determinant_unit =
      table.basis_determinant == 1 || table.basis_determinant == -1;
  return table;
}

CycleClass eta_class(const RingPresentation& p, Subset S) {
  if (S.size() < 2 || !S.within_ground(p.n()))
    throw BadSubsetError("eta index must have >= 2 elements inside the "
                         "ground set, got " +
                         S.to_string());
  CycleClass out;
  for (Subset t : p.variables())
    if (S.subset_of(t)) out += CycleClass::delta(t);
  return out;
}

NefReport nef_report(const RingPresentation& p) {
  NefReport report;
  const std::vector<Subset> curves = proper_indices(p, basis_min_size(p));
  for (Subset s : p.variables()) {
    const CycleClass eta = eta_class(p, s);
    for (Subset t : curves) {
      const Rat v = p.integrate(eta * curve_class(p, t));
      NefEntry entry{s, t, to_integer(v)};
      if (entry.value < 0) {
        report.negative_indices.push_back(report.entries.size());
        report.all_nonnegative = false;
      }
      report.entries.push_back(std::move(entry));
    }
  }
  return report;
}

Int integer_determinant(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  if (n == 0) return Int(1);
  for (const auto& row : m)
    if (row.size() != n) throw BadParamsError("determinant of non-square matrix");
  // Bareiss fraction-free elimination.
  Int sign(1), prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return Int(0);
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace tdn
