#include "support/dense_oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace tdn::testing {

DenseRing::DenseRing(int d, int n) : d_(d), n_(n), top_(d * (n - 1) - 1) {
  const std::uint32_t fullbits = Subset::full(n).bits();
  for (std::uint32_t b = 0; b <= fullbits; ++b) {
    Subset s(b);
    if (s.size() >= 2) vars_.push_back(s);
  }
  std::sort(vars_.begin(), vars_.end(), VariableOrder{});
}

const DenseRing::Piece& DenseRing::piece(int k) const {
  auto it = pieces_.find(k);
  if (it != pieces_.end()) return it->second;

  Piece pc;
  const int v = static_cast<int>(vars_.size());

  // All exponent vectors of total degree k.
  std::vector<int> cur(v, 0);
  std::function<void(int, int)> gen = [&](int idx, int remaining) {
    if (idx == v - 1) {
      cur[idx] = remaining;
      pc.monomials.push_back(cur);
      cur[idx] = 0;
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      cur[idx] = e;
      gen(idx + 1, remaining - e);
    }
    cur[idx] = 0;
  };
  if (v > 0) gen(0, k);
  for (std::size_t i = 0; i < pc.monomials.size(); ++i)
    pc.index[pc.monomials[i]] = static_cast<int>(i);

  const int cols = static_cast<int>(pc.monomials.size());
  std::vector<std::vector<Rat>> rows;

  // Type 1: products of two overlapping, non-nested indices times every
  // monomial of degree k-2.
  if (k >= 2) {
    std::vector<std::vector<int>> lower;
    {
      std::function<void(int, int, std::vector<int>&)> genl =
          [&](int idx, int remaining, std::vector<int>& acc) {
            if (idx == v - 1) {
              acc[idx] = remaining;
              lower.push_back(acc);
              acc[idx] = 0;
              return;
            }
            for (int e = 0; e <= remaining; ++e) {
              acc[idx] = e;
              genl(idx + 1, remaining - e, acc);
            }
            acc[idx] = 0;
          };
      std::vector<int> acc(v, 0);
      genl(0, k - 2, acc);
    }
    for (int a = 0; a < v; ++a) {
      for (int b = a + 1; b < v; ++b) {
        if (nested(vars_[a], vars_[b])) continue;
        for (const auto& m : lower) {
          std::vector<Rat> row(cols, Rat(0));
          std::vector<int> prod = m;
          prod[a] += 1;
          prod[b] += 1;
          row[pc.index.at(prod)] = Rat(1);
          rows.push_back(std::move(row));
        }
      }
    }
  }

  // Type 2: full multinomial expansion of (Sigma_ij)^d times every monomial
  // of degree k-d.
  if (k >= d_) {
    std::vector<std::vector<int>> lower;
    {
      std::function<void(int, int, std::vector<int>&)> genl =
          [&](int idx, int remaining, std::vector<int>& acc) {
            if (idx == v - 1) {
              acc[idx] = remaining;
              lower.push_back(acc);
              acc[idx] = 0;
              return;
            }
            for (int e = 0; e <= remaining; ++e) {
              acc[idx] = e;
              genl(idx + 1, remaining - e, acc);
            }
            acc[idx] = 0;
          };
      std::vector<int> acc(v, 0);
      genl(0, k - d_, acc);
    }
    for (int i = 1; i <= n_; ++i) {
      for (int j = i + 1; j <= n_; ++j) {
        std::vector<int> sup;
        for (int a = 0; a < v; ++a)
          if (vars_[a].contains(i) && vars_[a].contains(j)) sup.push_back(a);
        // Expansion terms: exponent assignment over sup summing to d,
        // multinomial coefficient, no nestedness filtering.
        struct Term {
          std::vector<std::pair<int, int>> factors;  // (var index, exp)
          Int coeff;
        };
        std::vector<Term> terms;
        std::vector<std::pair<int, int>> curf;
        std::function<void(std::size_t, int, Int)> expand =
            [&](std::size_t from, int remaining, Int coeff) {
              if (remaining == 0) {
                terms.push_back(Term{curf, coeff});
                return;
              }
              for (std::size_t idx = from; idx < sup.size(); ++idx) {
                for (int e = 1; e <= remaining; ++e) {
                  curf.emplace_back(sup[idx], e);
                  expand(idx + 1, remaining - e,
                         coeff * binomial_int(remaining, e));
                  curf.pop_back();
                }
              }
            };
        expand(0, d_, Int(1));
        for (const auto& m : lower) {
          std::vector<Rat> row(cols, Rat(0));
          for (const Term& t : terms) {
            std::vector<int> prod = m;
            for (const auto& [var, e] : t.factors) prod[var] += e;
            row[pc.index.at(prod)] += Rat(t.coeff);
          }
          bool nonzero = false;
          for (const Rat& r : row)
            if (r != 0) {
              nonzero = true;
              break;
            }
          if (nonzero) rows.push_back(std::move(row));
        }
      }
    }
  }

  // Textbook Gauss-Jordan to full RREF.
  pc.col_is_pivot.assign(cols, false);
  std::size_t next_row = 0;
  for (int col = 0; col < cols && next_row < rows.size(); ++col) {
    std::size_t p = next_row;
    while (p < rows.size() && rows[p][col] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[next_row], rows[p]);
    const Rat inv = Rat(1) / rows[next_row][col];
    for (Rat& x : rows[next_row]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next_row || rows[r][col] == 0) continue;
      const Rat f = rows[r][col];
      for (int c2 = 0; c2 < cols; ++c2) rows[r][c2] -= f * rows[next_row][c2];
    }
    pc.col_is_pivot[col] = true;
    pc.pivot_col_of_row.push_back(col);
    ++next_row;
  }
  rows.resize(next_row);
  pc.rref = std::move(rows);

  return pieces_.emplace(k, std::move(pc)).first->second;
}

std::vector<Rat> DenseRing::reduce(const Piece& pc, std::vector<Rat> v) const {
  for (std::size_t r = 0; r < pc.rref.size(); ++r) {
    const int col = pc.pivot_col_of_row[r];
    if (v[col] == 0) continue;
    const Rat f = v[col];
    for (std::size_t c = 0; c < v.size(); ++c) v[c] -= f * pc.rref[r][c];
  }
  return v;
}

int DenseRing::rank(int k) const {
  const Piece& pc = piece(k);
  return static_cast<int>(pc.monomials.size() - pc.rref.size());
}

Rat DenseRing::integrate(const CycleClass& c) const {
  const Piece& pc = piece(top_);
  if (static_cast<int>(pc.monomials.size()) - static_cast<int>(pc.rref.size()) !=
      1)
    throw std::runtime_error("dense oracle: top piece rank is not 1");

  auto vectorize = [&](const CycleClass& cls) {
    std::vector<Rat> v(pc.monomials.size(), Rat(0));
    for (const auto& [m, coeff] : cls.terms()) {
      std::vector<int> exps(vars_.size(), 0);
      for (const auto& [s, e] : m.factors()) {
        auto it = std::find(vars_.begin(), vars_.end(), s);
        if (it == vars_.end())
          throw std::runtime_error("dense oracle: unknown variable");
        exps[it - vars_.begin()] += e;
      }
      v[pc.index.at(exps)] += coeff;
    }
    return v;
  };

  std::vector<int> topmono(vars_.size(), 0);
  {
    auto it = std::find(vars_.begin(), vars_.end(), Subset::full(n_));
    topmono[it - vars_.begin()] = top_;
  }
  std::vector<Rat> top_nf =
      reduce(pc, [&] {
        std::vector<Rat> v(pc.monomials.size(), Rat(0));
        v[pc.index.at(topmono)] = Rat(1);
        return v;
      }());
  std::vector<Rat> c_nf = reduce(pc, vectorize(c));

  int basis_col = -1;
  for (std::size_t col = 0; col < pc.col_is_pivot.size(); ++col)
    if (!pc.col_is_pivot[col]) basis_col = static_cast<int>(col);
  if (basis_col < 0 || top_nf[basis_col] == 0)
    throw std::runtime_error("dense oracle: top power is zero");
  const Rat lambda = c_nf[basis_col] / top_nf[basis_col];
  return (top_ % 2 == 0) ? lambda : -lambda;
}

std::uint64_t brute_force_family_count(int n) {
  return brute_force_families(n).size();
}

std::vector<std::vector<std::uint32_t>> brute_force_families(int n) {
  std::vector<Subset> candidates;
  const std::uint32_t fullbits = Subset::full(n).bits();
  for (std::uint32_t b = 0; b <= fullbits; ++b) {
    Subset s(b);
    if (s.size() >= 2 && b != fullbits) candidates.push_back(s);
  }
  const std::size_t c = candidates.size();
  if (c > 20) throw std::runtime_error("brute force oracle limited to n <= 4");
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint64_t mask = 0; mask < (1ull << c); ++mask) {
    std::vector<Subset> chosen;
    for (std::size_t i = 0; i < c; ++i)
      if ((mask >> i) & 1) chosen.push_back(candidates[i]);
    bool ok = true;
    for (std::size_t i = 0; i < chosen.size() && ok; ++i)
      for (std::size_t j = i + 1; j < chosen.size() && ok; ++j)
        if (!nested(chosen[i], chosen[j])) ok = false;
    if (!ok) continue;
    std::vector<std::uint32_t> bits;
    for (Subset s : chosen) bits.push_back(s.bits());
    std::sort(bits.begin(), bits.end());
    out.push_back(std::move(bits));
  }
  return out;
}

}  // namespace tdn::testing
