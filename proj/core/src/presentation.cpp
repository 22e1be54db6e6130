#include "tdn/presentation.hpp"

#include <algorithm>
#include <functional>

#include "tdn/errors.hpp"

namespace tdn {

namespace detail {

namespace {

void strip_content(std::vector<std::pair<int, Int>>& row) {
  if (row.empty()) return;
  Int g(0);
  for (const auto& [c, a] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    if (g == 1) break;
  }
  const bool flip = row.front().second < 0;
  if (g == 1 && !flip) return;
  if (flip) g = -g;
  for (auto& [c, a] : row) a /= g;
}

// a*v - b*r; the leading entries are assumed to cancel.
std::vector<std::pair<int, Int>> combine(
    const Int& a, const std::vector<std::pair<int, Int>>& v, const Int& b,
    const std::vector<std::pair<int, Int>>& r) {
  std::vector<std::pair<int, Int>> out;
  out.reserve(v.size() + r.size());
  std::size_t i = 0, j = 0;
  while (i < v.size() || j < r.size()) {
    if (j == r.size() || (i < v.size() && v[i].first < r[j].first)) {
      out.emplace_back(v[i].first, a * v[i].second);
      ++i;
    } else if (i == v.size() || r[j].first < v[i].first) {
      out.emplace_back(r[j].first, -b * r[j].second);
      ++j;
    } else {
      Int val = a * v[i].second - b * r[j].second;
      if (val != 0) out.emplace_back(v[i].first, std::move(val));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

bool Echelon::insert(std::vector<std::pair<int, Int>> row) {
  strip_content(row);
  while (!row.empty()) {
    const int c = row.front().first;
    auto it = rows_.find(c);
    if (it == rows_.end()) {
      rows_.emplace(c, std::move(row));
      return true;
    }
    row = combine(it->second.front().second, row, row.front().second,
                  it->second);
    strip_content(row);
  }
  return false;
}

void Echelon::reduce(std::vector<std::pair<int, Rat>>& v) const {
  std::size_t i = 0;
  while (i < v.size()) {
    auto it = rows_.find(v[i].first);
    if (it == rows_.end()) {
      ++i;
      continue;
    }
    const auto& r = it->second;
    const Rat f = v[i].second / Rat(r.front().second);
    // v := v - f*r. Entries before position i are untouched; the entry at
    // i cancels; new fill lands only on later columns.
    std::vector<std::pair<int, Rat>> merged;
    merged.reserve(v.size() + r.size());
    merged.insert(merged.end(), v.begin(), v.begin() + i);
    std::size_t a = i, b = 0;
    while (a < v.size() || b < r.size()) {
      if (b == r.size() || (a < v.size() && v[a].first < r[b].first)) {
        merged.push_back(v[a]);
        ++a;
      } else if (a == v.size() || r[b].first < v[a].first) {
        merged.emplace_back(r[b].first, -f * Rat(r[b].second));
        ++b;
      } else {
        Rat val = v[a].second - f * Rat(r[b].second);
        if (val != 0) merged.emplace_back(v[a].first, std::move(val));
        ++a;
        ++b;
      }
    }
    v = std::move(merged);
  }
}

}  // namespace detail

int GradedBasis::index_of(const BoundaryMonomial& m) const {
  auto it =
      std::lower_bound(monomials_.begin(), monomials_.end(), m, MonomialLess{});
  if (it == monomials_.end() || !(*it == m)) return -1;
  return static_cast<int>(it - monomials_.begin());
}

std::vector<std::pair<int, Rat>> GradedBasis::reduce(
    std::vector<std::pair<int, Rat>> v) const {
  echelon_.reduce(v);
  return v;
}

RingPresentation::RingPresentation(int d, int n, Caps caps)
    : d_(d), n_(n), caps_(caps) {
  if (d < 1 || n < 2)
    throw BadParamsError("ring presentation requires d >= 1 and n >= 2");
  if (static_cast<long>(d) * n > caps_.max_dn)
    throw CapExceededError("d*n = " + std::to_string(d * n) +
                           " exceeds the configured cap of " +
                           std::to_string(caps_.max_dn));
  top_ = d * (n - 1) - 1;
  const std::uint32_t fullbits = Subset::full(n).bits();
  for (std::uint32_t b = 0; b <= fullbits; ++b) {
    Subset s(b);
    if (s.size() >= 2) variables_.push_back(s);
  }
  std::sort(variables_.begin(), variables_.end(), VariableOrder{});
}

const std::vector<BoundaryMonomial>& RingPresentation::monomial_list_locked(
    int k) const {
  auto it = monomial_cache_.find(k);
  if (it != monomial_cache_.end()) return *it->second;

  auto list = std::make_unique<std::vector<BoundaryMonomial>>();
  std::vector<std::pair<Subset, int>> cur;
  const int nvars = static_cast<int>(variables_.size());
  std::function<void(int, int)> rec = [&](int idx, int remaining) {
    if (remaining == 0) {
      if (list->size() >= caps_.max_monomials)
        throw CapExceededError(
            "nested monomial count in degree " + std::to_string(k) +
            " exceeds cap of " + std::to_string(caps_.max_monomials));
      list->push_back(BoundaryMonomial::make(cur));
      return;
    }
    if (idx == nvars) return;
    rec(idx + 1, remaining);
    const Subset s = variables_[idx];
    for (const auto& [t, e] : cur)
      if (!nested(s, t)) return;
    for (int e = 1; e <= remaining; ++e) {
      cur.emplace_back(s, e);
      rec(idx + 1, remaining - e);
      cur.pop_back();
    }
  };
  rec(0, k);
  std::sort(list->begin(), list->end(), MonomialLess{});
  auto [pos, inserted] = monomial_cache_.emplace(k, std::move(list));
  return *pos->second;
}

std::unique_ptr<GradedBasis> RingPresentation::build_graded_locked(
    int k) const {
  auto basis = std::make_unique<GradedBasis>();
  basis->degree_ = k;
  basis->monomials_ = monomial_list_locked(k);
  if (k < d_) return basis;

  // Chain expansions of (Sigma_ij)^d: only multisets of pairwise comparable
  // supersets of {i,j} survive the quadratic relation; their coefficients
  // are multinomial.
  struct Term {
    BoundaryMonomial mono;
    Int coeff;
  };
  const auto sigma_terms = [&](int i, int j) {
    std::vector<Subset> supersets;
    for (Subset s : variables_)
      if (s.contains(i) && s.contains(j)) supersets.push_back(s);
    std::vector<Term> terms;
    std::vector<std::pair<Subset, int>> cur;
    std::function<void(std::size_t, int, Int)> rec = [&](std::size_t from,
                                                         int remaining,
                                                         Int coeff) {
      if (remaining == 0) {
        terms.push_back(Term{BoundaryMonomial::make(cur), std::move(coeff)});
        return;
      }
      for (std::size_t idx = from; idx < supersets.size(); ++idx) {
        if (!cur.empty() && !cur.back().first.proper_subset_of(supersets[idx]))
          continue;
        for (int e = 1; e <= remaining; ++e) {
          cur.emplace_back(supersets[idx], e);
          rec(idx + 1, remaining - e, coeff * binomial_int(remaining, e));
          cur.pop_back();
        }
      }
    };
    rec(0, d_, Int(1));
    return terms;
  };

  const auto& lower = monomial_list_locked(k - d_);
  for (int i = 1; i <= n_; ++i) {
    for (int j = i + 1; j <= n_; ++j) {
      const std::vector<Term> terms = sigma_terms(i, j);
      for (const BoundaryMonomial& m : lower) {
        std::map<int, Int> acc;
        for (const Term& t : terms) {
          const BoundaryMonomial prod = m.times(t.mono);
          if (!prod.nested_support()) continue;
          const int col = basis->index_of(prod);
          if (col < 0)
            throw Error("internal: nested product missing from basis");
          acc[col] += t.coeff;
        }
        std::vector<std::pair<int, Int>> row;
        row.reserve(acc.size());
        for (auto& [col, c] : acc)
          if (c != 0) row.emplace_back(col, std::move(c));
        if (!row.empty()) basis->echelon_.insert(std::move(row));
      }
    }
  }
  return basis;
}

const GradedBasis& RingPresentation::graded(int k) const {
  if (k < 0) throw BadParamsError("negative degree");
  std::lock_guard<std::mutex> lock(mu_);
  auto it = graded_cache_.find(k);
  if (it == graded_cache_.end())
    it = graded_cache_.emplace(k, build_graded_locked(k)).first;
  return *it->second;
}

CycleClass RingPresentation::normal_form(const CycleClass& c) const {
  if (c.is_zero()) return CycleClass::zero();
  const int k = *c.degree();
  if (k > top_)
    throw DegreeError("normal form requires degree <= " +
                      std::to_string(top_) + ", got " + std::to_string(k));
  const GradedBasis& basis = graded(k);
  std::vector<std::pair<int, Rat>> v;
  for (const auto& [m, coeff] : c.terms()) {
    for (const auto& [s, e] : m.factors())
      if (!s.within_ground(n_))
        throw BadSubsetError("class mentions " + s.to_string() +
                             " outside the ground set");
    if (!m.nested_support()) continue;  // zero by the quadratic relation
    const int col = basis.index_of(m);
    if (col < 0) throw Error("internal: nested monomial missing from basis");
    v.emplace_back(col, coeff);
  }
  std::sort(v.begin(), v.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  v = basis.reduce(std::move(v));
  CycleClass out;
  for (const auto& [col, coeff] : v)
    out.add_term(basis.monomials()[col], coeff);
  return out;
}

void RingPresentation::ensure_top_normalizer() const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (top_checked_) {
      if (top_basis_col_ < 0)
        throw NormalizationError("degree map normalization failed");
      return;
    }
  }
  const GradedBasis& basis = graded(top_);
  CycleClass topclass = CycleClass::delta(ground(), top_);
  const CycleClass nf = normal_form(topclass);

  std::lock_guard<std::mutex> lock(mu_);
  if (top_checked_) return;
  top_checked_ = true;
  top_basis_col_ = -1;
  if (basis.rank() != 1)
    throw NormalizationError("top graded piece has rank " +
                             std::to_string(basis.rank()) + ", expected 1");
  if (nf.is_zero())
    throw NormalizationError(
        "top power of delta_N is zero modulo relations");
  const auto& [m, coeff] = *nf.terms().begin();
  top_basis_col_ = basis.index_of(m);
  top_normalizer_ = coeff;
}

Rat RingPresentation::integrate(const CycleClass& c) const {
  if (!c.is_zero() && *c.degree() != top_)
    throw DegreeError("integration requires degree exactly " +
                      std::to_string(top_) + ", got " +
                      std::to_string(*c.degree()));
  ensure_top_normalizer();
  const CycleClass nf = normal_form(c);
  Rat lambda(0);
  if (!nf.is_zero()) {
    const GradedBasis& basis = graded(top_);
    if (nf.terms().size() != 1)
      throw NormalizationError("top normal form not one-dimensional");
    const auto& [m, coeff] = *nf.terms().begin();
    if (basis.index_of(m) != top_basis_col_)
      throw NormalizationError("top normal form on unexpected monomial");
    lambda = coeff / top_normalizer_;
  }
  return (top_ % 2 == 0) ? lambda : -lambda;
}

}  // namespace tdn
