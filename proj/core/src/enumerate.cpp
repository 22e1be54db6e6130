#include "tdn/enumerate.hpp"

#include <algorithm>

#include "tdn/errors.hpp"

namespace tdn {

namespace {

std::vector<Subset> candidate_sets(int n) {
  if (n < 2)
    throw BadParamsError("enumeration requires n >= 2, got " +
                         std::to_string(n));
  const std::uint32_t fullbits = Subset::full(n).bits();
  std::vector<Subset> out;
  for (std::uint32_t b = 0; b <= fullbits; ++b) {
    Subset s(b);
    if (s.size() >= 2 && b != fullbits) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), FamilyOrder{});
  return out;
}

}  // namespace

NestedFamilyEnumerator::NestedFamilyEnumerator(int n, EnumerateOptions opts)
    : n_(n), opts_(opts), candidates_(candidate_sets(n)) {}

NestedFamily NestedFamilyEnumerator::current() const {
  std::vector<Subset> sets;
  sets.reserve(stack_.size());
  for (int idx : stack_) sets.push_back(candidates_[idx]);
  // Stack indices are increasing over canonically sorted candidates, so
  // the member list is already canonical; skip re-validation.
  return NestedFamily(n_, std::move(sets), opts_.include_root);
}

void NestedFamilyEnumerator::advance() {
  const int m = static_cast<int>(candidates_.size());
  const bool depth_ok =
      !opts_.max_size || static_cast<int>(stack_.size()) < *opts_.max_size;
  auto compatible = [&](int j) {
    for (int i : stack_)
      if (!nested(candidates_[i], candidates_[j])) return false;
    return true;
  };
  // First child.
  if (depth_ok) {
    int from = stack_.empty() ? 0 : stack_.back() + 1;
    for (int j = from; j < m; ++j) {
      if (compatible(j)) {
        stack_.push_back(j);
        return;
      }
    }
  }
  // Next sibling of an ancestor.
  while (!stack_.empty()) {
    int last = stack_.back();
    stack_.pop_back();
    for (int j = last + 1; j < m; ++j) {
      if (compatible(j)) {
        stack_.push_back(j);
        return;
      }
    }
  }
  done_ = true;
}

std::optional<NestedFamily> NestedFamilyEnumerator::next() {
  if (done_) return std::nullopt;
  if (!emitted_empty_) {
    emitted_empty_ = true;
  } else {
    advance();
    if (done_) return std::nullopt;
  }
  if (++count_ > opts_.cap)
    throw CapExceededError("nested family enumeration exceeded cap of " +
                           std::to_string(opts_.cap) + " families");
  return current();
}

void enumerate_nested_families(
    int n, const EnumerateOptions& opts,
    const std::function<bool(const NestedFamily&)>& sink) {
  NestedFamilyEnumerator en(n, opts);
  while (auto f = en.next())
    if (!sink(*f)) return;
}

std::vector<NestedFamily> all_nested_families(int n,
                                              const EnumerateOptions& opts) {
  std::vector<NestedFamily> out;
  enumerate_nested_families(n, opts, [&](const NestedFamily& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

std::vector<std::uint64_t> strata_by_codimension(int n, std::uint64_t cap) {
  EnumerateOptions opts;
  opts.cap = cap;
  std::vector<std::uint64_t> by_codim;
  enumerate_nested_families(n, opts, [&](const NestedFamily& f) {
    const std::size_t k = f.members().size();
    if (by_codim.size() <= k) by_codim.resize(k + 1, 0);
    ++by_codim[k];
    return true;
  });
  return by_codim;
}

std::uint64_t count_strata(int n, std::uint64_t cap) {
  std::uint64_t total = 0;
  for (std::uint64_t c : strata_by_codimension(n, cap)) total += c;
  return total;
}

}  // namespace tdn
