#ifndef TDN_ENUMERATE_HPP
#define TDN_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "tdn/caps.hpp"
#include "tdn/nested.hpp"

namespace tdn {

struct EnumerateOptions {
  /// Emitted families carry the root-adjoined flag.
  bool include_root = false;
  /// Upper bound on the number of members per family.
  std::optional<int> max_size;
  /// Abort with CapExceededError beyond this many families.
  std::uint64_t cap = Caps{}.max_families;
};

/// Visits every nested family of proper subsets of {1,...,n} exactly once,
/// in canonical order (depth-first extension over candidates sorted by the
/// family member order).  The sink returns false to stop early.  Throws
/// CapExceededError when the cap is passed; requires n >= 2.
void enumerate_nested_families(
    int n, const EnumerateOptions& opts,
    const std::function<bool(const NestedFamily&)>& sink);

/// Materialized enumeration, same order.
std::vector<NestedFamily> all_nested_families(int n,
                                              const EnumerateOptions& opts = {});

/// Single-consumer stream over the same enumeration.  Independent streams
/// may run in parallel.
class NestedFamilyEnumerator {
 public:
  NestedFamilyEnumerator(int n, EnumerateOptions opts = {});
  /// Next family in canonical order, or nullopt when exhausted.
  std::optional<NestedFamily> next();

 private:
  int n_;
  EnumerateOptions opts_;
  std::vector<Subset> candidates_;
  // DFS state: stack of candidate indices forming the current family.
  std::vector<int> stack_;
  bool emitted_empty_ = false;
  bool done_ = false;
  std::uint64_t count_ = 0;

  NestedFamily current() const;
  void advance();
};

/// Number of nested families of proper subsets (= closed boundary strata,
/// counting the whole space for the empty family).  Throws
/// CapExceededError beyond the cap; requires n >= 2.
std::uint64_t count_strata(int n, std::uint64_t cap = Caps{}.max_families);

/// Stratum counts split by codimension (= family member count).
std::vector<std::uint64_t> strata_by_codimension(
    int n, std::uint64_t cap = Caps{}.max_families);

}  // namespace tdn

#endif
