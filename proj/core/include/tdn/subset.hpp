#ifndef TDN_SUBSET_HPP
#define TDN_SUBSET_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace tdn {

/// A subset of the ground set {1,...,n}, encoded as a bitmask (bit i-1 set
/// iff i is a member).  Ground sets of up to 30 points are supported, far
/// beyond every configured cap.
class Subset {
 public:
  static constexpr int kMaxGround = 30;

  Subset() = default;
  explicit Subset(std::uint32_t bits) : bits_(bits) {}

  /// {1,...,n}
  static Subset full(int n);
  static Subset of(std::initializer_list<int> elements);
  /// Validates element range against the ground set [1..n]; throws
  /// BadSubsetError on out-of-range elements.
  static Subset from_elements(const std::vector<int>& elements, int n);

  std::uint32_t bits() const { return bits_; }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool contains(int e) const { return (bits_ >> (e - 1)) & 1u; }
  bool subset_of(Subset o) const { return (bits_ & ~o.bits_) == 0; }
  bool proper_subset_of(Subset o) const {
    return subset_of(o) && bits_ != o.bits_;
  }
  bool intersects(Subset o) const { return (bits_ & o.bits_) != 0; }
  bool within_ground(int n) const { return subset_of(full(n)); }

  Subset united(Subset o) const { return Subset(bits_ | o.bits_); }
  Subset intersected(Subset o) const { return Subset(bits_ & o.bits_); }
  Subset minus(Subset o) const { return Subset(bits_ & ~o.bits_); }

  std::vector<int> elements() const;
  /// "{1,2,3}"
  std::string to_string() const;

  friend bool operator==(Subset a, Subset b) { return a.bits_ == b.bits_; }
  friend bool operator!=(Subset a, Subset b) { return a.bits_ != b.bits_; }

 private:
  std::uint32_t bits_ = 0;
};

/// True iff a and b are disjoint or one contains the other.
bool nested(Subset a, Subset b);

/// Lexicographic comparison of the ascending element lists.
bool lex_less(Subset a, Subset b);

/// Member order inside a nested family: cardinality descending, then
/// lexicographic ascending — parents precede children.
bool family_order_less(Subset a, Subset b);

/// Variable order of the ring presentation: cardinality ascending, then
/// lexicographic ascending.
bool variable_order_less(Subset a, Subset b);

struct FamilyOrder {
  bool operator()(Subset a, Subset b) const { return family_order_less(a, b); }
};

struct VariableOrder {
  bool operator()(Subset a, Subset b) const {
    return variable_order_less(a, b);
  }
};

}  // namespace tdn

#endif
