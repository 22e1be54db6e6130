#ifndef TDN_NESTED_HPP
#define TDN_NESTED_HPP

#include <vector>

#include "tdn/subset.hpp"

namespace tdn {

/// A nested family over the ground set {1,...,n}: proper subsets of
/// cardinality >= 2, pairwise disjoint or comparable, kept in canonical
/// order (cardinality descending, then lexicographic) so parents precede
/// children.  The full set N is never stored as a member; operations that
/// need it treat it as an adjoined root.  Immutable after construction.
class NestedFamily {
 public:
  /// Validates, deduplicates and sorts.  Throws BadCardinalityError if
  /// some |S| < 2, BadSubsetError if some S is not a proper subset of N,
  /// NotNestedError (naming the offending pair) if two members overlap
  /// without containment.
  static NestedFamily make(int n, std::vector<Subset> sets,
                           bool root_included = false);

  /// The empty family over {1,...,n}.
  static NestedFamily empty(int n, bool root_included = false);

  int ground_size() const { return n_; }
  Subset ground() const { return Subset::full(n_); }
  bool root_included() const { return root_included_; }
  const std::vector<Subset>& members() const { return sets_; }
  int size() const { return static_cast<int>(sets_.size()); }
  bool is_member(Subset s) const;

  /// Maximal members strictly contained in s; s must be a member or the
  /// root N (NotMemberError otherwise).  Result in canonical member order.
  std::vector<Subset> children(Subset s) const;

  /// chi(s) = |s| - sum over children |T| + #children - 1, computed with
  /// the root adjoined.  NotMemberError if s is neither a member nor N.
  int chi(Subset s) const;

  /// Members plus the root, root first then canonical member order.
  std::vector<Subset> vertices_with_root() const;

  friend bool operator==(const NestedFamily& a, const NestedFamily& b) {
    return a.n_ == b.n_ && a.sets_ == b.sets_ &&
           a.root_included_ == b.root_included_;
  }

 private:
  NestedFamily(int n, std::vector<Subset> sets, bool root_included)
      : n_(n), sets_(std::move(sets)), root_included_(root_included) {}

  int n_ = 0;
  std::vector<Subset> sets_;
  bool root_included_ = false;

  friend class NestedFamilyEnumerator;
};

/// Spec-level constructor name; forwards to NestedFamily::make.
inline NestedFamily canonical_family(int n, std::vector<Subset> sets,
                                     bool root_included = false) {
  return NestedFamily::make(n, std::move(sets), root_included);
}

}  // namespace tdn

#endif
