#ifndef TDN_TREE_HPP
#define TDN_TREE_HPP

#include <vector>

#include "tdn/nested.hpp"

namespace tdn {

/// One component of a stable rooted tree: the vertex set S, the parent
/// link (minimal strict superset; -1 at the root), the points of S lying
/// in no child, and the child vertices.  Markings at a vertex are its own
/// points plus one per child; the count equals chi(S) + 1.
struct TreeVertex {
  Subset set;
  int parent = -1;
  Subset own_points;
  std::vector<int> children;

  int marking_count() const {
    return own_points.size() + static_cast<int>(children.size());
  }
};

/// Combinatorial type of a stable n-pointed rooted tree: the vertices are
/// the members of a nested family with the ground set adjoined as root.
/// Positions of points inside a component are moduli and deliberately not
/// represented.
class StableTree {
 public:
  StableTree(int n, std::vector<TreeVertex> vertices)
      : n_(n), vertices_(std::move(vertices)) {}

  int ground_size() const { return n_; }
  const std::vector<TreeVertex>& vertices() const { return vertices_; }
  const TreeVertex& root() const { return vertices_.front(); }

  /// Every component carries at least two markings.  Holds automatically
  /// for every family over n >= 2.
  bool stable() const;

 private:
  int n_;
  std::vector<TreeVertex> vertices_;  // root first, then family order
};

/// Vertex set = family members with N adjoined as root; parent = minimal
/// strict superset.  Stability is automatic for n >= 2.
StableTree family_to_tree(const NestedFamily& f);

/// Inverse of family_to_tree: collects the non-root vertex sets.
NestedFamily tree_to_family(const StableTree& t);

}  // namespace tdn

#endif
