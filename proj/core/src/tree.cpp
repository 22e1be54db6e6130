#include "tdn/tree.hpp"

namespace tdn {

bool StableTree::stable() const {
  for (const TreeVertex& v : vertices_)
    if (v.marking_count() < 2) return false;
  return true;
}

StableTree family_to_tree(const NestedFamily& f) {
  const std::vector<Subset> vs = f.vertices_with_root();
  std::vector<TreeVertex> vertices(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    vertices[i].set = vs[i];
    // Minimal strict superset among the vertices; the root has none.
    int parent = -1;
    for (std::size_t j = 0; j < vs.size(); ++j) {
      if (i == j || !vs[i].proper_subset_of(vs[j])) continue;
      if (parent < 0 || vs[j].proper_subset_of(vs[parent])) {
        parent = static_cast<int>(j);
      }
    }
    vertices[i].parent = parent;
  }
  for (std::size_t i = 0; i < vs.size(); ++i) {
    Subset own = vs[i];
    for (std::size_t j = 0; j < vs.size(); ++j) {
      if (vertices[j].parent == static_cast<int>(i)) {
        vertices[i].children.push_back(static_cast<int>(j));
        own = own.minus(vs[j]);
      }
    }
    vertices[i].own_points = own;
  }
  return StableTree(f.ground_size(), std::move(vertices));
}

NestedFamily tree_to_family(const StableTree& t) {
  std::vector<Subset> sets;
  const auto& vs = t.vertices();
  for (std::size_t i = 1; i < vs.size(); ++i) sets.push_back(vs[i].set);
  return NestedFamily::make(t.ground_size(), std::move(sets),
                            /*root_included=*/true);
}

}  // namespace tdn
