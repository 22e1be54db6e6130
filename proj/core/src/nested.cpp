#include "tdn/nested.hpp"

#include <algorithm>

#include "tdn/errors.hpp"

namespace tdn {

NestedFamily NestedFamily::make(int n, std::vector<Subset> sets,
                                bool root_included) {
  if (n < 1 || n > Subset::kMaxGround)
    throw BadParamsError("ground set size out of range: " + std::to_string(n));
  const Subset N = Subset::full(n);
  for (Subset s : sets) {
    if (s.size() < 2)
      throw BadCardinalityError("family member " + s.to_string() +
                                " has fewer than 2 elements");
    if (!s.within_ground(n))
      throw BadSubsetError("family member " + s.to_string() +
                           " not contained in " + N.to_string());
    if (s == N)
      throw BadSubsetError(
          "the full set is the adjoined root, not a family member");
  }
  std::sort(sets.begin(), sets.end(), FamilyOrder{});
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (!nested(sets[i], sets[j]))
        throw NotNestedError("sets " + sets[i].to_string() + " and " +
                                 sets[j].to_string() +
                                 " overlap without containment",
                             sets[i].bits(), sets[j].bits());
  return NestedFamily(n, std::move(sets), root_included);
}

NestedFamily NestedFamily::empty(int n, bool root_included) {
  return make(n, {}, root_included);
}

bool NestedFamily::is_member(Subset s) const {
  return std::find(sets_.begin(), sets_.end(), s) != sets_.end();
}

std::vector<Subset> NestedFamily::children(Subset s) const {
  if (s != ground() && !is_member(s))
    throw NotMemberError("set " + s.to_string() +
                         " is not a family member nor the root");
  std::vector<Subset> out;
  for (Subset t : sets_) {
    if (!t.proper_subset_of(s)) continue;
    bool maximal = true;
    for (Subset u : sets_) {
      if (u != t && t.proper_subset_of(u) && u.proper_subset_of(s)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(t);
  }
  return out;  // sets_ is canonically ordered, so out is as well
}

int NestedFamily::chi(Subset s) const {
  int total = s.size() - 1;
  for (Subset t : children(s)) total += 1 - t.size();
  return total;
}

std::vector<Subset> NestedFamily::vertices_with_root() const {
  std::vector<Subset> out;
  out.reserve(sets_.size() + 1);
  out.push_back(ground());
  out.insert(out.end(), sets_.begin(), sets_.end());
  return out;
}

}  // namespace tdn
