#ifndef TDN_JSON_IO_HPP
#define TDN_JSON_IO_HPP

#include <json.hpp>

#include "tdn/cycle.hpp"
#include "tdn/lefschetz.hpp"
#include "tdn/nested.hpp"
#include "tdn/qpoly.hpp"
#include "tdn/series.hpp"
#include "tdn/tree.hpp"

namespace tdn {

using ordered_json = nlohmann::ordered_json;

/// Sorted integer array, e.g. [1,2,3].
ordered_json subset_to_json(Subset s);
Subset subset_from_json(const ordered_json& j, int n);

/// Sorted array of sorted integer arrays, e.g. [[1,2,3],[1,2]].
ordered_json family_to_json(const NestedFamily& f);
NestedFamily family_from_json(const ordered_json& j, int n,
                              bool root_included = false);

ordered_json tree_to_json(const StableTree& t);

/// {"coeffs": ["1","0","5",...], "display": "1+5q^2+q^4"}
ordered_json qpoly_to_json(const QPoly& p, const std::string& var = "q");

ordered_json series_to_json(const TruncSeries& s);

/// Integer coefficient array keyed by codimension.
ordered_json lefschetz_to_json(const LefschetzPoly& p);

/// {"monomials":[{"vars":[[1,2],...],"exps":[...],"coef":"p/q"},...]}
ordered_json cycle_to_json(const CycleClass& c);

/// Parses a monomial given as JSON pairs [subset, exponent]; subset
/// elements may be integers or integer strings.
BoundaryMonomial monomial_from_json(const ordered_json& j, int n);

}  // namespace tdn

#endif
