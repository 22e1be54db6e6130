#include "tdn/json_io.hpp"

#include "tdn/errors.hpp"

namespace tdn {

ordered_json subset_to_json(Subset s) {
  ordered_json arr = ordered_json::array();
  for (int e : s.elements()) arr.push_back(e);
  return arr;
}

namespace {

int element_from_json(const ordered_json& v) {
  if (v.is_number_integer()) return v.get<int>();
  if (v.is_string()) {
    try {
      return std::stoi(v.get<std::string>());
    } catch (...) {
    }
  }
  throw BadParamsError("subset element must be an integer: " + v.dump());
}

}  // namespace

Subset subset_from_json(const ordered_json& j, int n) {
  if (!j.is_array()) throw BadParamsError("subset must be a JSON array");
  std::vector<int> elements;
  for (const auto& v : j) elements.push_back(element_from_json(v));
  return Subset::from_elements(elements, n);
}

ordered_json family_to_json(const NestedFamily& f) {
  ordered_json arr = ordered_json::array();
  for (Subset s : f.members()) arr.push_back(subset_to_json(s));
  return arr;
}

NestedFamily family_from_json(const ordered_json& j, int n,
                              bool root_included) {
  if (!j.is_array())
    throw BadParamsError("family must be a JSON array of subsets");
  std::vector<Subset> sets;
  for (const auto& v : j) sets.push_back(subset_from_json(v, n));
  return NestedFamily::make(n, std::move(sets), root_included);
}

ordered_json tree_to_json(const StableTree& t) {
  ordered_json out;
  out["n"] = t.ground_size();
  out["stable"] = t.stable();
  ordered_json vertices = ordered_json::array();
  for (const TreeVertex& v : t.vertices()) {
    ordered_json jv;
    jv["set"] = subset_to_json(v.set);
    if (v.parent < 0)
      jv["parent"] = nullptr;
    else
      jv["parent"] = v.parent;
    jv["own_points"] = subset_to_json(v.own_points);
    jv["markings"] = v.marking_count();
    vertices.push_back(std::move(jv));
  }
  out["vertices"] = std::move(vertices);
  return out;
}

ordered_json qpoly_to_json(const QPoly& p, const std::string& var) {
  ordered_json out;
  ordered_json coeffs = ordered_json::array();
  for (int i = 0; i <= p.degree(); ++i)
    coeffs.push_back(rat_to_string(p.coeff(i)));
  out["coeffs"] = std::move(coeffs);
  out["display"] = p.to_string(var);
  return out;
}

ordered_json series_to_json(const TruncSeries& s) {
  ordered_json out;
  out["order"] = s.order();
  ordered_json coeffs = ordered_json::array();
  for (int k = 0; k <= s.order(); ++k) coeffs.push_back(qpoly_to_json(s.coeff(k)));
  out["coeffs"] = std::move(coeffs);
  return out;
}

ordered_json lefschetz_to_json(const LefschetzPoly& p) {
  ordered_json arr = ordered_json::array();
  for (int i = 0; i <= p.degree(); ++i) arr.push_back(p.coeff(i).get_str());
  if (p.is_zero()) arr.push_back("0");
  return arr;
}

ordered_json cycle_to_json(const CycleClass& c) {
  ordered_json out;
  ordered_json monomials = ordered_json::array();
  for (const auto& [m, coeff] : c.terms()) {
    ordered_json jm;
    ordered_json vars = ordered_json::array();
    ordered_json exps = ordered_json::array();
    for (const auto& [s, e] : m.factors()) {
      vars.push_back(subset_to_json(s));
      exps.push_back(e);
    }
    jm["vars"] = std::move(vars);
    jm["exps"] = std::move(exps);
    jm["coef"] = rat_to_string(coeff);
    monomials.push_back(std::move(jm));
  }
  out["monomials"] = std::move(monomials);
  return out;
}

BoundaryMonomial monomial_from_json(const ordered_json& j, int n) {
  if (!j.is_array())
    throw BadParamsError("monomial must be a JSON array of [subset, exponent]");
  std::vector<std::pair<Subset, int>> factors;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2)
      throw BadParamsError("monomial factor must be [subset, exponent]: " +
                           pair.dump());
    const Subset s = subset_from_json(pair[0], n);
    if (!pair[1].is_number_integer())
      throw BadParamsError("monomial exponent must be an integer");
    factors.emplace_back(s, pair[1].get<int>());
  }
  return BoundaryMonomial::make(std::move(factors));
}

}  // namespace tdn
