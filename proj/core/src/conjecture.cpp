#include "tdn/conjecture.hpp"

#include "tdn/errors.hpp"

namespace tdn {

ConjectureReport conjecture_check(
    const RingPresentation& p, const NestedFamily& f,
    const std::optional<std::map<std::uint32_t, int>>& exponents) {
  if (f.ground_size() != p.n())
    throw BadParamsError("family ground set does not match the presentation");
  const int d = p.d();
  const Subset N = p.ground();
  const int chi_root = f.chi(N);

  if (exponents) {
    // The cycle/dual pair recombines to the default monomial; validate the
    // split before evaluating.
    int total = 0;
    for (Subset s : f.members()) {
      auto it = exponents->find(s.bits());
      if (it == exponents->end())
        throw DegreeError("missing exponent for member " + s.to_string());
      const int cap = d * f.chi(s);
      if (it->second < 1 || it->second > cap)
        throw DegreeError("exponent " + std::to_string(it->second) + " for " +
                          s.to_string() + " outside (0, d*chi = " +
                          std::to_string(cap) + "]");
      total += it->second;
    }
    int n_root = 0;
    if (auto it = exponents->find(N.bits()); it != exponents->end())
      n_root = it->second;
    if (n_root < 0 || n_root > d * chi_root - 1)
      throw DegreeError("root exponent " + std::to_string(n_root) +
                        " outside [0, d*chi(N) - 1 = " +
                        std::to_string(d * chi_root - 1) + "]");
    total += n_root;
    if (static_cast<std::size_t>(exponents->size()) >
        f.members().size() + (exponents->count(N.bits()) ? 1u : 0u))
      throw DegreeError("exponent table mentions sets outside the family");
    if (total > p.top_degree())
      throw DegreeError("cycle degree " + std::to_string(total) +
                        " exceeds the top degree " +
                        std::to_string(p.top_degree()));
  }

  CycleClass monomial = CycleClass::unit();
  for (Subset s : f.members())
    monomial = monomial * CycleClass::delta(s, d * f.chi(s));
  if (d * chi_root - 1 > 0)
    monomial = monomial * CycleClass::delta(N, d * chi_root - 1);

  ConjectureReport report{f, monomial, Rat(0), 0, false, false, false,
                          std::nullopt};
  if (!monomial.is_zero() && *monomial.degree() != p.top_degree())
    throw DegreeError(
        "dual-pair product has degree " +
        std::to_string(monomial.is_zero() ? -1 : *monomial.degree()) +
        " but the top degree is " + std::to_string(p.top_degree()) +
        " (chi bookkeeping: chi(N) = " + std::to_string(chi_root) + ")");
  report.integral = p.integrate(monomial);
  report.sign = report.integral > 0 ? 1 : (report.integral < 0 ? -1 : 0);
  report.magnitude_ok = report.integral == 1 || report.integral == -1;

  const std::size_t members = f.members().size();
  if (members <= 1) {
    report.proven_case = true;
    const bool even = (d * (p.n() - 1)) % 2 == 0;
    // Singleton families integrate like the diagonal pairing; the empty
    // family is the normalized top power.
    Rat expected = members == 1 ? (even ? Rat(1) : Rat(-1))
                                : (even ? Rat(-1) : Rat(1));
    report.proven_value = expected;
    report.matches_proven_value = report.integral == expected;
  }
  return report;
}

}  // namespace tdn
