// Batch front end: runs the exact engines and emits JSON/CSV/text reports
// with machine-readable verdicts.
//
// Exit codes: 0 success, 1 usage/validation error, 2 cap exceeded,
// 3 verification failure (some verdict is false).

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "tdn/conjecture.hpp"
#include "tdn/enumerate.hpp"
#include "tdn/errors.hpp"
#include "tdn/genfunc.hpp"
#include "tdn/json_io.hpp"
#include "tdn/motive.hpp"
#include "tdn/pairing.hpp"
#include "tdn/presentation.hpp"
#include "tdn/tree.hpp"
#include "tdn/version.hpp"

namespace {

using tdn::ordered_json;

struct CommonOpts {
  std::string format = "json";
  std::string output;
  bool deterministic = false;
  std::uint64_t max_families = 0;   // 0 = keep default
  std::uint64_t max_monomials = 0;
  int max_dn = 0;
};

struct Report {
  std::string command;
  ordered_json parameters = ordered_json::object();
  ordered_json results = ordered_json::object();
  ordered_json verdicts = ordered_json::object();
  std::string csv;   // only flat tables provide one
  std::string text;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--output", opts.output, "Write the report to a file");
  cmd->add_flag("--deterministic", opts.deterministic,
                "Omit timing so repeated runs are byte-identical");
  cmd->add_option("--max-families", opts.max_families,
                  "Override the family enumeration cap");
  cmd->add_option("--max-monomials", opts.max_monomials,
                  "Override the per-degree monomial cap");
  cmd->add_option("--max-dn", opts.max_dn,
                  "Override the d*n presentation cap");
}

tdn::Caps caps_for(const CommonOpts& opts) {
  tdn::Caps caps = tdn::Caps::from_env();
  if (opts.max_families) caps.max_families = opts.max_families;
  if (opts.max_monomials) caps.max_monomials = opts.max_monomials;
  if (opts.max_dn) caps.max_dn = opts.max_dn;
  return caps;
}

bool all_verdicts_pass(const ordered_json& verdicts) {
  for (const auto& [key, value] : verdicts.items())
    if (value.is_boolean() && !value.get<bool>()) return false;
  return true;
}

int emit(const Report& report, const CommonOpts& opts, double elapsed_ms) {
  std::string payload;
  if (opts.format == "json") {
    ordered_json j;
    j["command"] = report.command;
    j["parameters"] = report.parameters;
    j["results"] = report.results;
    j["verdicts"] = report.verdicts;
    if (!opts.deterministic) j["timing_ms"] = elapsed_ms;
    j["engine_version"] = tdn::version();
    payload = j.dump(2) + "\n";
  } else if (opts.format == "csv") {
    if (report.csv.empty())
      throw tdn::BadParamsError("CSV output is only provided for flat tables "
                                "(betti, pairing)");
    payload = report.csv;
  } else {
    payload = report.text;
  }
  if (opts.output.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(opts.output, std::ios::binary);
    if (!out) throw tdn::BadParamsError("cannot open " + opts.output);
    out << payload;
  }
  return all_verdicts_pass(report.verdicts) ? 0 : 3;
}

ordered_json int_array(const std::vector<tdn::Int>& values) {
  ordered_json arr = ordered_json::array();
  for (const tdn::Int& v : values) {
    if (v.fits_slong_p())
      arr.push_back(v.get_si());
    else
      arr.push_back(v.get_str());
  }
  return arr;
}

// ---------------------------------------------------------------------------
// Subcommand handlers
// ---------------------------------------------------------------------------

Report run_betti(int d, int n) {
  Report r;
  r.command = "betti";
  r.parameters = {{"d", d}, {"n", n}};
  const tdn::QPoly P = tdn::poincare(d, n);
  const std::vector<tdn::Int> betti = tdn::betti_numbers(d, n);
  const tdn::Int euler = tdn::euler_char(d, n);
  r.results["d"] = d;
  r.results["n"] = n;
  r.results["dimension"] = d * (n - 1) - 1;
  r.results["betti"] = int_array(betti);
  r.results["euler"] = euler.fits_slong_p() ? ordered_json(euler.get_si())
                                            : ordered_json(euler.get_str());
  r.results["poincare"] = tdn::qpoly_to_json(P);
  r.verdicts["palindromic"] = P.palindromic();
  r.verdicts["nonnegative"] = P.nonnegative_coeffs();

  std::ostringstream csv;
  csv << "k,betti_2k\n";
  for (std::size_t k = 0; k < betti.size(); ++k)
    csv << k << "," << betti[k].get_str() << "\n";
  r.csv = csv.str();

  std::ostringstream text;
  text << "T_{" << d << "," << n << "}: dimension " << d * (n - 1) - 1
       << "\n  poincare = " << P.to_string() << "\n  euler    = "
       << euler.get_str() << "\n";
  r.text = text.str();
  return r;
}

Report run_series(int d, int order) {
  Report r;
  r.command = "series";
  r.parameters = {{"d", d}, {"order", order}};
  const tdn::TruncSeries psi = tdn::psi_series(d, order);
  r.results["d"] = d;
  r.results["order"] = order;
  ordered_json coeffs = ordered_json::array();
  std::ostringstream text;
  text << "psi(q,t) coefficients, d = " << d << "\n";
  for (int k = 1; k <= order; ++k) {
    ordered_json c;
    c["n"] = k;
    c["p_n"] = tdn::qpoly_to_json(psi.coeff(k));
    coeffs.push_back(std::move(c));
    text << "  t^" << k << ": " << psi.coeff(k).to_string() << "\n";
  }
  r.results["coefficients"] = std::move(coeffs);
  r.text = text.str();
  return r;
}

ordered_json residual_verdict(const tdn::TruncSeries& residual) {
  ordered_json v;
  v["pass"] = residual.is_zero();
  if (!residual.is_zero()) {
    const int k = residual.valuation();
    v["first_offending_order"] = k;
    v["computed"] = residual.coeff(k).to_string();
    v["expected"] = "0";
  }
  return v;
}

Report run_verify_gf(int d, int order) {
  Report r;
  r.command = "verify-gf";
  r.parameters = {{"d", d}, {"order", order}};
  r.results["d"] = d;
  r.results["order"] = order;

  ordered_json checks;
  const auto differential = tdn::verify_differential(d, order);
  checks["differential_equation"] = residual_verdict(differential);
  const auto functional = tdn::verify_functional(d, order);
  checks["functional_equation"] = residual_verdict(functional);
  const auto euler = tdn::verify_euler(d, order);
  checks["euler_logarithmic"] = residual_verdict(euler.logarithmic);
  checks["euler_differential"] = residual_verdict(euler.differential);

  ordered_json recursion;
  recursion["pass"] = true;
  for (int n = 2; n <= std::max(2, order); ++n) {
    const tdn::QPoly a = tdn::poincare(d, n);
    const tdn::QPoly b = tdn::poincare_via_eq1(d, n);
    if (!(a == b)) {
      recursion["pass"] = false;
      recursion["first_offending_n"] = n;
      recursion["computed"] = b.to_string();
      recursion["expected"] = a.to_string();
      break;
    }
  }
  checks["recursion_agreement"] = recursion;

  ordered_json uniqueness;
  uniqueness["pass"] = true;
  const tdn::TruncSeries direct = tdn::psi_series(d, order);
  const tdn::TruncSeries solved = tdn::psi_series_from_differential(d, order);
  for (int k = 0; k <= order; ++k) {
    if (!(direct.coeff(k) == solved.coeff(k))) {
      uniqueness["pass"] = false;
      uniqueness["first_offending_order"] = k;
      uniqueness["computed"] = solved.coeff(k).to_string();
      uniqueness["expected"] = direct.coeff(k).to_string();
      break;
    }
  }
  checks["solver_uniqueness"] = uniqueness;

  r.results["checks"] = checks;
  std::ostringstream text;
  text << "generating-function checks, d = " << d << ", order = " << order
       << "\n";
  for (const auto& [name, v] : checks.items()) {
    r.verdicts[name] = v["pass"];
    text << "  " << (v["pass"].get<bool>() ? "pass" : "FAIL") << "  " << name
         << "\n";
  }
  r.text = text.str();
  return r;
}

Report run_ring_rank(int d, int n, std::optional<int> degree,
                     const tdn::Caps& caps) {
  Report r;
  r.command = "ring-rank";
  r.parameters = {{"d", d}, {"n", n}};
  const tdn::RingPresentation p(d, n, caps);
  r.results["d"] = d;
  r.results["n"] = n;
  r.results["dimension"] = p.top_degree();
  std::ostringstream text;
  if (degree) {
    r.parameters["degree"] = *degree;
    const int rank = p.rank(*degree);
    r.results["degree"] = *degree;
    r.results["rank"] = rank;
    text << "rank A^" << *degree << "(T_{" << d << "," << n << "}) = " << rank
         << "\n";
  } else {
    std::vector<int> ranks;
    for (int k = 0; k <= p.top_degree(); ++k) ranks.push_back(p.rank(k));
    r.results["ranks"] = ranks;
    const tdn::QPoly P = tdn::poincare(d, n);
    bool dual = true, betti = true;
    for (int k = 0; k <= p.top_degree(); ++k) {
      dual = dual && ranks[k] == ranks[p.top_degree() - k];
      betti = betti && tdn::Rat(ranks[k]) == P.coeff(2 * k);
    }
    r.verdicts["poincare_duality"] = dual;
    r.verdicts["matches_betti_recursion"] = betti;
    text << "graded ranks of A*(T_{" << d << "," << n << "}): ";
    for (int v : ranks) text << v << " ";
    text << "\n";
  }
  r.text = text.str();
  return r;
}

Report run_integrate(int d, int n, const std::string& monomial_json,
                     const tdn::Caps& caps) {
  Report r;
  r.command = "integrate";
  r.parameters = {{"d", d}, {"n", n}};
  ordered_json parsed;
  try {
    parsed = ordered_json::parse(monomial_json);
  } catch (const std::exception& e) {
    throw tdn::BadParamsError(std::string("bad monomial JSON: ") + e.what());
  }
  r.parameters["monomial"] = parsed;
  const tdn::RingPresentation p(d, n, caps);
  const tdn::BoundaryMonomial m = tdn::monomial_from_json(parsed, n);
  const tdn::CycleClass c = tdn::CycleClass::monomial(m);
  const tdn::Rat value = p.integrate(c);
  r.results["d"] = d;
  r.results["n"] = n;
  r.results["degree"] = m.degree();
  r.results["monomial"] = tdn::cycle_to_json(c);
  r.results["integral"] = tdn::rat_to_string(value);
  r.text = "integral(" + m.to_string() + ") = " + tdn::rat_to_string(value) +
           "\n";
  return r;
}

Report run_pairing(int d, int n, const tdn::Caps& caps) {
  Report r;
  r.command = "pairing";
  r.parameters = {{"d", d}, {"n", n}};
  const tdn::RingPresentation p(d, n, caps);
  const tdn::PairingTable table = tdn::pairing_table(p);
  r.results["d"] = d;
  r.results["n"] = n;
  ordered_json rows = ordered_json::array();
  for (tdn::Subset s : table.rows) rows.push_back(tdn::subset_to_json(s));
  ordered_json cols = ordered_json::array();
  for (tdn::Subset t : table.cols) cols.push_back(tdn::subset_to_json(t));
  r.results["s_range"] = std::move(rows);
  r.results["t_range"] = std::move(cols);
  ordered_json matrix = ordered_json::array();
  for (const auto& row : table.values) matrix.push_back(int_array(row));
  r.results["matrix"] = std::move(matrix);
  r.results["determinant"] = table.basis_determinant.get_str();
  if (!table.matches_closed_form)
    r.results["first_mismatch"] = table.first_mismatch;
  r.verdicts["matches_closed_form"] = table.matches_closed_form;
  r.verdicts["determinant_unit"] = table.determinant_unit;

  std::ostringstream csv;
  csv << "s,t,value\n";
  for (std::size_t i = 0; i < table.rows.size(); ++i)
    for (std::size_t j = 0; j < table.cols.size(); ++j) {
      auto dotted = [](tdn::Subset s) {
        std::string out;
        for (int e : s.elements()) {
          if (!out.empty()) out += ".";
          out += std::to_string(e);
        }
        return out;
      };
      csv << dotted(table.rows[i]) << "," << dotted(table.cols[j]) << ","
          << table.values[i][j].get_str() << "\n";
    }
  r.csv = csv.str();

  std::ostringstream text;
  text << "pairing table for T_{" << d << "," << n << "}: "
       << (table.matches_closed_form ? "matches closed form" : "MISMATCH")
       << ", det = " << table.basis_determinant.get_str() << "\n";
  r.text = text.str();
  return r;
}

Report run_strata(int n, const tdn::Caps& caps) {
  Report r;
  r.command = "strata";
  r.parameters = {{"n", n}};
  const auto by_codim = tdn::strata_by_codimension(n, caps.max_families);
  std::uint64_t total = 0;
  for (std::uint64_t c : by_codim) total += c;
  r.results["n"] = n;
  r.results["count"] = total;
  r.results["by_codimension"] = by_codim;
  std::ostringstream text;
  text << "closed boundary strata for n = " << n << ": " << total << "\n";
  r.text = text.str();
  return r;
}

Report run_trees(int n, const tdn::Caps& caps) {
  Report r;
  r.command = "trees";
  r.parameters = {{"n", n}};
  tdn::EnumerateOptions opts;
  opts.include_root = true;
  opts.cap = caps.max_families;
  ordered_json trees = ordered_json::array();
  bool all_stable = true;
  tdn::enumerate_nested_families(n, opts, [&](const tdn::NestedFamily& f) {
    const tdn::StableTree t = tdn::family_to_tree(f);
    all_stable = all_stable && t.stable();
    trees.push_back(tdn::tree_to_json(t));
    return true;
  });
  r.results["n"] = n;
  r.results["count"] = trees.size();
  r.results["trees"] = std::move(trees);
  r.verdicts["all_stable"] = all_stable;
  std::ostringstream text;
  text << "stable " << n << "-pointed tree types: "
       << r.results["count"].get<std::size_t>() << "\n";
  r.text = text.str();
  return r;
}

Report run_fm_betti(const std::string& space, std::optional<int> m, int n) {
  Report r;
  r.command = "fm-betti";
  tdn::CellularSpace X = tdn::CellularSpace::point();
  if (space == "Pm" || space == "pm") {
    if (!m) throw tdn::BadParamsError("--space Pm requires --m");
    X = tdn::CellularSpace::projective(*m);
  } else {
    X = tdn::CellularSpace::parse(space);
  }
  r.parameters = {{"space", X.name}, {"n", n}};
  if (m) r.parameters["m"] = *m;
  const tdn::LefschetzPoly ranks = tdn::fm_ranks(X, n);
  r.results["space"] = X.name;
  r.results["space_dimension"] = X.dimension;
  r.results["n"] = n;
  r.results["dimension"] = X.dimension * n;
  r.results["betti"] = tdn::lefschetz_to_json(ranks);
  const tdn::Int euler = ranks.at_one();
  r.results["euler"] = euler.fits_slong_p() ? ordered_json(euler.get_si())
                                            : ordered_json(euler.get_str());
  r.verdicts["palindromic"] = ranks.palindromic();
  r.verdicts["nonnegative"] = ranks.nonnegative();
  std::ostringstream text;
  text << X.name << "[" << n << "]: ranks " << ranks.to_string()
       << ", euler " << euler.get_str() << "\n";
  r.text = text.str();
  return r;
}

ordered_json conjecture_report_json(const tdn::ConjectureReport& rep) {
  ordered_json j;
  j["family"] = tdn::family_to_json(rep.family);
  j["monomial"] = tdn::cycle_to_json(rep.monomial);
  j["integral"] = tdn::rat_to_string(rep.integral);
  j["sign"] = rep.sign;
  j["magnitude_ok"] = rep.magnitude_ok;
  j["proven_case"] = rep.proven_case;
  if (rep.proven_case) {
    j["expected"] = tdn::rat_to_string(*rep.proven_value);
    j["matches_proven_value"] = rep.matches_proven_value;
  }
  return j;
}

Report run_conjecture(int d, int n, const std::string& family_json,
                      const tdn::Caps& caps) {
  Report r;
  r.command = "conjecture";
  r.parameters = {{"d", d}, {"n", n}};
  const tdn::RingPresentation p(d, n, caps);
  ordered_json reports = ordered_json::array();
  ordered_json findings = ordered_json::array();
  bool proven_ok = true;
  std::uint64_t checked = 0;

  auto handle = [&](const tdn::NestedFamily& f) {
    const tdn::ConjectureReport rep = tdn::conjecture_check(p, f);
    ++checked;
    if (!rep.magnitude_ok) findings.push_back(conjecture_report_json(rep));
    if (rep.proven_case && !rep.matches_proven_value) proven_ok = false;
    reports.push_back(conjecture_report_json(rep));
  };

  if (!family_json.empty()) {
    ordered_json parsed;
    try {
      parsed = ordered_json::parse(family_json);
    } catch (const std::exception& e) {
      throw tdn::BadParamsError(std::string("bad family JSON: ") + e.what());
    }
    r.parameters["family"] = parsed;
    handle(tdn::family_from_json(parsed, n, /*root_included=*/true));
  } else {
    tdn::EnumerateOptions opts;
    opts.cap = caps.max_families;
    tdn::enumerate_nested_families(n, opts, [&](const tdn::NestedFamily& f) {
      handle(f);
      return true;
    });
  }

  r.results["d"] = d;
  r.results["n"] = n;
  r.results["families_checked"] = checked;
  r.results["all_magnitude_one"] = findings.empty();
  r.results["findings"] = findings;
  r.results["reports"] = std::move(reports);
  r.verdicts["proven_subcases"] = proven_ok;
  std::ostringstream text;
  text << "conjectural pairing at (d,n) = (" << d << "," << n << "): "
       << checked << " families, "
       << (findings.empty() ? "all unit magnitude" : "NON-UNIT FINDINGS")
       << ", proven subcases " << (proven_ok ? "pass" : "FAIL") << "\n";
  r.text = text.str();
  return r;
}

Report run_nef(int d, int n, const tdn::Caps& caps) {
  Report r;
  r.command = "nef";
  r.parameters = {{"d", d}, {"n", n}};
  const tdn::RingPresentation p(d, n, caps);
  const tdn::NefReport report = tdn::nef_report(p);
  r.results["d"] = d;
  r.results["n"] = n;
  ordered_json entries = ordered_json::array();
  for (const tdn::NefEntry& e : report.entries) {
    ordered_json je;
    je["s"] = tdn::subset_to_json(e.s);
    je["t"] = tdn::subset_to_json(e.t);
    je["value"] = e.value.get_str();
    entries.push_back(std::move(je));
  }
  r.results["entries"] = std::move(entries);
  r.results["negative_count"] = report.negative_indices.size();
  r.verdicts["all_nonnegative"] = report.all_nonnegative;
  std::ostringstream text;
  text << "nef pairings for T_{" << d << "," << n << "}: "
       << report.entries.size() << " entries, "
       << (report.all_nonnegative ? "all nonnegative" : "NEGATIVE FOUND")
       << "\n";
  r.text = text.str();
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact intersection theory, Betti numbers and rank recursions "
               "for pointed-tree compactifications and configuration spaces"};
  app.set_version_flag("--version", tdn::version());
  app.require_subcommand(1);

  int d = 1, n = 2, order = 8, fm_m = 1;
  std::string monomial_json, family_json, space = "Pm";

  struct Sub {
    CLI::App* cmd;
    CommonOpts opts;
  };
  std::map<std::string, Sub> subs;
  auto make_sub = [&](const std::string& name, const std::string& desc) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    subs[name].cmd = cmd;
    add_common(cmd, subs[name].opts);
    return cmd;
  };

  CLI::App* betti = make_sub("betti", "Betti numbers and Euler characteristic");
  betti->add_option("--d", d)->required();
  betti->add_option("--n", n)->required();

  CLI::App* series = make_sub("series", "Generating function coefficients");
  series->add_option("--d", d)->required();
  series->add_option("--order", order)->required();

  CLI::App* verify = make_sub("verify-gf",
                              "Verify the generating-function equations");
  verify->add_option("--d", d)->required();
  verify->add_option("--order", order)->required();

  CLI::App* ringrank = make_sub("ring-rank", "Graded ranks of the Chow ring");
  ringrank->add_option("--d", d)->required();
  ringrank->add_option("--n", n)->required();
  int degree_value = -1;
  ringrank->add_option("--degree", degree_value, "Single degree to compute");

  CLI::App* integrate = make_sub("integrate", "Integrate a top-degree monomial");
  integrate->add_option("--d", d)->required();
  integrate->add_option("--n", n)->required();
  integrate->add_option("--monomial", monomial_json,
                        "JSON pairs [subset, exponent]")->required();

  CLI::App* pairing = make_sub("pairing", "Divisor/curve intersection table");
  pairing->add_option("--d", d)->required();
  pairing->add_option("--n", n)->required();

  CLI::App* strata = make_sub("strata", "Count boundary strata");
  strata->add_option("--n", n)->required();

  CLI::App* trees = make_sub("trees", "Enumerate stable tree types");
  trees->add_option("--n", n)->required();

  CLI::App* fmbetti = make_sub("fm-betti",
                               "Chow ranks of a configuration space X[n]");
  fmbetti->add_option("--space", space, "Pm (with --m) or e.g. P2, P1xP1");
  fmbetti->add_option("--m", fm_m, "Dimension when --space Pm is used");
  fmbetti->add_option("--n", n)->required();

  CLI::App* conjecture = make_sub("conjecture",
                                  "Check the conjectural dual pairing");
  conjecture->add_option("--d", d)->required();
  conjecture->add_option("--n", n)->required();
  conjecture->add_option("--family", family_json,
                         "JSON array of subsets; all families when omitted");

  CLI::App* nef = make_sub("nef", "Nef pairing table for the eta classes");
  nef->add_option("--d", d)->required();
  nef->add_option("--n", n)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 1;
  }

  const auto started = std::chrono::steady_clock::now();
  try {
    Report report;
    CommonOpts* opts = nullptr;
    for (auto& [name, sub] : subs) {
      if (!sub.cmd->parsed()) continue;
      opts = &sub.opts;
      const tdn::Caps caps = caps_for(sub.opts);
      if (name == "betti") report = run_betti(d, n);
      else if (name == "series") report = run_series(d, order);
      else if (name == "verify-gf") report = run_verify_gf(d, order);
      else if (name == "ring-rank")
        report = run_ring_rank(
            d, n, degree_value >= 0 ? std::optional<int>(degree_value)
                                    : std::nullopt,
            caps);
      else if (name == "integrate") report = run_integrate(d, n, monomial_json, caps);
      else if (name == "pairing") report = run_pairing(d, n, caps);
      else if (name == "strata") report = run_strata(n, caps);
      else if (name == "trees") report = run_trees(n, caps);
      else if (name == "fm-betti")
        report = run_fm_betti(space,
                              fmbetti->count("--m") ? std::optional<int>(fm_m)
                                                    : std::nullopt,
                              n);
      else if (name == "conjecture") report = run_conjecture(d, n, family_json, caps);
      else if (name == "nef") report = run_nef(d, n, caps);
    }
    const double elapsed =
        std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - started)
            .count();
    return emit(report, *opts, elapsed);
  } catch (const tdn::CapExceededError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 2;
  } catch (const tdn::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
