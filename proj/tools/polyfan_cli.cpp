#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "polyfan/analysis.hpp"
#include "polyfan/catalog.hpp"
#include "polyfan/exp_integrals.hpp"
#include "polyfan/lattice.hpp"
#include "polyfan/polytope.hpp"
#include "polyfan/soliton.hpp"
#include "polyfan/stability.hpp"

namespace {

using nlohmann::ordered_json;
using namespace polyfan;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;        // parse/validation problems
constexpr int kExitNoConverge = 3;   // soliton solver gave up

/** "catalog:NAME" resolves against the built-in catalog, anything else is a
 *  document path. */
FanoPolytope load_polytope(const std::string& arg) {
  constexpr const char* prefix = "catalog:";
  if (arg.rfind(prefix, 0) == 0) return catalog_polytope(arg.substr(8));
  return parse_polytope_file(arg);
}

/** Comma-separated rationals ("1,0", "1/2,-3,0.25") as a field vector. */
RatVector parse_field(const std::string& text, int dim) {
  std::vector<Rat> entries;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    const auto a = token.find_first_not_of(" \t");
    if (a == std::string::npos) throw std::invalid_argument("empty entry in field vector");
    const auto b = token.find_last_not_of(" \t");
    entries.push_back(parse_rational(token.substr(a, b - a + 1)));
  }
  if (static_cast<int>(entries.size()) != dim)
    throw std::invalid_argument("field vector has " + std::to_string(entries.size()) +
                                " entries, polytope dimension is " + std::to_string(dim));
  RatVector c(dim);
  for (int i = 0; i < dim; ++i) c[i] = entries[static_cast<std::size_t>(i)];
  return c;
}

std::string fm(double x) {
  std::ostringstream out;
  out << std::setprecision(12) << x;
  return out.str();
}

std::string rat_with_float(const Rat& r) {
  return rational_to_string(r) + " (" + fm(rational_to_double(r)) + ")";
}

std::string rat_vec(const RatVector& v) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += rational_to_string(v[i]);
  }
  return out + ")";
}

std::string float_vec(const Eigen::VectorXd& v) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += fm(v[i]);
  }
  return out + ")";
}

std::vector<std::string> rat_strings(const RatVector& v) {
  std::vector<std::string> out;
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(rational_to_string(v[i]));
  return out;
}

struct McCheck {
  double quadrature = 0;
  McResult mc;
  std::uint64_t seed = 0;
  bool consistent = false;
};

McCheck run_mc_check(const FanoPolytope& P, const Eigen::VectorXd& a, std::size_t samples,
                     std::uint64_t seed) {
  McCheck chk;
  chk.quadrature = integral_exp(P, a);
  chk.mc = mc_integral_exp(P, a, samples, seed);
  chk.seed = seed;
  chk.consistent = std::abs(chk.mc.value - chk.quadrature) <= 3 * chk.mc.std_error + 1e-12;
  return chk;
}

void print_mc_check(const McCheck& chk) {
  std::cout << "quadrature F(a*): " << fm(chk.quadrature) << "\n"
            << "monte carlo F(a*): " << fm(chk.mc.value) << " +- " << fm(chk.mc.std_error) << " ("
            << chk.mc.samples << " samples, seed " << chk.seed << ")\n"
            << "mc agreement (3 sigma): " << (chk.consistent ? "consistent" : "INCONSISTENT")
            << "\n";
}

ordered_json mc_check_json(const McCheck& chk) {
  return ordered_json{{"quadrature", chk.quadrature},
                      {"mc_value", chk.mc.value},
                      {"mc_std_error", chk.mc.std_error},
                      {"samples", chk.mc.samples},
                      {"seed", chk.seed},
                      {"consistent", chk.consistent}};
}

int run_analyze(const std::string& arg, double tol, bool json, std::size_t mc_samples,
                std::uint64_t seed) {
  const FanoPolytope P = load_polytope(arg);
  const AnalysisReport rep = analyze(P, tol);
  std::optional<McCheck> chk;
  if (mc_samples > 0) chk = run_mc_check(P, rep.soliton_vector, mc_samples, seed);

  if (json) {
    ordered_json doc = report_to_json(rep);
    if (chk) doc["mc_check"] = mc_check_json(*chk);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << report_to_text(rep);
    if (chk) print_mc_check(*chk);
  }
  if (!rep.soliton_converged) {
    std::cerr << "error: soliton solver did not converge (grad norm "
              << fm(rep.soliton_grad_norm) << ")\n";
    return kExitNoConverge;
  }
  return kExitOk;
}

int run_soliton(const std::string& arg, double tol, bool json, std::size_t mc_samples,
                std::uint64_t seed) {
  const FanoPolytope P = load_polytope(arg);
  const SolitonResult r = solve_soliton(P, tol);
  std::optional<McCheck> chk;
  if (mc_samples > 0) chk = run_mc_check(P, r.a_star, mc_samples, seed);

  if (json) {
    ordered_json doc{{"name", P.name()},
                     {"dim", P.dim()},
                     {"soliton_vector", std::vector<double>(r.a_star.data(),
                                                            r.a_star.data() + r.a_star.size())},
                     {"grad_norm", r.grad_norm},
                     {"iterations", r.iterations},
                     {"hessian_condition", r.hessian_condition},
                     {"converged", r.converged},
                     {"gradient_fallback_used", r.gradient_fallback_used}};
    if (!r.diagnostic.empty()) doc["diagnostic"] = r.diagnostic;
    if (chk) doc["mc_check"] = mc_check_json(*chk);
    std::cout << doc.dump(2) << "\n";
  } else {
    if (!P.name().empty()) std::cout << "name: " << P.name() << "\n";
    std::cout << "dim: " << P.dim() << "\n"
              << "soliton vector: " << float_vec(r.a_star) << "\n"
              << "gradient norm: " << fm(r.grad_norm) << "\n"
              << "iterations: " << r.iterations << "\n"
              << "hessian condition: " << fm(r.hessian_condition) << "\n"
              << "converged: " << (r.converged ? "yes" : "no") << "\n";
    if (!r.diagnostic.empty()) std::cout << "diagnostic: " << r.diagnostic << "\n";
    if (chk) print_mc_check(*chk);
  }
  if (!r.converged) {
    std::cerr << "error: soliton solver did not converge: " << r.diagnostic << "\n";
    return kExitNoConverge;
  }
  return kExitOk;
}

int run_rbound(const std::string& arg, bool json) {
  const FanoPolytope P = load_polytope(arg);
  const StabilityReport r = greatest_ricci_lower_bound(P);

  if (json) {
    ordered_json doc{{"name", P.name()},
                     {"dim", P.dim()},
                     {"R", rational_to_string(r.R)},
                     {"R_value", rational_to_double(r.R)},
                     {"barycenter", rat_strings(r.barycenter)}};
    doc["critical_facet"] =
        r.critical_facet ? ordered_json(*r.critical_facet) : ordered_json(nullptr);
    doc["tied_critical_facets"] = r.tied_critical_facets;
    doc["destabilizer"] =
        r.destabilizer ? ordered_json(rat_strings(*r.destabilizer)) : ordered_json(nullptr);
    doc["exit_point"] =
        r.exit_point ? ordered_json(rat_strings(*r.exit_point)) : ordered_json(nullptr);
    std::cout << doc.dump(2) << "\n";
  } else {
    if (!P.name().empty()) std::cout << "name: " << P.name() << "\n";
    std::cout << "R: " << rat_with_float(r.R) << "\n"
              << "barycenter: " << rat_vec(r.barycenter) << "\n";
    if (r.critical_facet) {
      std::cout << "critical facet: " << *r.critical_facet;
      if (r.tied_critical_facets.size() > 1) {
        std::cout << " (tied:";
        for (int j : r.tied_critical_facets) std::cout << " " << j;
        std::cout << ")";
      }
      std::cout << "\n"
                << "destabilizer: " << rat_vec(*r.destabilizer) << "\n"
                << "exit point: " << rat_vec(*r.exit_point) << "\n";
    } else {
      std::cout << "critical facet: none (barycenter at the origin)\n";
    }
  }
  return kExitOk;
}

int run_futaki(const std::string& arg, const std::string& c_text,
               const std::optional<std::string>& t_text, bool json) {
  const FanoPolytope P = load_polytope(arg);
  const RatVector c = parse_field(c_text, P.dim());

  if (t_text) {
    const Rat t = parse_rational(*t_text);
    const Rat fut = twisted_futaki(P, t, c);
    if (json) {
      ordered_json doc{{"name", P.name()},
                       {"c", rat_strings(c)},
                       {"t", rational_to_string(t)},
                       {"twisted_futaki", rational_to_string(fut)},
                       {"twisted_futaki_value", rational_to_double(fut)},
                       {"destabilizing", fut < 0}};
      std::cout << doc.dump(2) << "\n";
    } else {
      if (!P.name().empty()) std::cout << "name: " << P.name() << "\n";
      std::cout << "c: " << rat_vec(c) << "\n"
                << "twisted Futaki at t = " << rational_to_string(t) << ": " << rat_with_float(fut)
                << "\n"
                << "destabilizing: " << (fut < 0 ? "yes" : "no") << "\n";
    }
  } else {
    const Rat fut = futaki_at_origin(P, c);
    if (json) {
      ordered_json doc{{"name", P.name()},
                       {"c", rat_strings(c)},
                       {"futaki_at_origin", rational_to_string(fut)},
                       {"futaki_at_origin_value", rational_to_double(fut)}};
      std::cout << doc.dump(2) << "\n";
    } else {
      if (!P.name().empty()) std::cout << "name: " << P.name() << "\n";
      std::cout << "c: " << rat_vec(c) << "\n"
                << "Futaki invariant at a = 0: " << rat_with_float(fut) << "\n";
    }
  }
  return kExitOk;
}

int run_verify_weights(const std::string& arg, const std::string& c_text, int k_max, bool json) {
  const FanoPolytope P = load_polytope(arg);
  const RatVector c = parse_field(c_text, P.dim());
  const int n = P.dim();

  const WeightSeries s = boundary_weight_series(P, c, k_max);
  // exact asymptotic target: (n+1) \int_P c.x dx - mu_max Vol(P)
  const Rat vol = volume(P);
  const Rat target_rat = Rat(n + 1) * c.dot(barycenter(P)) * vol - s.mu_max * vol;
  const double target = rational_to_double(target_rat);
  const double denom = target == 0 ? 1.0 : std::abs(target);

  std::optional<AsymptoticFit> fit;
  std::string warning;
  if (k_max >= 10) {
    fit = verify_inttheta_asymptotics(P, c, k_max);
  } else {
    warning = "k_max too small for the asymptotic fit (need k_max >= 10); table only";
    std::cerr << "warning: " << warning << "\n";
  }

  if (json) {
    ordered_json rows = ordered_json::array();
    for (int k = 1; k <= k_max; ++k) {
      const double ratio = rational_to_double(s.boundary_weights[k]) / std::pow(k, n);
      rows.push_back(ordered_json{{"k", k},
                                  {"dim", s.dims[k]},
                                  {"w", rational_to_string(s.weights[k])},
                                  {"w_boundary", rational_to_string(s.boundary_weights[k])},
                                  {"ratio", ratio},
                                  {"gap", std::abs(ratio - target) / denom}});
    }
    ordered_json doc{{"name", P.name()},
                     {"c", rat_strings(c)},
                     {"k_max", k_max},
                     {"mu_max", rational_to_string(s.mu_max)},
                     {"target", rational_to_string(target_rat)},
                     {"target_value", target},
                     {"rows", rows}};
    if (fit) {
      doc["fit"] = ordered_json{{"fitted_leading", fit->fitted_leading},
                                {"fitted_subleading", fit->fitted_subleading},
                                {"target", fit->target},
                                {"rel_gap", fit->rel_gap},
                                {"k_lo", fit->k_lo},
                                {"k_hi", fit->k_hi}};
    } else {
      doc["fit"] = nullptr;
      doc["warning"] = warning;
    }
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
  }

  if (!P.name().empty()) std::cout << "name: " << P.name() << "\n";
  std::cout << "c: " << rat_vec(c) << "\n"
            << "mu_max: " << rational_to_string(s.mu_max) << "\n"
            << "target w'_k / k^" << n << " -> " << rat_with_float(target_rat) << "\n\n";
  std::cout << std::setw(5) << "k" << std::setw(12) << "dim R_k" << std::setw(18) << "w_k"
            << std::setw(18) << "w'_k" << std::setw(20) << "w'_k/k^n" << std::setw(18) << "gap"
            << "\n";
  for (int k = 1; k <= k_max; ++k) {
    const double ratio = rational_to_double(s.boundary_weights[k]) / std::pow(k, n);
    std::cout << std::setw(5) << k << std::setw(12) << s.dims[k] << std::setw(18)
              << rational_to_string(s.weights[k]) << std::setw(18)
              << rational_to_string(s.boundary_weights[k]) << std::setw(20) << fm(ratio)
              << std::setw(18) << fm(std::abs(ratio - target) / denom) << "\n";
  }
  if (fit) {
    std::cout << "\nleast-squares fit over k in [" << fit->k_lo << ", " << fit->k_hi << "]\n"
              << "fitted leading coefficient: " << fm(fit->fitted_leading) << "\n"
              << "target: " << fm(fit->target) << "\n"
              << "relative gap: " << fm(fit->rel_gap) << "\n";
  }
  return kExitOk;
}

int run_catalog_list(bool json) {
  if (json) {
    ordered_json arr = ordered_json::array();
    for (const std::string& name : catalog_names()) {
      const FanoPolytope& P = catalog_polytope(name);
      arr.push_back(ordered_json{{"name", name}, {"dim", P.dim()}, {"facets", P.facet_count()}});
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const std::string& name : catalog_names()) {
      const FanoPolytope& P = catalog_polytope(name);
      std::cout << name << " (dim " << P.dim() << ", " << P.facet_count() << " facets)\n";
    }
  }
  return kExitOk;
}

int run_catalog_show(const std::string& name) {
  std::cout << polytope_document(catalog_polytope(name)) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polyfan: exact toric Fano polytope analysis"};
  app.require_subcommand(1);

  std::string arg, c_text, t_text, show_name;
  double tol = 1e-10;
  bool json = false;
  int k_max = 0;
  std::size_t mc_samples = 0;
  std::uint64_t seed = 202608;
  bool has_t = false;

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "full report for a polytope");
  analyze_cmd->add_option("polytope", arg, "document path or catalog:NAME")->required();
  analyze_cmd->add_option("--tol", tol, "soliton solver tolerance")->check(CLI::PositiveNumber);
  analyze_cmd->add_flag("--json", json, "machine-readable output");
  analyze_cmd->add_option("--mc-samples", mc_samples, "Monte-Carlo cross-check sample count");
  analyze_cmd->add_option("--seed", seed, "Monte-Carlo seed");

  CLI::App* soliton_cmd = app.add_subcommand("soliton", "soliton vector only");
  soliton_cmd->add_option("polytope", arg, "document path or catalog:NAME")->required();
  soliton_cmd->add_option("--tol", tol, "solver tolerance")->check(CLI::PositiveNumber);
  soliton_cmd->add_flag("--json", json, "machine-readable output");
  soliton_cmd->add_option("--mc-samples", mc_samples, "Monte-Carlo cross-check sample count");
  soliton_cmd->add_option("--seed", seed, "Monte-Carlo seed");

  CLI::App* rbound_cmd = app.add_subcommand("rbound", "greatest Ricci lower bound");
  rbound_cmd->add_option("polytope", arg, "document path or catalog:NAME")->required();
  rbound_cmd->add_flag("--json", json, "machine-readable output");

  CLI::App* futaki_cmd = app.add_subcommand("futaki", "(twisted) Futaki invariant of a field");
  futaki_cmd->add_option("polytope", arg, "document path or catalog:NAME")->required();
  futaki_cmd->add_option("--c", c_text, "field vector, comma-separated rationals")->required();
  CLI::Option* t_opt = futaki_cmd->add_option("--t", t_text, "twist parameter (rational)");
  futaki_cmd->add_flag("--json", json, "machine-readable output");

  CLI::App* vw_cmd = app.add_subcommand("verify-weights", "boundary weight asymptotics");
  vw_cmd->add_option("polytope", arg, "document path or catalog:NAME")->required();
  vw_cmd->add_option("--c", c_text, "field vector, comma-separated rationals")->required();
  vw_cmd->add_option("--kmax", k_max, "largest dilation factor")
      ->required()
      ->check(CLI::PositiveNumber);
  vw_cmd->add_flag("--json", json, "machine-readable output");

  CLI::App* catalog_cmd = app.add_subcommand("catalog", "built-in polytopes");
  catalog_cmd->require_subcommand(1);
  CLI::App* list_cmd = catalog_cmd->add_subcommand("list", "list catalog entries");
  list_cmd->add_flag("--json", json, "machine-readable output");
  CLI::App* show_cmd = catalog_cmd->add_subcommand("show", "print a catalog document");
  show_cmd->add_option("name", show_name, "catalog entry name")->required();

  try {
    app.parse(argc, argv);
    has_t = t_opt->count() > 0;
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (analyze_cmd->parsed()) return run_analyze(arg, tol, json, mc_samples, seed);
    if (soliton_cmd->parsed()) return run_soliton(arg, tol, json, mc_samples, seed);
    if (rbound_cmd->parsed()) return run_rbound(arg, json);
    if (futaki_cmd->parsed())
      return run_futaki(arg, c_text, has_t ? std::optional<std::string>(t_text) : std::nullopt,
                        json);
    if (vw_cmd->parsed()) return run_verify_weights(arg, c_text, k_max, json);
    if (catalog_cmd->parsed()) {
      if (list_cmd->parsed()) return run_catalog_list(json);
      if (show_cmd->parsed()) return run_catalog_show(show_name);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::domain_error& e) {
    std::cerr << "error: invalid polytope: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::range_error& e) {
    std::cerr << "error: computation out of range: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
