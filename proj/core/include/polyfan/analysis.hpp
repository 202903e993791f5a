#ifndef POLYFAN_ANALYSIS_HPP
#define POLYFAN_ANALYSIS_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "polyfan/polytope.hpp"
#include "polyfan/soliton.hpp"
#include "polyfan/stability.hpp"

namespace polyfan {

/**
 * Full per-polytope analysis: exact invariants (volume, barycenter, KE
 * decision, greatest Ricci lower bound with its certificates) plus the
 * numeric soliton vector.
 */
struct AnalysisReport {
  std::string name;
  int dim = 0;
  Rat volume;
  RatVector barycenter;
  bool is_ke = false;
  Rat R;
  std::optional<int> critical_facet;
  std::vector<int> tied_critical_facets;
  std::optional<RatVector> destabilizer;  ///< -u of the critical facet (integer entries)
  std::optional<RatVector> exit_point;    ///< Q, on the critical facet

  Eigen::VectorXd soliton_vector;
  double soliton_grad_norm = 0;
  int soliton_iterations = 0;
  double soliton_hessian_condition = 0;
  bool soliton_converged = false;

  std::vector<Rat> futaki_basis_values;  ///< Fut_0(e_i) = (P_C)_i, exact
};

AnalysisReport analyze(const FanoPolytope& P, double tol = 1e-10);

/** Serialize; exact rationals as "p/q" strings, floats at full precision. */
nlohmann::ordered_json report_to_json(const AnalysisReport& rep);

/** Inverse of report_to_json (lossless round trip). */
AnalysisReport report_from_json(const nlohmann::ordered_json& doc);

/** Human-readable block, floats at 12 significant digits. */
std::string report_to_text(const AnalysisReport& rep);

}  // namespace polyfan

#endif
