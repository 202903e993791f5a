#ifndef POLYFAN_LATTICE_HPP
#define POLYFAN_LATTICE_HPP

#include <cstdint>
#include <vector>

#include "polyfan/polytope.hpp"

namespace polyfan {

/**
 * #(kP intersect Z^n) for integer k >= 0, by exact integer scan of the
 * bounding box of kP testing u_j . m + k >= 0.
 * @throws std::range_error if any axis of the scan exceeds 10^4 points
 */
std::int64_t lattice_count(const FanoPolytope& P, int k);

/** w_k = sum_{m in kP intersect Z^n} c . m, exact. */
Rat weight_sum(const FanoPolytope& P, const RatVector& c, int k);

/**
 * The weight bookkeeping of the graded coordinate ring: dims and weights of
 * R_k = H^0(-kK), and the boundary weights
 *
 *   w'_k = w_k - w_{k-1} - mu_max dim R_{k-1},
 *
 * mu_max = max_{m in P} c . m over lattice points of P.  Entries are
 * indexed by k = 0..k_max; boundary_weights[k] is w'_k (entry 0 unused).
 */
struct WeightSeries {
  int k_max = 0;
  std::vector<std::int64_t> dims;
  std::vector<Rat> weights;
  Rat mu_max;
  std::vector<Rat> boundary_weights;
};

WeightSeries boundary_weight_series(const FanoPolytope& P, const RatVector& c, int k_max);

/**
 * Least-squares fit of w'_k by A k^n + B k^{n-1} over k in [k_max/2, k_max],
 * compared against the exact asymptotic target
 *
 *   lim w'_k / k^n = (n+1) \int_P c.x dx - mu_max Vol(P).
 *
 * rel_gap is |fitted - target| / |target| (or |fitted| when the target is
 * exactly zero, as for c = 0).
 */
struct AsymptoticFit {
  double fitted_leading = 0;
  double fitted_subleading = 0;
  double target = 0;
  double rel_gap = 0;
  int k_lo = 0, k_hi = 0;
};

/** @throws std::invalid_argument when k_max < 10 (too short to fit) */
AsymptoticFit verify_inttheta_asymptotics(const FanoPolytope& P, const RatVector& c, int k_max);

/**
 * Riemann-Roch leading-term checks: dims fit A k^n + B k^{n-1} against
 * Vol(P), weights fit A k^{n+1} + B k^n against \int_P c.x dx.  The weights
 * gap is measured relative to Vol(P) when the target is exactly zero (as
 * for symmetric polytopes).
 */
struct RrFit {
  double dims_leading = 0;
  double dims_target = 0;
  double dims_rel_gap = 0;
  double weights_leading = 0;
  double weights_target = 0;
  double weights_rel_gap = 0;
  int k_lo = 0, k_hi = 0;
};

/** @throws std::invalid_argument when k_max < 10 */
RrFit verify_rr_asymptotics(const FanoPolytope& P, const RatVector& c, int k_max);

}  // namespace polyfan

#endif
