#ifndef POLYFAN_STABILITY_HPP
#define POLYFAN_STABILITY_HPP

#include <optional>
#include <vector>

#include "polyfan/polytope.hpp"

namespace polyfan {

/**
 * Stability data of P, all exact.
 *
 * With P_C the barycenter and M = max_j u_j . P_C (positive unless
 * P_C = 0), the greatest Ricci lower bound is
 *
 *   R = 1 / (1 + M) = |QO| / |Q P_C|,
 *
 * where Q = -P_C / M is the point where the ray from P_C through the
 * origin exits P; Q lies on the critical facet, the one maximizing
 * u_j . P_C.  R = 1 exactly when P_C = 0 (the Kahler-Einstein case), and
 * then no critical facet or destabilizer exists.
 */
struct StabilityReport {
  Rat R;                  ///< greatest Ricci lower bound, in (0, 1]
  RatVector barycenter;   ///< exact barycenter P_C
  std::optional<int> critical_facet;      ///< lowest-index maximizer of u_j . P_C
  std::vector<int> tied_critical_facets;  ///< every maximizer, ascending (ties noted)
  std::optional<RatVector> destabilizer;  ///< c = -u on the critical facet
  std::optional<RatVector> exit_point;    ///< Q = -P_C / M, on the critical facet
};

StabilityReport greatest_ricci_lower_bound(const FanoPolytope& P);

/**
 * Twisted Futaki invariant of the field c at parameter t:
 *
 *   Fut_t(c) = t (c . P_C) + (1 - t) max_{x in P} c . x,
 *
 * exact for rational inputs.  Nonnegative for every c iff t <= R; for the
 * returned destabilizer c = -u it equals 1 - t / R.
 */
Rat twisted_futaki(const FanoPolytope& P, const Rat& t, const RatVector& c);

/** Floating-point overload of twisted_futaki. */
double twisted_futaki(const FanoPolytope& P, double t, const Eigen::VectorXd& c);

/**
 * A destabilizing field at parameter t: the vector c = -u of the critical
 * facet, which satisfies twisted_futaki(P, t, c) = 1 - t/R < 0, when t > R;
 * std::nullopt when t <= R (every field then has nonnegative invariant).
 */
std::optional<RatVector> destabilizer(const FanoPolytope& P, const Rat& t);

/**
 * The barycenter-support inequality: for every c != 0,
 *
 *   (c . P_C) / max_{x in P} (c . x)  >=  1 - l(P_C),   l(P_C) = 1/R,
 *
 * with equality at the critical direction c = -u (and for every c when
 * P_C = 0).  Exact rational check.
 * @throws std::invalid_argument for c = 0
 */
bool claim_inequality_check(const FanoPolytope& P, const RatVector& c);

/** Floating-point overload; holds up to `tol` slack. */
bool claim_inequality_check(const FanoPolytope& P, const Eigen::VectorXd& c, double tol = 1e-12);

}  // namespace polyfan

#endif
