#ifndef POLYFAN_SOLITON_HPP
#define POLYFAN_SOLITON_HPP

#include <string>
#include <vector>

#include "polyfan/exp_integrals.hpp"
#include "polyfan/polytope.hpp"

namespace polyfan {

/** Outcome of the soliton-vector minimization. */
struct SolitonResult {
  Eigen::VectorXd a_star;        ///< minimizer of F(a) = \int_P e^{a.x} dx
  double grad_norm = 0;          ///< ||grad F(a*)|| / F(a*) at the returned iterate
  int iterations = 0;            ///< Newton steps taken
  double hessian_condition = 0;  ///< spectral condition number of F''(a*)
  bool converged = false;
  bool gradient_fallback_used = false;  ///< fell back to a gradient step at least once
  std::vector<double> decrements;       ///< Newton decrement per step, for diagnostics
  std::string diagnostic;               ///< non-empty when something noteworthy happened
};

/**
 * Compute the soliton vector of P: the unique minimizer of the strictly
 * convex functional F(a) = \int_P e^{a.x} dx (P bounded, full-dimensional,
 * origin interior, so F is proper and the minimizer exists and is unique).
 *
 * Damped Newton from a = 0: backtracking Armijo line search (halving,
 * slope 1e-4) while the Newton decrement is >= 1, full steps afterwards;
 * if the Hessian is numerically singular (condition > 1e12) a safeguarded
 * gradient step is taken instead and the result is flagged.  Stops when
 * ||grad F|| / F <= tol.  Never throws on non-convergence: the best
 * iterate is returned with converged = false and a diagnostic.
 */
SolitonResult solve_soliton(const FanoPolytope& P, double tol = 1e-10, int max_iter = 200);

/**
 * Modified Futaki invariant of the field c at soliton candidate a:
 *
 *   Fut_a(c) = ( c . \int_P x e^{a.x} dx ) / Vol(P).
 *
 * Vanishes for every c exactly when a is the soliton vector.
 */
double modified_futaki(const FanoPolytope& P, const Eigen::VectorXd& a, const Eigen::VectorXd& c);

/**
 * Exact modified Futaki invariant at a = 0: Fut_0(c) = c . P_C, the pairing
 * of the field with the barycenter.  Rational and exact; nonzero values are
 * certificates that P is not Kahler-Einstein.
 */
Rat futaki_at_origin(const FanoPolytope& P, const RatVector& c);

/** KE decision with its exact witness. */
struct KeCertificate {
  bool is_ke = false;
  RatVector barycenter;  ///< exact barycenter; zero iff KE
};

/**
 * Kahler-Einstein test: true iff the barycenter of P vanishes exactly
 * (rational arithmetic; the numeric soliton vector is never consulted).
 */
KeCertificate is_kahler_einstein(const FanoPolytope& P);

}  // namespace polyfan

#endif
