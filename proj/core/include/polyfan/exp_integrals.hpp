#ifndef POLYFAN_EXP_INTEGRALS_HPP
#define POLYFAN_EXP_INTEGRALS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "polyfan/polytope.hpp"

namespace polyfan {

/**
 * First-order divided difference of exp at the given nodes,
 * exp[t_0, ..., t_m], symmetric in its arguments and well defined for
 * repeated (confluent) nodes, where it degenerates to exp(t)/m!.
 *
 * Evaluated via the exponential of the upper-bidiagonal node matrix with
 * scaling and repeated squaring, carried in extended precision; relative
 * accuracy is ~1e-15 across node spreads up to ~1400 and any confluence
 * pattern.  Nodes need not be sorted.
 */
double exp_divided_difference(std::span<const double> nodes);

/** Value, gradient and Hessian of F(a) = \int_P e^{a.x} dx. */
struct ExpMoments {
  double value = 0;
  Eigen::VectorXd gradient;
  Eigen::MatrixXd hessian;
  double est_rel_error = 0;  ///< crude forward rounding-error estimate
};

/** Monte-Carlo estimate with its standard error. */
struct McResult {
  double value = 0;
  double std_error = 0;
  std::size_t samples = 0;
  std::size_t accepted = 0;
};

/**
 * Precomputed simplicial data for evaluating F(a) = \int_P e^{a.x} dx and
 * its derivatives repeatedly (the triangulation is fixed by P).  Instances
 * are immutable after construction and safe for concurrent reads.
 *
 * Per simplex with vertices v_0..v_n and node values theta_i = a . v_i,
 *
 *   \int_S e^{a.x} dx        = n! vol(S) exp[theta_0..theta_n]
 *   d/da  (gradient)         = n! vol(S) sum_p v_p exp[theta_0..theta_n, theta_p]
 *   d2/da2 (Hessian)         = n! vol(S) sum_{p,q} (1 + [p==q])
 *                              v_p v_q^T exp[theta_0..theta_n, theta_p, theta_q]
 *
 * the standard simplex quadrature of the exponential via divided
 * differences, exact for the polytope up to rounding.
 */
class ExpIntegrator {
 public:
  explicit ExpIntegrator(const FanoPolytope& P);

  int dim() const { return n_; }

  /**
   * F(a); throws std::range_error when max_i |a . v_i| > 700 over vertices
   * (the result would overflow double; rescale the field first).
   */
  double value(const Eigen::VectorXd& a) const;

  /** F with gradient and Hessian. */
  ExpMoments moments(const Eigen::VectorXd& a) const;

 private:
  struct PreparedSimplex {
    Eigen::MatrixXd verts;  // one column per vertex, n+1 columns
    double scale = 0;       // n! vol(S) = |det|, exact value rounded once
  };
  int n_ = 0;
  std::vector<PreparedSimplex> simplices_;
  std::vector<Eigen::VectorXd> vertices_;  // polytope vertices, for the range guard

  void check_range(const Eigen::VectorXd& a) const;
};

/** One-shot F(a) = \int_P e^{a.x} dx (see ExpIntegrator::value). */
double integral_exp(const FanoPolytope& P, const Eigen::VectorXd& a);

/** One-shot value/gradient/Hessian (see ExpIntegrator::moments). */
ExpMoments exp_moments(const FanoPolytope& P, const Eigen::VectorXd& a);

/**
 * Monte-Carlo estimate of \int_P e^{a.x} dx by rejection sampling over the
 * exact vertex bounding box of P.  Deterministic for a fixed seed.
 */
McResult mc_integral_exp(const FanoPolytope& P, const Eigen::VectorXd& a,
                         std::size_t samples, std::uint64_t seed);

}  // namespace polyfan

#endif
