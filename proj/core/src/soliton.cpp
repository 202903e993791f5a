#include "polyfan/soliton.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace polyfan {

namespace {

constexpr double kArmijoSlope = 1e-4;
constexpr double kConditionLimit = 1e12;

double spectral_condition(const Eigen::MatrixXd& H, double* lambda_min = nullptr) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);
  const double lmin = es.eigenvalues().minCoeff();
  const double lmax = es.eigenvalues().maxCoeff();
  if (lambda_min) *lambda_min = lmin;
  if (lmin <= 0) return std::numeric_limits<double>::infinity();
  return lmax / lmin;
}

/** F(a + t p), treating overflow of the exponential as +inf. */
double guarded_value(const ExpIntegrator& I, const Eigen::VectorXd& x) {
  try {
    return I.value(x);
  } catch (const std::range_error&) {
    return std::numeric_limits<double>::infinity();
  }
}

}  // namespace

SolitonResult solve_soliton(const FanoPolytope& P, double tol, int max_iter) {
  if (!(tol > 0)) throw std::invalid_argument("solve_soliton: tol must be positive");
  const int n = P.dim();
  const ExpIntegrator I(P);

  SolitonResult res;
  Eigen::VectorXd a = Eigen::VectorXd::Zero(n);
  ExpMoments m = I.moments(a);

  for (int iter = 0;; ++iter) {
    const double residual = m.gradient.norm() / m.value;
    if (residual <= tol) {
      res.converged = true;
      res.iterations = iter;
      break;
    }
    if (iter >= max_iter) {
      res.iterations = iter;
      res.diagnostic = "no convergence after max_iter steps; returning best iterate";
      break;
    }

    double lmin = 0;
    const double cond = spectral_condition(m.hessian, &lmin);
    Eigen::VectorXd p;
    if (!(cond < kConditionLimit)) {
      p = -m.gradient;  // safeguarded gradient step
      res.gradient_fallback_used = true;
      if (res.diagnostic.empty())
        res.diagnostic = "ill-conditioned Hessian; gradient fallback engaged";
    } else {
      p = m.hessian.ldlt().solve(-m.gradient);
    }

    const double decrement = std::sqrt(std::max(0.0, -m.gradient.dot(p)));
    res.decrements.push_back(decrement);

    double t = 1.0;
    if (decrement >= 1.0 || !(guarded_value(I, a + p) < std::numeric_limits<double>::infinity())) {
      // Damped phase: Armijo backtracking with halving.
      const double slope = m.gradient.dot(p);
      while (t > 1e-18) {
        const double trial = guarded_value(I, a + t * p);
        if (trial <= m.value + kArmijoSlope * t * slope) break;
        t *= 0.5;
      }
      if (t <= 1e-18) {
        res.iterations = iter;
        res.diagnostic = "line search failed to make progress";
        break;
      }
    }
    a += t * p;
    m = I.moments(a);
  }

  res.a_star = a;
  res.grad_norm = m.gradient.norm() / m.value;
  res.hessian_condition = spectral_condition(m.hessian);
  return res;
}

double modified_futaki(const FanoPolytope& P, const Eigen::VectorXd& a, const Eigen::VectorXd& c) {
  if (c.size() != P.dim()) throw std::invalid_argument("field length does not match dimension");
  const ExpMoments m = exp_moments(P, a);
  return c.dot(m.gradient) / rational_to_double(volume(P));
}

Rat futaki_at_origin(const FanoPolytope& P, const RatVector& c) {
  if (c.size() != P.dim()) throw std::invalid_argument("field length does not match dimension");
  return c.dot(barycenter(P));
}

KeCertificate is_kahler_einstein(const FanoPolytope& P) {
  KeCertificate cert;
  cert.barycenter = barycenter(P);
  cert.is_ke = true;
  for (Eigen::Index i = 0; i < cert.barycenter.size(); ++i)
    if (cert.barycenter[i] != 0) cert.is_ke = false;
  return cert;
}

}  // namespace polyfan
