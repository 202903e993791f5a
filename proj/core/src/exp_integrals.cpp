#include "polyfan/exp_integrals.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace polyfan {

namespace {

constexpr double kExpRangeBound = 700.0;

/**
 * exp[t_0..t_m] in extended precision via the Opitz form: the divided
 * difference is the top-right entry of e^J for the upper-bidiagonal matrix J
 * with the nodes on the diagonal and ones above it.  Nodes are centered at
 * their midrange and J is scaled by 2^-s so that ||J/2^s||_inf <= 1/2, e^:
 * is a short Taylor sum, and the result is squared back up.  Every matrix
 * past the Taylor stage is entrywise nonnegative and upper triangular, so
 * the repeated squarings are cancellation-free and per-entry relative
 * accuracy is preserved (error ~ 2^s eps, i.e. ~ spread * eps).
 */
long double expdd_ld(std::vector<long double> t) {
  const std::size_t mm = t.size();
  if (mm == 0) throw std::invalid_argument("divided difference needs at least one node");
  if (mm == 1) return expl(t[0]);

  std::sort(t.begin(), t.end());
  const long double mid = (t.front() + t.back()) / 2;
  for (long double& x : t) x -= mid;
  const long double half_spread = t.back();  // >= 0 after centering

  int s = 0;
  while ((half_spread + 1.0L) / std::exp2l(s) > 0.5L) ++s;
  const long double inv = 1.0L / std::exp2l(s);

  // Row-major (mm x mm) upper-triangular workspace.
  const auto at = [mm](std::vector<long double>& M, std::size_t i, std::size_t j) -> long double& {
    return M[i * mm + j];
  };
  std::vector<long double> X(mm * mm, 0.0L);
  for (std::size_t i = 0; i < mm; ++i) {
    at(X, i, i) = t[i] * inv;
    if (i + 1 < mm) at(X, i, i + 1) = inv;
  }

  const auto mul_upper = [&](const std::vector<long double>& A, const std::vector<long double>& B) {
    std::vector<long double> C(mm * mm, 0.0L);
    for (std::size_t i = 0; i < mm; ++i)
      for (std::size_t j = i; j < mm; ++j) {
        long double acc = 0.0L;
        for (std::size_t k = i; k <= j; ++k) acc += A[i * mm + k] * B[k * mm + j];
        C[i * mm + j] = acc;
      }
    return C;
  };

  // e^X by Taylor; ||X||_inf <= 1/2 so ~25 terms reach long-double epsilon.
  std::vector<long double> E(mm * mm, 0.0L), T(mm * mm, 0.0L);
  for (std::size_t i = 0; i < mm; ++i) at(E, i, i) = at(T, i, i) = 1.0L;
  for (int k = 1; k <= 40; ++k) {
    T = mul_upper(T, X);
    const long double invk = 1.0L / k;
    long double tmax = 0.0L;
    for (std::size_t i = 0; i < mm * mm; ++i) {
      T[i] *= invk;
      E[i] += T[i];
      tmax = std::max(tmax, fabsl(T[i]));
    }
    if (tmax < 1e-24L) break;
  }
  for (int k = 0; k < s; ++k) E = mul_upper(E, E);

  return at(E, 0, mm - 1) * expl(mid);
}

}  // namespace

double exp_divided_difference(std::span<const double> nodes) {
  std::vector<long double> t(nodes.begin(), nodes.end());
  return static_cast<double>(expdd_ld(std::move(t)));
}

ExpIntegrator::ExpIntegrator(const FanoPolytope& P) : n_(P.dim()) {
  const Triangulation T = triangulate(P);
  Rat nfact(1);
  for (int k = 2; k <= n_; ++k) nfact *= Rat(k);
  for (const Simplex& s : T.simplices) {
    PreparedSimplex ps;
    ps.verts.resize(n_, n_ + 1);
    for (int c = 0; c <= n_; ++c) ps.verts.col(c) = to_double_vector(s.vertices[c]);
    ps.scale = rational_to_double(s.volume() * nfact);  // |det| of the edge matrix
    simplices_.push_back(std::move(ps));
  }
  for (const RatVector& v : P.vertices()) vertices_.push_back(to_double_vector(v));
}

void ExpIntegrator::check_range(const Eigen::VectorXd& a) const {
  if (a.size() != n_) throw std::invalid_argument("field length does not match dimension");
  for (const Eigen::VectorXd& v : vertices_) {
    if (std::abs(a.dot(v)) > kExpRangeBound)
      throw std::range_error("integral_exp: |a.v| exceeds 700 at a vertex; rescale the field");
  }
}

namespace {

std::vector<long double> node_values(const Eigen::MatrixXd& verts, const Eigen::VectorXd& a) {
  std::vector<long double> t(static_cast<std::size_t>(verts.cols()));
  for (Eigen::Index c = 0; c < verts.cols(); ++c) {
    long double acc = 0.0L;
    for (Eigen::Index r = 0; r < verts.rows(); ++r)
      acc += static_cast<long double>(a[r]) * static_cast<long double>(verts(r, c));
    t[static_cast<std::size_t>(c)] = acc;
  }
  return t;
}

}  // namespace

double ExpIntegrator::value(const Eigen::VectorXd& a) const {
  check_range(a);
  long double total = 0.0L;
  for (const PreparedSimplex& s : simplices_) {
    std::vector<long double> t = node_values(s.verts, a);
    total += static_cast<long double>(s.scale) * expdd_ld(std::move(t));
  }
  return static_cast<double>(total);
}

ExpMoments ExpIntegrator::moments(const Eigen::VectorXd& a) const {
  check_range(a);
  ExpMoments out;
  out.gradient = Eigen::VectorXd::Zero(n_);
  out.hessian = Eigen::MatrixXd::Zero(n_, n_);
  Eigen::VectorXd grad_abs = Eigen::VectorXd::Zero(n_);
  Eigen::MatrixXd hess_abs = Eigen::MatrixXd::Zero(n_, n_);

  long double total = 0.0L;
  for (const PreparedSimplex& s : simplices_) {
    const std::vector<long double> base = node_values(s.verts, a);
    const long double scale = s.scale;
    total += scale * expdd_ld(base);

    for (int p = 0; p <= n_; ++p) {
      std::vector<long double> tp = base;
      tp.push_back(base[p]);
      const double wp = static_cast<double>(scale * expdd_ld(tp));
      out.gradient += wp * s.verts.col(p);
      grad_abs += std::abs(wp) * s.verts.col(p).cwiseAbs();

      for (int q = p; q <= n_; ++q) {
        std::vector<long double> tpq = tp;
        tpq.push_back(base[q]);
        const double coeff = (p == q) ? 2.0 : 1.0;
        const double wpq = coeff * static_cast<double>(scale * expdd_ld(tpq));
        Eigen::MatrixXd outer = s.verts.col(p) * s.verts.col(q).transpose();
        if (p != q) outer += s.verts.col(q) * s.verts.col(p).transpose();
        out.hessian += wpq * outer;
        hess_abs += std::abs(wpq) * outer.cwiseAbs();
      }
    }
  }
  out.value = static_cast<double>(total);

  // Heuristic forward-error estimate: rounding amplification is bounded by
  // the ratio of the absolute-value sums to the surviving magnitudes.
  double ratio = 1.0;
  for (int i = 0; i < n_; ++i)
    ratio = std::max(ratio, grad_abs[i] / std::max(std::abs(out.gradient[i]), out.value));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      ratio = std::max(ratio, hess_abs(i, j) / std::max(std::abs(out.hessian(i, j)), out.value));
  out.est_rel_error = 1e-15 * ratio;
  return out;
}

double integral_exp(const FanoPolytope& P, const Eigen::VectorXd& a) {
  return ExpIntegrator(P).value(a);
}

ExpMoments exp_moments(const FanoPolytope& P, const Eigen::VectorXd& a) {
  return ExpIntegrator(P).moments(a);
}

McResult mc_integral_exp(const FanoPolytope& P, const Eigen::VectorXd& a, std::size_t samples,
                         std::uint64_t seed) {
  const int n = P.dim();
  if (a.size() != n) throw std::invalid_argument("field length does not match dimension");
  if (samples == 0) throw std::invalid_argument("mc_integral_exp needs samples > 0");

  Eigen::VectorXd lo = Eigen::VectorXd::Constant(n, std::numeric_limits<double>::infinity());
  Eigen::VectorXd hi = -lo;
  for (const RatVector& v : P.vertices()) {
    const Eigen::VectorXd vd = to_double_vector(v);
    lo = lo.cwiseMin(vd);
    hi = hi.cwiseMax(vd);
  }
  double box_vol = 1.0;
  for (int i = 0; i < n; ++i) box_vol *= hi[i] - lo[i];

  const IntMatrix& U = P.facets();
  Eigen::MatrixXd Ud(U.rows(), U.cols());
  for (Eigen::Index r = 0; r < U.rows(); ++r)
    for (Eigen::Index c = 0; c < U.cols(); ++c) Ud(r, c) = static_cast<double>(U(r, c));

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Eigen::VectorXd x(n);
  double sum = 0.0, sumsq = 0.0;
  std::size_t accepted = 0;
  for (std::size_t it = 0; it < samples; ++it) {
    for (int i = 0; i < n; ++i) x[i] = lo[i] + (hi[i] - lo[i]) * unif(rng);
    double f = 0.0;
    if (((Ud * x).array() >= -1.0).all()) {
      f = std::exp(a.dot(x));
      ++accepted;
    }
    sum += f;
    sumsq += f * f;
  }
  const double mean = sum / static_cast<double>(samples);
  const double var =
      std::max(0.0, (sumsq - sum * mean) / (static_cast<double>(samples) - 1.0));
  McResult r;
  r.value = box_vol * mean;
  r.std_error = box_vol * std::sqrt(var / static_cast<double>(samples));
  r.samples = samples;
  r.accepted = accepted;
  return r;
}

}  // namespace polyfan
