#include "polyfan/lattice.hpp"

#include <cmath>
#include <stdexcept>

namespace polyfan {

namespace {

constexpr std::int64_t kAxisLimit = 10000;

using Int = boost::multiprecision::mpz_int;

std::int64_t floor_rat(const Rat& r) {
  Int num = numerator(r), den = denominator(r);  // den > 0 canonical
  Int q = num / den;
  if (num % den != 0 && num < 0) q -= 1;
  return q.convert_to<std::int64_t>();
}

std::int64_t ceil_rat(const Rat& r) {
  Int num = numerator(r), den = denominator(r);
  Int q = num / den;
  if (num % den != 0 && num > 0) q += 1;
  return q.convert_to<std::int64_t>();
}

/**
 * Scan the lattice points of kP (exact integer arithmetic) and accumulate
 * their count and coordinate sum.
 */
void scan_dilate(const FanoPolytope& P, int k, std::int64_t& count, IntVector& coord_sum) {
  const int n = P.dim();
  count = 0;
  coord_sum = IntVector::Zero(n);
  if (k == 0) {  // 0P = {0}
    count = 1;
    return;
  }

  std::vector<std::int64_t> lo(n), hi(n);
  for (int i = 0; i < n; ++i) {
    Rat mn, mx;
    bool first = true;
    for (const RatVector& v : P.vertices()) {
      const Rat s = Rat(k) * v[i];
      if (first || s < mn) mn = s;
      if (first || s > mx) mx = s;
      first = false;
    }
    lo[i] = ceil_rat(mn);
    hi[i] = floor_rat(mx);
    if (hi[i] - lo[i] + 1 > kAxisLimit)
      throw std::range_error("lattice scan too large: axis span exceeds 10^4 points");
  }

  const IntMatrix& U = P.facets();
  std::vector<std::int64_t> m(n);
  for (int i = 0; i < n; ++i) m[i] = lo[i];
  while (true) {
    bool inside = true;
    for (Eigen::Index j = 0; j < U.rows() && inside; ++j) {
      std::int64_t s = k;
      for (int i = 0; i < n; ++i) s += U(j, i) * m[i];
      if (s < 0) inside = false;
    }
    if (inside) {
      ++count;
      for (int i = 0; i < n; ++i) coord_sum[i] += m[i];
    }
    int axis = n - 1;
    while (axis >= 0 && m[axis] == hi[axis]) {
      m[axis] = lo[axis];
      --axis;
    }
    if (axis < 0) break;
    ++m[axis];
  }
}

/** Least-squares fit y_k ~ A k^p + B k^(p-1) over the given k range. */
void fit_two_term(const std::vector<double>& y, int k_lo, int k_hi, int p, double& A, double& B) {
  long double s11 = 0, s12 = 0, s22 = 0, b1 = 0, b2 = 0;
  for (int k = k_lo; k <= k_hi; ++k) {
    const long double kp = powl(static_cast<long double>(k), p);
    const long double kq = kp / k;
    const long double yk = y[static_cast<std::size_t>(k)];
    s11 += kp * kp;
    s12 += kp * kq;
    s22 += kq * kq;
    b1 += yk * kp;
    b2 += yk * kq;
  }
  const long double det = s11 * s22 - s12 * s12;
  A = static_cast<double>((b1 * s22 - b2 * s12) / det);
  B = static_cast<double>((s11 * b2 - s12 * b1) / det);
}

}  // namespace

std::int64_t lattice_count(const FanoPolytope& P, int k) {
  if (k < 0) throw std::invalid_argument("lattice_count: k must be >= 0");
  std::int64_t count = 0;
  IntVector sum;
  scan_dilate(P, k, count, sum);
  return count;
}

Rat weight_sum(const FanoPolytope& P, const RatVector& c, int k) {
  if (c.size() != P.dim()) throw std::invalid_argument("field length does not match dimension");
  if (k < 0) throw std::invalid_argument("weight_sum: k must be >= 0");
  std::int64_t count = 0;
  IntVector sum;
  scan_dilate(P, k, count, sum);
  Rat w(0);
  for (int i = 0; i < P.dim(); ++i) w += c[i] * Rat(sum[i]);
  return w;
}

WeightSeries boundary_weight_series(const FanoPolytope& P, const RatVector& c, int k_max) {
  if (c.size() != P.dim()) throw std::invalid_argument("field length does not match dimension");
  if (k_max < 1) throw std::invalid_argument("boundary_weight_series: k_max must be >= 1");

  WeightSeries s;
  s.k_max = k_max;
  s.dims.resize(static_cast<std::size_t>(k_max) + 1);
  s.weights.resize(static_cast<std::size_t>(k_max) + 1);
  s.boundary_weights.assign(static_cast<std::size_t>(k_max) + 1, Rat(0));

  for (int k = 0; k <= k_max; ++k) {
    std::int64_t count = 0;
    IntVector sum;
    scan_dilate(P, k, count, sum);
    s.dims[static_cast<std::size_t>(k)] = count;
    Rat w(0);
    for (int i = 0; i < P.dim(); ++i) w += c[i] * Rat(sum[i]);
    s.weights[static_cast<std::size_t>(k)] = w;
  }

  // mu_max over the lattice points of P itself (k = 1).
  {
    bool first = true;
    const int n = P.dim();
    std::vector<std::int64_t> lo(n), hi(n);
    for (int i = 0; i < n; ++i) {
      Rat mn, mx;
      bool f2 = true;
      for (const RatVector& v : P.vertices()) {
        if (f2 || v[i] < mn) mn = v[i];
        if (f2 || v[i] > mx) mx = v[i];
        f2 = false;
      }
      lo[i] = ceil_rat(mn);
      hi[i] = floor_rat(mx);
    }
    std::vector<std::int64_t> m(n);
    for (int i = 0; i < n; ++i) m[i] = lo[i];
    while (true) {
      bool inside = true;
      for (Eigen::Index j = 0; j < P.facets().rows() && inside; ++j) {
        std::int64_t v = 1;
        for (int i = 0; i < n; ++i) v += P.facets()(j, i) * m[i];
        if (v < 0) inside = false;
      }
      if (inside) {
        Rat val(0);
        for (int i = 0; i < n; ++i) val += c[i] * Rat(m[i]);
        if (first || val > s.mu_max) s.mu_max = val;
        first = false;
      }
      int axis = n - 1;
      while (axis >= 0 && m[axis] == hi[axis]) {
        m[axis] = lo[axis];
        --axis;
      }
      if (axis < 0) break;
      ++m[axis];
    }
  }

  for (int k = 1; k <= k_max; ++k) {
    s.boundary_weights[static_cast<std::size_t>(k)] =
        s.weights[static_cast<std::size_t>(k)] - s.weights[static_cast<std::size_t>(k) - 1] -
        s.mu_max * Rat(s.dims[static_cast<std::size_t>(k) - 1]);
  }
  return s;
}

AsymptoticFit verify_inttheta_asymptotics(const FanoPolytope& P, const RatVector& c, int k_max) {
  if (k_max < 10)
    throw std::invalid_argument("verify_inttheta_asymptotics: k_max must be >= 10 for the fit");
  const WeightSeries s = boundary_weight_series(P, c, k_max);
  const int n = P.dim();

  std::vector<double> y(static_cast<std::size_t>(k_max) + 1, 0.0);
  for (int k = 1; k <= k_max; ++k)
    y[static_cast<std::size_t>(k)] = rational_to_double(s.boundary_weights[static_cast<std::size_t>(k)]);

  AsymptoticFit fit;
  fit.k_lo = k_max / 2;
  fit.k_hi = k_max;
  fit_two_term(y, fit.k_lo, fit.k_hi, n, fit.fitted_leading, fit.fitted_subleading);

  const Rat vol = volume(P);
  const Rat target = Rat(n + 1) * c.dot(barycenter(P)) * vol - s.mu_max * vol;
  fit.target = rational_to_double(target);
  const double denom = (fit.target != 0.0) ? std::abs(fit.target) : 1.0;
  fit.rel_gap = std::abs(fit.fitted_leading - fit.target) / denom;
  return fit;
}

RrFit verify_rr_asymptotics(const FanoPolytope& P, const RatVector& c, int k_max) {
  if (k_max < 10)
    throw std::invalid_argument("verify_rr_asymptotics: k_max must be >= 10 for the fit");
  const WeightSeries s = boundary_weight_series(P, c, k_max);
  const int n = P.dim();

  RrFit fit;
  fit.k_lo = k_max / 2;
  fit.k_hi = k_max;

  std::vector<double> dims(static_cast<std::size_t>(k_max) + 1, 0.0);
  std::vector<double> weights(static_cast<std::size_t>(k_max) + 1, 0.0);
  for (int k = 0; k <= k_max; ++k) {
    dims[static_cast<std::size_t>(k)] = static_cast<double>(s.dims[static_cast<std::size_t>(k)]);
    weights[static_cast<std::size_t>(k)] = rational_to_double(s.weights[static_cast<std::size_t>(k)]);
  }

  double sub = 0;
  fit_two_term(dims, fit.k_lo, fit.k_hi, n, fit.dims_leading, sub);
  fit_two_term(weights, fit.k_lo, fit.k_hi, n + 1, fit.weights_leading, sub);

  const Rat vol = volume(P);
  fit.dims_target = rational_to_double(vol);
  fit.dims_rel_gap = std::abs(fit.dims_leading - fit.dims_target) / fit.dims_target;

  const Rat wt = c.dot(barycenter(P)) * vol;  // \int_P c.x dx
  fit.weights_target = rational_to_double(wt);
  const double denom = (fit.weights_target != 0.0) ? std::abs(fit.weights_target)
                                                   : rational_to_double(vol);
  fit.weights_rel_gap = std::abs(fit.weights_leading - fit.weights_target) / denom;
  return fit;
}

}  // namespace polyfan
