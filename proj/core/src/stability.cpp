#include "polyfan/stability.hpp"

#include <stdexcept>

namespace polyfan {

namespace {

RatVector rat_normal(const FanoPolytope& P, int j) {
  RatVector u(P.dim());
  for (int c = 0; c < P.dim(); ++c) u[c] = Rat(P.facets()(j, c));
  return u;
}

}  // namespace

StabilityReport greatest_ricci_lower_bound(const FanoPolytope& P) {
  StabilityReport rep;
  rep.barycenter = barycenter(P);

  bool origin = true;
  for (Eigen::Index i = 0; i < rep.barycenter.size(); ++i)
    if (rep.barycenter[i] != 0) origin = false;
  if (origin) {
    rep.R = Rat(1);
    return rep;
  }

  // M = max_j u_j . P_C is the support value of the dual body at P_C; it is
  // strictly positive because the origin is interior to the dual.
  Rat M;
  bool first = true;
  for (int j = 0; j < P.facet_count(); ++j) {
    const Rat s = rat_normal(P, j).dot(rep.barycenter);
    if (first || s > M) {
      M = s;
      first = false;
    }
  }
  for (int j = 0; j < P.facet_count(); ++j)
    if (rat_normal(P, j).dot(rep.barycenter) == M) rep.tied_critical_facets.push_back(j);

  rep.critical_facet = rep.tied_critical_facets.front();
  rep.R = Rat(1) / (Rat(1) + M);
  rep.destabilizer = RatVector(-rat_normal(P, *rep.critical_facet));
  rep.exit_point = RatVector(-rep.barycenter / M);
  return rep;
}

Rat twisted_futaki(const FanoPolytope& P, const Rat& t, const RatVector& c) {
  if (c.size() != P.dim()) throw std::invalid_argument("field length does not match dimension");
  return t * c.dot(barycenter(P)) + (Rat(1) - t) * support_max(P, c);
}

double twisted_futaki(const FanoPolytope& P, double t, const Eigen::VectorXd& c) {
  if (c.size() != P.dim()) throw std::invalid_argument("field length does not match dimension");
  const Eigen::VectorXd pc = to_double_vector(barycenter(P));
  return t * c.dot(pc) + (1.0 - t) * support_max(P, c);
}

std::optional<RatVector> destabilizer(const FanoPolytope& P, const Rat& t) {
  const StabilityReport rep = greatest_ricci_lower_bound(P);
  if (t <= rep.R || !rep.destabilizer) return std::nullopt;
  return rep.destabilizer;
}

bool claim_inequality_check(const FanoPolytope& P, const RatVector& c) {
  if (c.size() != P.dim()) throw std::invalid_argument("field length does not match dimension");
  bool zero = true;
  for (Eigen::Index i = 0; i < c.size(); ++i)
    if (c[i] != 0) zero = false;
  if (zero) throw std::invalid_argument("claim_inequality_check: c must be nonzero");

  const StabilityReport rep = greatest_ricci_lower_bound(P);
  const Rat lhs_num = c.dot(rep.barycenter);
  const Rat m = support_max(P, c);  // > 0 since the origin is interior
  const Rat rhs = Rat(1) - Rat(1) / rep.R;
  return lhs_num >= rhs * m;
}

bool claim_inequality_check(const FanoPolytope& P, const Eigen::VectorXd& c, double tol) {
  if (c.size() != P.dim()) throw std::invalid_argument("field length does not match dimension");
  if (c.norm() == 0) throw std::invalid_argument("claim_inequality_check: c must be nonzero");
  const StabilityReport rep = greatest_ricci_lower_bound(P);
  const double lhs = c.dot(to_double_vector(rep.barycenter)) / support_max(P, c);
  const double rhs = 1.0 - 1.0 / rational_to_double(rep.R);
  return lhs >= rhs - tol;
}

}  // namespace polyfan
