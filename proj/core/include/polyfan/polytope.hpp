#ifndef POLYFAN_POLYTOPE_HPP
#define POLYFAN_POLYTOPE_HPP

#include <string>
#include <vector>

#include "polyfan/rational.hpp"

namespace polyfan {

/**
 * A full-dimensional bounded rational polytope given by facet inequalities
 *
 *     l_j(x) = u_j . x + 1 >= 0,        u_j integer row vectors,
 *
 * the normalized form in which the origin is an interior point and every
 * facet hyperplane sits at lattice distance one from it (the anticanonical
 * polytope of a toric Fano variety).  Construction validates the data:
 * boundedness, irredundancy of every facet, and well-formed normals; the
 * vertex set and facet incidences are computed eagerly and the object is
 * immutable afterwards, so concurrent reads are safe.
 */
class FanoPolytope {
 public:
  /**
   * @param dim     ambient dimension n >= 1
   * @param facets  one integer row of length n per facet inequality
   * @param name    optional display name
   * @throws std::invalid_argument  on empty/ill-sized facet data
   * @throws std::domain_error      if the inequalities bound no polytope
   *                                (unbounded) or a facet is redundant
   */
  FanoPolytope(int dim, IntMatrix facets, std::string name = "");

  int dim() const { return static_cast<int>(facets_.cols()); }
  int facet_count() const { return static_cast<int>(facets_.rows()); }
  const IntMatrix& facets() const { return facets_; }
  IntVector facet_normal(int j) const { return facets_.row(j).transpose(); }
  const std::string& name() const { return name_; }

  /** Vertices in lexicographic order (exact rational coordinates). */
  const std::vector<RatVector>& vertices() const { return vertices_; }

  /** Indices of the vertices lying on facet j, ascending. */
  const std::vector<int>& facet_vertices(int j) const { return incidence_[j]; }

  /** l_j(x) = u_j . x + 1, exact. */
  Rat facet_value(int j, const RatVector& x) const;

  /** True iff l_j(x) >= 0 for all j (closed polytope membership), exact. */
  bool contains(const RatVector& x) const;

 private:
  IntMatrix facets_;  // one row per facet normal u_j
  std::string name_;
  std::vector<RatVector> vertices_;
  std::vector<std::vector<int>> incidence_;

  void validate_and_build();
};

/** Vertex list of P, lexicographically ordered. */
const std::vector<RatVector>& enumerate_vertices(const FanoPolytope& P);

/** A d-simplex stored as d+1 exact vertices. */
struct Simplex {
  std::vector<RatVector> vertices;

  /** |det(v_1 - v_0, ..., v_n - v_0)| / n! — exact Euclidean volume. */
  Rat volume() const;

  /** Vertex average, exact. */
  RatVector centroid() const;
};

/**
 * A simplicial decomposition of P into full-dimensional simplices, each
 * containing the origin as a vertex, obtained by recursively coning facets
 * from their lexicographically least vertex.  Deterministic: simplices and
 * their vertex lists are in lexicographic order.
 */
struct Triangulation {
  std::vector<Simplex> simplices;

  Rat total_volume() const;
};

Triangulation triangulate(const FanoPolytope& P);

/** Exact Euclidean volume of P. */
Rat volume(const FanoPolytope& P);

/** Exact barycenter P_C = (1/Vol P) * \int_P x dx. */
RatVector barycenter(const FanoPolytope& P);

/** max_{x in P} c . x, attained at a vertex; exact. */
Rat support_max(const FanoPolytope& P, const RatVector& c);

/** Floating-point convenience overload of support_max. */
double support_max(const FanoPolytope& P, const Eigen::VectorXd& c);

/**
 * Parse a polytope document:
 *
 *   { "name": "BlP2", "dim": 2, "facets": [[1,0],[0,1],[-1,-1],[1,1]] }
 *
 * `facets` must be non-empty rows of exactly `dim` integers each (floats are
 * rejected; normals must be bit-exact).  `name` is optional.
 * @throws std::invalid_argument on malformed documents
 * @throws std::domain_error     if the polytope fails validation
 */
FanoPolytope parse_polytope(const std::string& json_text);

/** Read and parse a polytope document from a file path. */
FanoPolytope parse_polytope_file(const std::string& path);

/** Serialize P back to its canonical document form. */
std::string polytope_document(const FanoPolytope& P);

}  // namespace polyfan

#endif
