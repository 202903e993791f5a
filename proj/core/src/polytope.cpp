#include "polyfan/polytope.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace polyfan {

namespace {

bool lex_less(const RatVector& a, const RatVector& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

RatMatrix rows_to_rat(const IntMatrix& facets, const std::vector<int>& rows) {
  RatMatrix M(static_cast<Eigen::Index>(rows.size()), facets.cols());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (Eigen::Index c = 0; c < facets.cols(); ++c)
      M(static_cast<Eigen::Index>(r), c) = Rat(facets(rows[r], c));
  return M;
}

int rat_rank(const RatMatrix& M) {
  if (M.rows() == 0 || M.cols() == 0) return 0;
  return static_cast<int>(Eigen::FullPivLU<RatMatrix>(M).rank());
}

/** Affine rank of a point set (dimension of its affine hull). */
int affine_rank(const std::vector<RatVector>& pts, const std::vector<int>& idx) {
  if (idx.size() <= 1) return 0;
  RatMatrix D(static_cast<Eigen::Index>(idx.size()) - 1, pts[idx[0]].size());
  for (std::size_t i = 1; i < idx.size(); ++i)
    D.row(static_cast<Eigen::Index>(i) - 1) = (pts[idx[i]] - pts[idx[0]]).transpose();
  return rat_rank(D);
}

/** Visit all k-subsets of {0..m-1}. */
template <typename F>
void for_each_subset(int m, int k, F&& visit) {
  if (k > m || k < 0) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(static_cast<const std::vector<int>&>(idx));
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == m - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
}

}  // namespace

FanoPolytope::FanoPolytope(int dim, IntMatrix facets, std::string name)
    : facets_(std::move(facets)), name_(std::move(name)) {
  if (dim < 1) throw std::invalid_argument("polytope dimension must be >= 1");
  if (facets_.rows() < 1) throw std::invalid_argument("polytope needs at least one facet");
  if (facets_.cols() != dim)
    throw std::invalid_argument("facet normal length does not match dimension");
  validate_and_build();
}

Rat FanoPolytope::facet_value(int j, const RatVector& x) const {
  Rat v(1);
  for (Eigen::Index c = 0; c < facets_.cols(); ++c) v += Rat(facets_(j, c)) * x[c];
  return v;
}

bool FanoPolytope::contains(const RatVector& x) const {
  for (int j = 0; j < facet_count(); ++j)
    if (facet_value(j, x) < 0) return false;
  return true;
}

void FanoPolytope::validate_and_build() {
  const int n = static_cast<int>(facets_.cols());
  const int m = static_cast<int>(facets_.rows());

  // Exact duplicate normals define the same facet twice.
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (facets_.row(i) == facets_.row(j))
        throw std::domain_error("redundant facet: normals " + std::to_string(i) + " and " +
                                std::to_string(j) + " are identical");

  // If the normals do not span R^n the polytope contains a line.
  {
    std::vector<int> all(m);
    for (int j = 0; j < m; ++j) all[j] = j;
    if (rat_rank(rows_to_rat(facets_, all)) < n)
      throw std::domain_error("unbounded polytope: facet normals do not span the space");
  }

  // Recession-cone scan: any direction d with u_j . d >= 0 for all j is a
  // recession ray.  Extreme rays of the (pointed) recession cone lie in the
  // kernel of some (n-1)-subset of normals of rank n-1, so scanning those
  // kernels decides boundedness exactly.
  {
    auto is_recession = [&](const RatVector& d) {
      bool plus = true, minus = true;
      for (int j = 0; j < m && (plus || minus); ++j) {
        Rat s(0);
        for (int c = 0; c < n; ++c) s += Rat(facets_(j, c)) * d[c];
        if (s < 0) plus = false;
        if (s > 0) minus = false;
      }
      return plus || minus;
    };
    if (n == 1) {
      RatVector d(1);
      d[0] = 1;
      if (is_recession(d)) throw std::domain_error("unbounded polytope");
    } else {
      bool unbounded = false;
      for_each_subset(m, n - 1, [&](const std::vector<int>& idx) {
        if (unbounded) return;
        RatMatrix M = rows_to_rat(facets_, idx);
        Eigen::FullPivLU<RatMatrix> lu(M);
        if (static_cast<int>(lu.rank()) != n - 1) return;
        RatMatrix K = lu.kernel();  // n x 1 exact kernel direction
        RatVector d = K.col(0);
        if (is_recession(d)) unbounded = true;
      });
      if (unbounded) throw std::domain_error("unbounded polytope");
    }
  }

  // Vertex enumeration: solve every n-subset of facet equalities u . x = -1
  // and keep the feasible solutions.
  std::vector<RatVector> verts;
  for_each_subset(m, n, [&](const std::vector<int>& idx) {
    RatMatrix U = rows_to_rat(facets_, idx);
    Eigen::FullPivLU<RatMatrix> lu(U);
    if (!lu.isInvertible()) return;
    RatVector rhs = RatVector::Constant(n, Rat(-1));
    RatVector x = lu.solve(rhs);
    for (int j = 0; j < m; ++j) {
      Rat v(1);
      for (int c = 0; c < n; ++c) v += Rat(facets_(j, c)) * x[c];
      if (v < 0) return;
    }
    for (const RatVector& w : verts)
      if (w == x) return;
    verts.push_back(std::move(x));
  });
  if (verts.empty()) throw std::domain_error("degenerate polytope: no vertices found");
  std::sort(verts.begin(), verts.end(), lex_less);
  vertices_ = std::move(verts);

  // Facet incidence; every facet must carry an (n-1)-dimensional face, else
  // the inequality is redundant.
  incidence_.assign(m, {});
  for (int j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      if (facet_value(j, vertices_[i]) == 0) incidence_[j].push_back(static_cast<int>(i));
    if (affine_rank(vertices_, incidence_[j]) != n - 1)
      throw std::domain_error("redundant facet: inequality " + std::to_string(j) +
                              " does not support a facet of the polytope");
  }
}

const std::vector<RatVector>& enumerate_vertices(const FanoPolytope& P) { return P.vertices(); }

Rat Simplex::volume() const {
  const Eigen::Index n = vertices[0].size();
  if (static_cast<Eigen::Index>(vertices.size()) != n + 1)
    throw std::invalid_argument("simplex vertex count does not match dimension");
  RatMatrix E(n, n);
  for (Eigen::Index c = 0; c < n; ++c) E.col(c) = vertices[c + 1] - vertices[0];
  Rat det = Eigen::FullPivLU<RatMatrix>(E).determinant();
  if (det < 0) det = -det;
  Rat nfact(1);
  for (Eigen::Index k = 2; k <= n; ++k) nfact *= Rat(k);
  return det / nfact;
}

RatVector Simplex::centroid() const {
  RatVector c = RatVector::Constant(vertices[0].size(), Rat(0));
  for (const RatVector& v : vertices) c += v;
  return c / Rat(static_cast<int>(vertices.size()));
}

Rat Triangulation::total_volume() const {
  Rat total(0);
  for (const Simplex& s : simplices) total += s.volume();
  return total;
}

namespace {

/**
 * Triangulate the face of P spanned by vertex indices `face` (ascending,
 * hence lexicographic) by coning from its least vertex over its subfaces.
 * Returns simplices as ascending index lists.
 */
std::vector<std::vector<int>> triangulate_face(const FanoPolytope& P,
                                               const std::vector<int>& face) {
  const int d = affine_rank(P.vertices(), face);
  if (static_cast<int>(face.size()) == d + 1) return {face};

  const int v0 = face[0];
  std::set<std::vector<int>> subfaces;
  for (int j = 0; j < P.facet_count(); ++j) {
    std::vector<int> cut;
    const std::vector<int>& on_j = P.facet_vertices(j);
    std::set_intersection(face.begin(), face.end(), on_j.begin(), on_j.end(),
                          std::back_inserter(cut));
    if (cut.size() == face.size()) continue;  // facet contains the whole face
    if (std::binary_search(cut.begin(), cut.end(), v0)) continue;
    if (affine_rank(P.vertices(), cut) != d - 1) continue;
    subfaces.insert(std::move(cut));
  }

  std::vector<std::vector<int>> out;
  for (const std::vector<int>& g : subfaces) {
    for (std::vector<int> s : triangulate_face(P, g)) {
      s.insert(s.begin(), v0);
      std::sort(s.begin(), s.end());
      out.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace

Triangulation triangulate(const FanoPolytope& P) {
  const int n = P.dim();
  const RatVector origin = RatVector::Constant(n, Rat(0));

  std::vector<Simplex> simplices;
  for (int j = 0; j < P.facet_count(); ++j) {
    for (const std::vector<int>& s : triangulate_face(P, P.facet_vertices(j))) {
      Simplex simplex;
      simplex.vertices.reserve(s.size() + 1);
      simplex.vertices.push_back(origin);
      for (int i : s) simplex.vertices.push_back(P.vertices()[i]);
      std::sort(simplex.vertices.begin(), simplex.vertices.end(), lex_less);
      simplices.push_back(std::move(simplex));
    }
  }
  std::sort(simplices.begin(), simplices.end(), [](const Simplex& a, const Simplex& b) {
    for (std::size_t i = 0; i < a.vertices.size() && i < b.vertices.size(); ++i) {
      if (a.vertices[i] != b.vertices[i]) return lex_less(a.vertices[i], b.vertices[i]);
    }
    return a.vertices.size() < b.vertices.size();
  });
  return Triangulation{std::move(simplices)};
}

Rat volume(const FanoPolytope& P) { return triangulate(P).total_volume(); }

RatVector barycenter(const FanoPolytope& P) {
  const Triangulation T = triangulate(P);
  RatVector moment = RatVector::Constant(P.dim(), Rat(0));
  Rat vol(0);
  for (const Simplex& s : T.simplices) {
    const Rat v = s.volume();
    moment += v * s.centroid();
    vol += v;
  }
  return moment / vol;
}

Rat support_max(const FanoPolytope& P, const RatVector& c) {
  if (c.size() != P.dim()) throw std::invalid_argument("direction length does not match dimension");
  Rat best;
  bool first = true;
  for (const RatVector& v : P.vertices()) {
    Rat s = c.dot(v);
    if (first || s > best) {
      best = std::move(s);
      first = false;
    }
  }
  return best;
}

double support_max(const FanoPolytope& P, const Eigen::VectorXd& c) {
  if (c.size() != P.dim()) throw std::invalid_argument("direction length does not match dimension");
  double best = -std::numeric_limits<double>::infinity();
  for (const RatVector& v : P.vertices()) {
    double s = 0;
    for (Eigen::Index i = 0; i < c.size(); ++i) s += c[i] * rational_to_double(v[i]);
    best = std::max(best, s);
  }
  return best;
}

FanoPolytope parse_polytope(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed polytope document: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("malformed polytope document: not an object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer())
    throw std::invalid_argument("malformed polytope document: missing integer field 'dim'");
  const long long dim = doc["dim"].get<long long>();
  if (dim < 1 || dim > 16)
    throw std::invalid_argument("malformed polytope document: 'dim' out of range");
  if (!doc.contains("facets") || !doc["facets"].is_array() || doc["facets"].empty())
    throw std::invalid_argument("malformed polytope document: missing non-empty array 'facets'");

  const auto& rows = doc["facets"];
  IntMatrix facets(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(dim));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].is_array() || rows[r].size() != static_cast<std::size_t>(dim))
      throw std::invalid_argument("malformed polytope document: facet " + std::to_string(r) +
                                  " does not have exactly 'dim' entries");
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (!rows[r][c].is_number_integer())
        throw std::invalid_argument("malformed polytope document: facet " + std::to_string(r) +
                                    " entry " + std::to_string(c) + " is not an integer");
      facets(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          rows[r][c].get<std::int64_t>();
    }
  }

  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string())
      throw std::invalid_argument("malformed polytope document: 'name' must be a string");
    name = doc["name"].get<std::string>();
  }
  return FanoPolytope(static_cast<int>(dim), std::move(facets), std::move(name));
}

FanoPolytope parse_polytope_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read polytope file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_polytope(buf.str());
}

std::string polytope_document(const FanoPolytope& P) {
  nlohmann::ordered_json doc;
  if (!P.name().empty()) doc["name"] = P.name();
  doc["dim"] = P.dim();
  std::vector<std::vector<std::int64_t>> rows;
  for (int j = 0; j < P.facet_count(); ++j) {
    std::vector<std::int64_t> row(P.dim());
    for (int c = 0; c < P.dim(); ++c) row[c] = P.facets()(j, c);
    rows.push_back(std::move(row));
  }
  doc["facets"] = rows;
  return doc.dump();
}

}  // namespace polyfan
