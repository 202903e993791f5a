#include "polyfan/catalog.hpp"

#include <map>
#include <stdexcept>

namespace polyfan {

namespace {

FanoPolytope make(const std::string& name, int dim,
                  std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  IntMatrix facets(static_cast<Eigen::Index>(rows.size()), dim);
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    Eigen::Index c = 0;
    for (std::int64_t v : row) facets(r, c++) = v;
    ++r;
  }
  return FanoPolytope(dim, std::move(facets), name);
}

const std::map<std::string, FanoPolytope>& catalog() {
  static const std::map<std::string, FanoPolytope> entries = [] {
    std::map<std::string, FanoPolytope> m;
    m.emplace("P1", make("P1", 1, {{1}, {-1}}));
    m.emplace("P2", make("P2", 2, {{1, 0}, {0, 1}, {-1, -1}}));
    m.emplace("P1xP1", make("P1xP1", 2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}));
    m.emplace("BlP2", make("BlP2", 2, {{1, 0}, {0, 1}, {-1, -1}, {1, 1}}));
    m.emplace("Bl2P2", make("Bl2P2", 2, {{1, 0}, {0, 1}, {-1, -1}, {1, 1}, {-1, 0}}));
    m.emplace("Bl3P2", make("Bl3P2", 2, {{1, 0}, {0, 1}, {-1, -1}, {1, 1}, {-1, 0}, {0, -1}}));
    m.emplace("P3", make("P3", 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}));
    m.emplace("P1xP1xP1", make("P1xP1xP1", 3,
                               {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, 0, 0}, {0, -1, 0}, {0, 0, -1}}));
    m.emplace("BlP3", make("BlP3", 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}, {1, 1, 1}}));
    return m;
  }();
  return entries;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "P1", "P2", "P1xP1", "BlP2", "Bl2P2", "Bl3P2", "P3", "P1xP1xP1", "BlP3"};
  return names;
}

const FanoPolytope& catalog_polytope(const std::string& name) {
  const auto& m = catalog();
  const auto it = m.find(name);
  if (it == m.end()) throw std::invalid_argument("unknown catalog polytope: '" + name + "'");
  return it->second;
}

}  // namespace polyfan
