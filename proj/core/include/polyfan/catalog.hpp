#ifndef POLYFAN_CATALOG_HPP
#define POLYFAN_CATALOG_HPP

#include <string>
#include <vector>

#include "polyfan/polytope.hpp"

namespace polyfan {

/** Names of the built-in anticanonical polytopes, in catalog order. */
const std::vector<std::string>& catalog_names();

/**
 * Built-in polytope by name (see catalog_names): the toric del Pezzo
 * surfaces P2, BlP2, Bl2P2, Bl3P2, P1xP1, the segment P1, and the
 * threefolds P3, P1xP1xP1, BlP3.
 * @throws std::invalid_argument for unknown names
 */
const FanoPolytope& catalog_polytope(const std::string& name);

}  // namespace polyfan

#endif
