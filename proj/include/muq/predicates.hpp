/*
 * Structural predicates for multiquadrangulations (MUQs): loopless connected
 * plane maps whose every face walk has length 4, repeated edges allowed.
 */
#ifndef MUQ_PREDICATES_HPP
#define MUQ_PREDICATES_HPP

#include "muq/plane_map.hpp"

namespace muq {

bool is_quadrangulation(const PlaneMap& m);

/// Quadrangulation with no parallel edges and no face walk using an edge twice.
bool is_simple_quadrangulation(const PlaneMap& m);

/// Minimum degree 3, or isomorphic to the order-3 path with its single
/// length-4 face. Throws NotAQuadrangulation on other inputs.
bool is_irreducible(const PlaneMap& m);

/// deg(x) + deg(y) >= 3 on every edge. Throws NotAQuadrangulation.
bool adjacent_degree_check(const PlaneMap& m);

} // namespace muq

#endif
