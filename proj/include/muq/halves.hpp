/*
 * Halves and the doubling construction.
 *
 * A half is a MUQ with two marked adjacent vertices joined by exactly one
 * edge, every other vertex of degree >= 3. Extracting a half from a parallel
 * MUQ keeps one region of a parallel class plus the marked pair; doubling
 * glues a half to a half-turned clone of itself along the marked edge and
 * duplicates that edge, yielding a parallel MUQ of order 2n-2 that is
 * irreducible whenever the half is one.
 */
#ifndef MUQ_HALVES_HPP
#define MUQ_HALVES_HPP

#include <optional>
#include <vector>

#include "muq/map_edit.hpp"
#include "muq/plane_map.hpp"

namespace muq {

struct Half {
    PlaneMap map;
    int v = -1, w = -1;
    int marked_edge = -1;
};

/// Checks the three half conditions. Throws NotAQuadrangulation,
/// MultipleMarkedEdges, LowDegreeInterior, or InvalidHalf (not adjacent).
Half validate_half(const PlaneMap& m, int v, int w);

/// Keeps the chosen region (fewest interior vertices by default, ties to the
/// lowest region index) plus the marked pair, and deletes every class edge
/// except the one opening that region in rotation order at cls.v. Throws
/// ResultNotHalf when the trimmed map violates the half conditions, which
/// happens exactly when the input was not irreducible.
Half extract_half(const PlaneMap& g, const ParallelClass& cls,
                  std::optional<int> region = {});

/// Doubles across one of the two faces at the marked edge: side 0 glues
/// along the face right of dart 2*marked_edge, side 1 along the other.
/// Throws BridgeMarkedEdge when both sides are the same face. The result
/// swaps its two copies under an order-2 symmetry, and each merged marked
/// vertex ends with degree deg(v) + deg(w).
PlaneMap double_half(const Half& f, int side);

/// Every marked pair making q a half, one per orbit of q's automorphisms,
/// ordered by marked-edge canonical code.
std::vector<Half> halves_of(const PlaneMap& q);

} // namespace muq

#endif
