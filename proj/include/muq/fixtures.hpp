/*
 * Hand-encoded reference maps used across tests and verification runs.
 */
#ifndef MUQ_FIXTURES_HPP
#define MUQ_FIXTURES_HPP

#include <vector>

#include "muq/plane_map.hpp"

namespace muq::fixtures {

/// Simple-graph convenience builder: per-vertex neighbor lists in
/// counterclockwise order. Each unordered pair must occur exactly once on
/// each side, so the dart pairing is forced.
PlaneMap simple_from_neighbors(const std::vector<std::vector<int>>& neighbors);

PlaneMap k2();           // one edge
PlaneMap single_loop();  // one loop, two faces
PlaneMap p3_path();      // path on 3 vertices
PlaneMap tetrahedron();  // K4 in the plane, 4 triangle faces

PlaneMap p2();    // order-3 path as a MUQ: one face of length 4
PlaneMap c4();    // 4-cycle: two quad faces
PlaneMap q3();    // order-4 parallel MUQ, degrees (3,3,1,1)
PlaneMap q4();    // order-4 parallel MUQ, degrees (4,2,1,1)
PlaneMap cube();  // order-8 simple irreducible
PlaneMap f10();   // order-10 simple irreducible (rim of 8 plus two hubs)

} // namespace muq::fixtures

#endif
