/*
 * Surgery on plane maps. All operations return new maps; vertex ids are
 * preserved except where noted, dart and edge ids are renumbered.
 */
#ifndef MUQ_MAP_EDIT_HPP
#define MUQ_MAP_EDIT_HPP

#include <optional>
#include <span>
#include <vector>

#include "muq/plane_map.hpp"

namespace muq {

/// Vertex/face roles swapped: sigma* = phi, alpha unchanged. Involution on
/// the nose: dual(dual(m)) has the same tables as m up to renumbering.
PlaneMap dual(const PlaneMap& m);

/// Removes the given edges. Throws DisconnectedResult if the rest does not
/// stay connected (this also covers stranded vertices). Face merge rule:
/// each deleted edge joins its two sides into one walk of length
/// len_a + len_b - 2.
PlaneMap delete_edges(const PlaneMap& m, std::span<const int> edges);

/// New edge between the corners preceding darts at1 and at2, which must lie
/// on the same face walk (CornersNotOnSameFace otherwise); splits that face.
/// at1 == at2 attaches a loop inside the single corner.
PlaneMap add_edge_in_face(const PlaneMap& m, Dart at1, Dart at2);

/// New degree-1 vertex attached in the corner preceding dart at.
PlaneMap add_pendant(const PlaneMap& m, Dart at);

struct Submap {
    PlaneMap map;
    std::vector<int> vertex_to_sub;   // original vertex -> new id, -1 if dropped
    std::vector<int> edge_to_sub;     // original edge -> new id, -1 if dropped
};

/// Keeps exactly the edges with both endpoints in `vertices`; rotations are
/// the originals restricted to kept darts. Throws DisconnectedResult.
Submap induced_embedded_submap_indexed(const PlaneMap& m, std::span<const int> vertices);
PlaneMap induced_embedded_submap(const PlaneMap& m, std::span<const int> vertices);

/// All k >= 2 edges joining one vertex pair, with the k regions they cut the
/// sphere into. Edges are listed in counterclockwise order around v starting
/// at the class dart with the smallest id; region i lies between edges[i]
/// and edges[(i+1) % k] and records the vertices strictly inside it.
struct ParallelClass {
    int v = -1, w = -1;                            // v < w
    std::vector<int> edges;
    std::vector<std::vector<int>> region_interiors; // sorted vertex ids
};

/// Classes in increasing (v, w) order. In a quadrangulation every region
/// interior is nonempty (an empty region would force a digon face).
std::vector<ParallelClass> parallel_classes(const PlaneMap& m);

} // namespace muq

#endif
