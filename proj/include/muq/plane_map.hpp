/*
 * Dart-based combinatorial maps of connected plane (genus-0) multigraphs.
 *
 * Conventions, fixed once for the whole project:
 *   - Darts are dense ints 0..2e-1; the two darts of edge i are 2i and 2i+1,
 *     so alpha(d) = d ^ 1 and edge_of(d) = d >> 1.
 *   - sigma(d) is the next dart counterclockwise around the vertex of d.
 *   - Faces are the orbits of phi(d) = sigma(alpha(d)) ("first alpha, then
 *     sigma"). With sigma counterclockwise, the face of an orbit lies on the
 *     RIGHT of each of its darts.
 *   - The corner of a face at the passage of dart d of its orbit is the
 *     angular sector from sigma^-1(d) counterclockwise to d. Editing
 *     operations that take "corner" arguments take the dart d and mean that
 *     sector.
 *
 * Maps are immutable after construction; every editing operation returns a
 * new map. Loops and parallel edges are representable. The one-vertex map
 * with no edges is valid (the enumeration seed).
 */
#ifndef MUQ_PLANE_MAP_HPP
#define MUQ_PLANE_MAP_HPP

#include <utility>
#include <vector>

#include "muq/errors.hpp"

namespace muq {

using Dart = int;

/// Construction input: per-vertex counterclockwise dart lists plus the edge
/// pairing. Dart identifiers may be any distinct non-negative ints.
struct RotationData {
    std::vector<std::vector<int>> rotations;     // index = vertex
    std::vector<std::pair<int, int>> pairing;    // one entry per edge
};

struct FaceSet {
    std::vector<int> face_of;                 // dart -> face index
    std::vector<std::vector<Dart>> walks;     // face index -> boundary darts in phi order
};

class PlaneMap {
public:
    /// The one-vertex, zero-edge map (f = 1).
    static PlaneMap single_vertex();

    /// Validates pairing shape, connectivity and genus.
    /// Throws MalformedPairing / NotConnected / NotGenusZero.
    static PlaneMap from_rotation(const RotationData& data);

    /// Trusted constructor for internal surgery; validates only in debug.
    /// sigma/vertex_of are over the final dart numbering (mate = XOR 1).
    static PlaneMap from_parts(int vertex_count, std::vector<int> sigma,
                               std::vector<int> vertex_of);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(sigma_.size()) / 2; }
    int dart_count() const { return static_cast<int>(sigma_.size()); }
    int face_count() const;

    Dart sigma(Dart d) const { return sigma_[d]; }
    Dart sigma_inv(Dart d) const;
    Dart alpha(Dart d) const { return d ^ 1; }
    Dart phi(Dart d) const { return sigma_[d ^ 1]; }
    int edge_of(Dart d) const { return d >> 1; }
    int vertex_of(Dart d) const { return vertex_[d]; }
    std::pair<int, int> endpoints(int edge) const {
        return {vertex_[2 * edge], vertex_[2 * edge + 1]};
    }
    bool is_loop_edge(int edge) const {
        return vertex_[2 * edge] == vertex_[2 * edge + 1];
    }
    bool has_loop() const;

    int degree(int v) const;      // loops count twice; throws UnknownVertex
    int min_degree() const;
    /// First dart of v's rotation (construction order); -1 if isolated.
    Dart first_dart(int v) const;
    /// v's darts in counterclockwise order starting at first_dart(v).
    std::vector<Dart> darts_at(int v) const;

    /// Face orbits in order of their smallest unvisited dart; sum of walk
    /// lengths is 2e.
    FaceSet faces() const;

    const std::vector<int>& sigma_table() const { return sigma_; }
    const std::vector<int>& vertex_table() const { return vertex_; }

    /// Structural check of all invariants (permutation shape, connectivity,
    /// Euler count). Used by tests and debug assertions.
    void validate() const;

private:
    PlaneMap() = default;

    int n_ = 0;
    std::vector<int> sigma_;
    std::vector<int> vertex_;
    std::vector<int> vfirst_;   // vertex -> first dart, -1 if none
    std::vector<int> vdeg_;

    void build_vertex_tables(const std::vector<std::vector<int>>* rotation_order);
    friend PlaneMap assemble_map(int, const std::vector<std::vector<int>>&,
                                 const std::vector<int>&, bool);
};

/// Rebuilds a map from rotation lists over arbitrary dart ids and a mate
/// array (mate[mate[d]] == d, mate[d] != d). Darts are renumbered densely:
/// edges in order of first appearance, first-seen dart even.
PlaneMap assemble_map(int vertex_count, const std::vector<std::vector<int>>& rotations,
                      const std::vector<int>& mate, bool run_validation);

} // namespace muq

#endif
