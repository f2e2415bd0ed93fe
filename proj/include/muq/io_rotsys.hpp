/*
 * Dart-exact text interchange. One record per map:
 *
 *   n=<N> e=<E>
 *   1: a b ...
 *   ...
 *   N: ...
 *
 * Vertex lines run 1..N; tokens are edge identifiers in counterclockwise
 * rotation order, each appearing exactly twice in the record (twice on one
 * line for a loop). The two occurrences of a token are the two darts of that
 * edge, so parallel edges and loops reconstruct unambiguously. Records are
 * separated by blank lines.
 *
 * Emission is normalized: vertices, edge tokens and rotation starts follow
 * the canonical dart labeling, so emit(parse(emit(m))) == emit(m) and
 * isomorphic maps emit identical text.
 */
#ifndef MUQ_IO_ROTSYS_HPP
#define MUQ_IO_ROTSYS_HPP

#include <string>
#include <vector>

#include "muq/plane_map.hpp"

namespace muq {

std::vector<PlaneMap> parse_rotsys(const std::string& text);
std::string emit_rotsys(const std::vector<PlaneMap>& maps);

/// vertex_rank_out, when given, receives each internal vertex's 0-based
/// position in the emitted numbering.
std::string emit_rotsys_one(const PlaneMap& m, std::vector<int>* vertex_rank_out = nullptr);

} // namespace muq

#endif
