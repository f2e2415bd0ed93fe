/*
 * planar_code binary interchange: 15-byte header ">>planar_code<<", then per
 * graph one byte n (n <= 255) followed by each vertex's neighbor list in
 * clockwise order, 1-based, 0-terminated.
 *
 * The format stores neighbor lists, not darts, so with parallel edges or
 * loops the dart pairing must be reconstructed. Import searches all pairings
 * and keeps the genus-0 completions up to isomorphism: a single class is
 * returned; with several classes, a sole all-quadrilateral one wins (the
 * format's primary use is quadrangulation interchange); otherwise the record
 * is rejected as ambiguous. Faithful multigraph interchange belongs to the
 * rotsys format.
 */
#ifndef MUQ_IO_PLANAR_CODE_HPP
#define MUQ_IO_PLANAR_CODE_HPP

#include <string>
#include <vector>

#include "muq/plane_map.hpp"

namespace muq {

std::vector<PlaneMap> parse_planar_code(const std::string& bytes);
std::string emit_planar_code(const std::vector<PlaneMap>& maps);

} // namespace muq

#endif
