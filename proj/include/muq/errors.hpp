#ifndef MUQ_ERRORS_HPP
#define MUQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace muq {

enum class MapErrc {
    not_connected,
    not_genus_zero,
    malformed_pairing,
    unknown_vertex,
    disconnected_result,
    corners_not_on_same_face,
    not_a_quadrangulation,
    multiple_marked_edges,
    low_degree_interior,
    not_parallel,
    result_not_half,
    bridge_marked_edge,
    invalid_half,
    order_too_large_for_oracle,
    unknown_predicate,
    bad_header,
    truncated_record,
    ambiguous_multiedge_pairing,
    non_planar_pairing,
    syntax_error,
    inconsistent_incidence,
};

const char* errc_name(MapErrc c);

class MapError : public std::runtime_error {
public:
    MapError(MapErrc c, const std::string& msg)
        : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}

    MapErrc code() const { return code_; }

private:
    MapErrc code_;
};

} // namespace muq

#endif
