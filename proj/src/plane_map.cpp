#include "muq/plane_map.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace muq {

const char* errc_name(MapErrc c) {
    switch (c) {
        case MapErrc::not_connected: return "NotConnected";
        case MapErrc::not_genus_zero: return "NotGenusZero";
        case MapErrc::malformed_pairing: return "MalformedPairing";
        case MapErrc::unknown_vertex: return "UnknownVertex";
        case MapErrc::disconnected_result: return "DisconnectedResult";
        case MapErrc::corners_not_on_same_face: return "CornersNotOnSameFace";
        case MapErrc::not_a_quadrangulation: return "NotAQuadrangulation";
        case MapErrc::multiple_marked_edges: return "MultipleMarkedEdges";
        case MapErrc::low_degree_interior: return "LowDegreeInterior";
        case MapErrc::not_parallel: return "NotParallel";
        case MapErrc::result_not_half: return "ResultNotHalf";
        case MapErrc::bridge_marked_edge: return "BridgeMarkedEdge";
        case MapErrc::invalid_half: return "InvalidHalf";
        case MapErrc::order_too_large_for_oracle: return "OrderTooLargeForOracle";
        case MapErrc::unknown_predicate: return "UnknownPredicate";
        case MapErrc::bad_header: return "BadHeader";
        case MapErrc::truncated_record: return "TruncatedRecord";
        case MapErrc::ambiguous_multiedge_pairing: return "AmbiguousMultiedgePairing";
        case MapErrc::non_planar_pairing: return "NonPlanarPairing";
        case MapErrc::syntax_error: return "SyntaxError";
        case MapErrc::inconsistent_incidence: return "InconsistentIncidence";
    }
    return "MapError";
}

PlaneMap PlaneMap::single_vertex() {
    PlaneMap m;
    m.n_ = 1;
    m.vfirst_ = {-1};
    m.vdeg_ = {0};
    return m;
}

PlaneMap assemble_map(int vertex_count, const std::vector<std::vector<int>>& rotations,
                      const std::vector<int>& mate, bool run_validation) {
    // Renumber darts: scan vertices in order, rotations in list order; an
    // edge gets the next id when its first dart is seen.
    const int id_space = static_cast<int>(mate.size());
    std::vector<int> new_id(id_space, -1);
    int next_edge = 0;
    for (const auto& rot : rotations) {
        for (int d : rot) {
            if (d < 0 || d >= id_space || mate[d] < 0)
                throw MapError(MapErrc::malformed_pairing, "dart id outside pairing");
            if (new_id[d] >= 0) continue;
            new_id[d] = 2 * next_edge;
            if (mate[d] == d)
                throw MapError(MapErrc::malformed_pairing, "pairing has a fixed point");
            if (new_id[mate[d]] >= 0)
                throw MapError(MapErrc::malformed_pairing, "pairing is not an involution");
            new_id[mate[d]] = 2 * next_edge + 1;
            ++next_edge;
        }
    }

    PlaneMap m;
    m.n_ = vertex_count;
    m.sigma_.assign(2 * next_edge, -1);
    m.vertex_.assign(2 * next_edge, -1);
    m.vfirst_.assign(vertex_count, -1);
    m.vdeg_.assign(vertex_count, 0);
    for (int v = 0; v < vertex_count; ++v) {
        const auto& rot = rotations[v];
        m.vdeg_[v] = static_cast<int>(rot.size());
        if (rot.empty()) continue;
        m.vfirst_[v] = new_id[rot.front()];
        for (size_t i = 0; i < rot.size(); ++i) {
            int d = new_id[rot[i]];
            int nxt = new_id[rot[(i + 1) % rot.size()]];
            if (m.sigma_[d] != -1)
                throw MapError(MapErrc::malformed_pairing, "dart appears in two rotations");
            m.sigma_[d] = nxt;
            m.vertex_[d] = v;
        }
    }
    for (int d = 0; d < 2 * next_edge; ++d)
        if (m.sigma_[d] < 0)
            throw MapError(MapErrc::malformed_pairing, "paired dart missing from rotations");

    if (run_validation) m.validate();
#ifndef NDEBUG
    else m.validate();
#endif
    return m;
}

PlaneMap PlaneMap::from_rotation(const RotationData& data) {
    int max_id = -1;
    for (const auto& rot : data.rotations)
        for (int d : rot) max_id = std::max(max_id, d);
    for (const auto& [a, b] : data.pairing) max_id = std::max({max_id, a, b});

    std::vector<int> mate(max_id + 1, -1);
    for (const auto& [a, b] : data.pairing) {
        if (a == b) throw MapError(MapErrc::malformed_pairing, "pairing has a fixed point");
        if (a < 0 || b < 0 || mate[a] != -1 || mate[b] != -1)
            throw MapError(MapErrc::malformed_pairing, "dart paired twice");
        mate[a] = b;
        mate[b] = a;
    }
    return assemble_map(static_cast<int>(data.rotations.size()), data.rotations, mate, true);
}

PlaneMap PlaneMap::from_parts(int vertex_count, std::vector<int> sigma,
                              std::vector<int> vertex_of) {
    PlaneMap m;
    m.n_ = vertex_count;
    m.sigma_ = std::move(sigma);
    m.vertex_ = std::move(vertex_of);
    m.vfirst_.assign(vertex_count, -1);
    m.vdeg_.assign(vertex_count, 0);
    for (int d = 0; d < m.dart_count(); ++d) {
        int v = m.vertex_[d];
        if (m.vfirst_[v] < 0) m.vfirst_[v] = d;
        ++m.vdeg_[v];
    }
#ifndef NDEBUG
    m.validate();
#endif
    return m;
}

void PlaneMap::validate() const {
    const int D = dart_count();
    if (n_ < 1) throw MapError(MapErrc::not_connected, "no vertices");

    // sigma is a permutation preserving vertex_of.
    std::vector<char> seen(D, 0);
    for (int d = 0; d < D; ++d) {
        int s = sigma_[d];
        if (s < 0 || s >= D || vertex_[s] != vertex_[d])
            throw MapError(MapErrc::malformed_pairing, "sigma leaves its vertex");
        if (seen[s]) throw MapError(MapErrc::malformed_pairing, "sigma not a permutation");
        seen[s] = 1;
    }

    // Connectivity of the group action of <sigma, alpha>.
    if (D == 0) {
        if (n_ != 1) throw MapError(MapErrc::not_connected, "edgeless map with several vertices");
    } else {
        std::vector<char> dart_seen(D, 0);
        std::vector<int> stack = {0};
        dart_seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int d = stack.back();
            stack.pop_back();
            for (int nb : {sigma_[d], d ^ 1}) {
                if (!dart_seen[nb]) {
                    dart_seen[nb] = 1;
                    ++reached;
                    stack.push_back(nb);
                }
            }
        }
        if (reached != D) throw MapError(MapErrc::not_connected, "darts not mutually reachable");
        for (int v = 0; v < n_; ++v)
            if (vdeg_[v] == 0)
                throw MapError(MapErrc::not_connected, "isolated vertex in a map with edges");
    }

    // Euler count: n - e + f = 2.
    int f = face_count();
    if (n_ - edge_count() + f != 2)
        throw MapError(MapErrc::not_genus_zero, "Euler count is not 2");
}

int PlaneMap::face_count() const {
    const int D = dart_count();
    if (D == 0) return 1;
    std::vector<char> visited(D, 0);
    int count = 0;
    for (int d = 0; d < D; ++d) {
        if (visited[d]) continue;
        ++count;
        int cur = d;
        do {
            visited[cur] = 1;
            cur = phi(cur);
        } while (cur != d);
    }
    return count;
}

FaceSet PlaneMap::faces() const {
    const int D = dart_count();
    FaceSet fs;
    fs.face_of.assign(D, -1);
    for (int d = 0; d < D; ++d) {
        if (fs.face_of[d] >= 0) continue;
        int id = static_cast<int>(fs.walks.size());
        std::vector<Dart> walk;
        int cur = d;
        do {
            fs.face_of[cur] = id;
            walk.push_back(cur);
            cur = phi(cur);
        } while (cur != d);
        fs.walks.push_back(std::move(walk));
    }
    return fs;
}

Dart PlaneMap::sigma_inv(Dart d) const {
    // Cycle lengths are vertex degrees; fine at this scale.
    int cur = d;
    while (sigma_[cur] != d) cur = sigma_[cur];
    return cur;
}

int PlaneMap::degree(int v) const {
    if (v < 0 || v >= n_) throw MapError(MapErrc::unknown_vertex, "vertex out of range");
    return vdeg_[v];
}

int PlaneMap::min_degree() const {
    int best = dart_count() + 1;
    for (int v = 0; v < n_; ++v) best = std::min(best, vdeg_[v]);
    return best;
}

Dart PlaneMap::first_dart(int v) const {
    if (v < 0 || v >= n_) throw MapError(MapErrc::unknown_vertex, "vertex out of range");
    return vfirst_[v];
}

std::vector<Dart> PlaneMap::darts_at(int v) const {
    std::vector<Dart> out;
    int d0 = first_dart(v);
    if (d0 < 0) return out;
    int cur = d0;
    do {
        out.push_back(cur);
        cur = sigma_[cur];
    } while (cur != d0);
    return out;
}

bool PlaneMap::has_loop() const {
    for (int e = 0; e < edge_count(); ++e)
        if (is_loop_edge(e)) return true;
    return false;
}

} // namespace muq
