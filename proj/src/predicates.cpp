#include "muq/predicates.hpp"

#include "muq/canonical.hpp"
#include "muq/fixtures.hpp"
#include "muq/map_edit.hpp"

namespace muq {

bool is_quadrangulation(const PlaneMap& m) {
    if (m.dart_count() == 0 || m.has_loop()) return false;
    const int D = m.dart_count();
    std::vector<char> visited(D, 0);
    for (int d = 0; d < D; ++d) {
        if (visited[d]) continue;
        int len = 0, cur = d;
        do {
            visited[cur] = 1;
            ++len;
            if (len > 4) return false;
            cur = m.phi(cur);
        } while (cur != d);
        if (len != 4) return false;
    }
    return true;
}

bool is_simple_quadrangulation(const PlaneMap& m) {
    if (!is_quadrangulation(m)) return false;
    if (!parallel_classes(m).empty()) return false;
    // No face walk may traverse an edge twice.
    for (const auto& walk : m.faces().walks) {
        for (size_t i = 0; i < walk.size(); ++i)
            for (size_t j = i + 1; j < walk.size(); ++j)
                if ((walk[i] >> 1) == (walk[j] >> 1)) return false;
    }
    return true;
}

bool is_irreducible(const PlaneMap& m) {
    if (!is_quadrangulation(m))
        throw MapError(MapErrc::not_a_quadrangulation, "irreducibility is defined on MUQs");
    if (m.min_degree() == 3) return true;
    return m.vertex_count() == 3 && is_isomorphic(m, fixtures::p2());
}

bool adjacent_degree_check(const PlaneMap& m) {
    if (!is_quadrangulation(m))
        throw MapError(MapErrc::not_a_quadrangulation, "degree check is defined on MUQs");
    for (int e = 0; e < m.edge_count(); ++e) {
        auto [a, b] = m.endpoints(e);
        if (m.degree(a) + m.degree(b) < 3) return false;
    }
    return true;
}

} // namespace muq
