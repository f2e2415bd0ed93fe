#include "muq/halves.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "muq/canonical.hpp"
#include "muq/predicates.hpp"

namespace muq {

Half validate_half(const PlaneMap& m, int v, int w) {
    if (v == w || v < 0 || w < 0 || v >= m.vertex_count() || w >= m.vertex_count())
        throw MapError(MapErrc::invalid_half, "marked vertices must be two distinct vertices");
    if (!is_quadrangulation(m))
        throw MapError(MapErrc::not_a_quadrangulation, "a half is first of all a MUQ");

    int marked = -1, count = 0;
    for (int e = 0; e < m.edge_count(); ++e) {
        auto [a, b] = m.endpoints(e);
        if ((a == v && b == w) || (a == w && b == v)) {
            marked = e;
            ++count;
        }
    }
    if (count == 0) throw MapError(MapErrc::invalid_half, "marked vertices are not adjacent");
    if (count > 1)
        throw MapError(MapErrc::multiple_marked_edges,
                       std::to_string(count) + " edges join the marked pair");

    for (int z = 0; z < m.vertex_count(); ++z) {
        if (z == v || z == w) continue;
        if (m.degree(z) < 3)
            throw MapError(MapErrc::low_degree_interior,
                           "vertex " + std::to_string(z) + " has degree " +
                               std::to_string(m.degree(z)));
    }
    return Half{m, v, w, marked};
}

Half extract_half(const PlaneMap& g, const ParallelClass& cls, std::optional<int> region) {
    const int k = static_cast<int>(cls.edges.size());
    if (k < 2) throw MapError(MapErrc::not_parallel, "class has fewer than 2 edges");

    int r;
    if (region) {
        r = *region;
        if (r < 0 || r >= k)
            throw MapError(MapErrc::not_parallel, "region index out of range");
    } else {
        r = 0;
        for (int i = 1; i < k; ++i)
            if (cls.region_interiors[i].size() < cls.region_interiors[r].size()) r = i;
    }

    std::vector<int> keep_vertices = cls.region_interiors[r];
    keep_vertices.push_back(cls.v);
    keep_vertices.push_back(cls.w);
    Submap sub = induced_embedded_submap_indexed(g, keep_vertices);

    // Region r is bounded by edges[r] and edges[r+1]; keep the former.
    std::vector<int> to_delete;
    for (int i = 0; i < k; ++i) {
        if (i == r) continue;
        int sub_edge = sub.edge_to_sub[cls.edges[i]];
        assert(sub_edge >= 0);
        to_delete.push_back(sub_edge);
    }
    PlaneMap trimmed = delete_edges(sub.map, to_delete);

    try {
        return validate_half(trimmed, sub.vertex_to_sub[cls.v], sub.vertex_to_sub[cls.w]);
    } catch (const MapError& err) {
        throw MapError(MapErrc::result_not_half,
                       std::string("trimmed region is not a half (") + err.what() + ")");
    }
}

PlaneMap double_half(const Half& f, int side) {
    const PlaneMap& m = f.map;
    const int D = m.dart_count();
    const int n = m.vertex_count();

    FaceSet fs = m.faces();
    const Dart d0 = 2 * f.marked_edge, d1 = d0 ^ 1;
    if (fs.face_of[d0] == fs.face_of[d1])
        throw MapError(MapErrc::bridge_marked_edge,
                       "both sides of the marked edge are the same face");
    const Dart dx = side == 0 ? d0 : d1;
    const Dart dy = dx ^ 1;
    const int x = m.vertex_of(dx), y = m.vertex_of(dy);

    // Copy 0 keeps its dart ids, copy 1 is shifted by D; the clone's two
    // marked darts disappear into the merged edge, and u/z form the new
    // parallel edge through the gluing face.
    const int u = 2 * D, z = 2 * D + 1;

    std::vector<int> new_vertex(n, -1);
    new_vertex[x] = x;
    new_vertex[y] = y;
    int next_vertex = n;

    std::vector<std::vector<int>> rot(2 * n - 2);
    std::vector<int> at_x = m.darts_at(x), at_y = m.darts_at(y);
    std::rotate(at_x.begin(), std::find(at_x.begin(), at_x.end(), dx), at_x.end());
    std::rotate(at_y.begin(), std::find(at_y.begin(), at_y.end(), dy), at_y.end());

    // X = x merged with the clone's y; Y = y merged with the clone's x.
    auto& rx = rot[x];
    rx.push_back(dx);
    for (size_t i = 1; i < at_x.size(); ++i) rx.push_back(at_x[i]);
    rx.push_back(u);
    for (size_t i = 1; i < at_y.size(); ++i) rx.push_back(at_y[i] + D);

    auto& ry = rot[y];
    ry.push_back(dy);
    for (size_t i = 1; i < at_x.size(); ++i) ry.push_back(at_x[i] + D);
    ry.push_back(z);
    for (size_t i = 1; i < at_y.size(); ++i) ry.push_back(at_y[i]);

    for (int t = 0; t < n; ++t) {
        if (t == x || t == y) continue;
        rot[t] = m.darts_at(t);
        int clone_id = next_vertex++;
        new_vertex[t] = clone_id;
        for (int d : m.darts_at(t)) rot[clone_id].push_back(d + D);
    }
    assert(next_vertex == 2 * n - 2);

    std::vector<int> mate(2 * D + 2, -1);
    for (int d = 0; d < D; ++d) mate[d] = d ^ 1;
    for (int e = 0; e < m.edge_count(); ++e) {
        if (e == f.marked_edge) continue;
        mate[2 * e + D] = (2 * e + 1) + D;
        mate[(2 * e + 1) + D] = 2 * e + D;
    }
    mate[u] = z;
    mate[z] = u;

    return assemble_map(2 * n - 2, rot, mate, true);
}

std::vector<Half> halves_of(const PlaneMap& q) {
    if (!is_quadrangulation(q))
        throw MapError(MapErrc::not_a_quadrangulation, "halves are marked MUQs");

    std::map<std::pair<int, int>, int> multiplicity;
    for (int e = 0; e < q.edge_count(); ++e) {
        auto [a, b] = q.endpoints(e);
        ++multiplicity[{std::min(a, b), std::max(a, b)}];
    }

    Canonicalizer canon;
    std::vector<std::pair<std::string, Half>> found;
    for (int e = 0; e < q.edge_count(); ++e) {
        auto [a, b] = q.endpoints(e);
        if (multiplicity[{std::min(a, b), std::max(a, b)}] != 1) continue;
        try {
            Half h = validate_half(q, a, b);
            std::string key = canon.code_marked_edge(q, e, true);
            bool fresh = std::none_of(found.begin(), found.end(),
                                      [&](const auto& p) { return p.first == key; });
            if (fresh) found.emplace_back(std::move(key), std::move(h));
        } catch (const MapError&) {
            // pair does not mark a half
        }
    }
    std::sort(found.begin(), found.end(),
              [](const auto& p, const auto& qq) { return p.first < qq.first; });
    std::vector<Half> out;
    out.reserve(found.size());
    for (auto& p : found) out.push_back(std::move(p.second));
    return out;
}

} // namespace muq
