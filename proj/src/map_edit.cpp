#include "muq/map_edit.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace muq {

namespace {

std::vector<std::vector<int>> rotation_lists(const PlaneMap& m) {
    std::vector<std::vector<int>> rot(m.vertex_count());
    for (int v = 0; v < m.vertex_count(); ++v) rot[v] = m.darts_at(v);
    return rot;
}

std::vector<int> xor_mate(int dart_count) {
    std::vector<int> mate(dart_count);
    for (int d = 0; d < dart_count; ++d) mate[d] = d ^ 1;
    return mate;
}

} // namespace

PlaneMap dual(const PlaneMap& m) {
    if (m.dart_count() == 0) return PlaneMap::single_vertex();
    FaceSet fs = m.faces();
    const int D = m.dart_count();
    std::vector<int> sigma(D), vertex_of(D);
    for (int d = 0; d < D; ++d) {
        sigma[d] = m.phi(d);
        vertex_of[d] = fs.face_of[d];
    }
    return PlaneMap::from_parts(static_cast<int>(fs.walks.size()),
                                std::move(sigma), std::move(vertex_of));
}

PlaneMap delete_edges(const PlaneMap& m, std::span<const int> edges) {
    std::vector<char> drop(m.edge_count(), 0);
    for (int e : edges) drop[e] = 1;

    std::vector<std::vector<int>> rot(m.vertex_count());
    int kept_darts = 0;
    for (int v = 0; v < m.vertex_count(); ++v) {
        for (int d : m.darts_at(v))
            if (!drop[d >> 1]) rot[v].push_back(d);
        kept_darts += static_cast<int>(rot[v].size());
    }
    if (kept_darts == 0 && m.vertex_count() > 1)
        throw MapError(MapErrc::disconnected_result, "deletion strands vertices");

    std::vector<int> mate = xor_mate(m.dart_count());
    try {
        return assemble_map(m.vertex_count(), rot, mate, true);
    } catch (const MapError& err) {
        if (err.code() == MapErrc::not_connected)
            throw MapError(MapErrc::disconnected_result, "deletion disconnects the map");
        throw;
    }
}

PlaneMap add_edge_in_face(const PlaneMap& m, Dart at1, Dart at2) {
    FaceSet fs = m.faces();
    if (fs.face_of[at1] != fs.face_of[at2])
        throw MapError(MapErrc::corners_not_on_same_face, "corners on different faces");

    const int D = m.dart_count();
    const int x = D, y = D + 1;
    std::vector<std::vector<int>> rot = rotation_lists(m);

    auto insert_before = [&](int v, Dart anchor, std::span<const int> add) {
        auto& list = rot[v];
        auto it = std::find(list.begin(), list.end(), anchor);
        assert(it != list.end());
        list.insert(it, add.begin(), add.end());
    };

    if (at1 == at2) {
        const int both[] = {x, y};
        insert_before(m.vertex_of(at1), at1, both);
    } else {
        const int first[] = {x};
        const int second[] = {y};
        insert_before(m.vertex_of(at1), at1, first);
        insert_before(m.vertex_of(at2), at2, second);
    }

    std::vector<int> mate = xor_mate(D + 2);
    return assemble_map(m.vertex_count(), rot, mate, false);
}

PlaneMap add_pendant(const PlaneMap& m, Dart at) {
    const int D = m.dart_count();
    const int x = D, y = D + 1;
    std::vector<std::vector<int>> rot = rotation_lists(m);
    auto& list = rot[m.vertex_of(at)];
    list.insert(std::find(list.begin(), list.end(), at), x);
    rot.push_back({y});
    std::vector<int> mate = xor_mate(D + 2);
    return assemble_map(m.vertex_count() + 1, rot, mate, false);
}

Submap induced_embedded_submap_indexed(const PlaneMap& m, std::span<const int> vertices) {
    std::vector<int> vmap(m.vertex_count(), -1);
    std::vector<int> sorted(vertices.begin(), vertices.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 0 || sorted[i] >= m.vertex_count())
            throw MapError(MapErrc::unknown_vertex, "submap vertex out of range");
        vmap[sorted[i]] = static_cast<int>(i);
    }

    std::vector<char> keep_edge(m.edge_count(), 0);
    for (int e = 0; e < m.edge_count(); ++e) {
        auto [a, b] = m.endpoints(e);
        keep_edge[e] = vmap[a] >= 0 && vmap[b] >= 0;
    }

    std::vector<std::vector<int>> rot(sorted.size());
    int kept_darts = 0;
    for (size_t i = 0; i < sorted.size(); ++i) {
        for (int d : m.darts_at(sorted[i]))
            if (keep_edge[d >> 1]) rot[i].push_back(d);
        kept_darts += static_cast<int>(rot[i].size());
    }
    if (kept_darts == 0 && sorted.size() > 1)
        throw MapError(MapErrc::disconnected_result, "induced submap has stranded vertices");

    // Edge ids in the submap follow first-seen order of kept darts, the same
    // scan assemble_map performs.
    std::vector<int> emap(m.edge_count(), -1);
    int next = 0;
    for (size_t i = 0; i < rot.size(); ++i)
        for (int d : rot[i])
            if (emap[d >> 1] < 0) emap[d >> 1] = next++;

    std::vector<int> mate = xor_mate(m.dart_count());
    try {
        return Submap{assemble_map(static_cast<int>(sorted.size()), rot, mate, true),
                      std::move(vmap), std::move(emap)};
    } catch (const MapError& err) {
        if (err.code() == MapErrc::not_connected)
            throw MapError(MapErrc::disconnected_result, "induced submap is disconnected");
        throw;
    }
}

PlaneMap induced_embedded_submap(const PlaneMap& m, std::span<const int> vertices) {
    return induced_embedded_submap_indexed(m, vertices).map;
}

std::vector<ParallelClass> parallel_classes(const PlaneMap& m) {
    std::map<std::pair<int, int>, std::vector<int>> groups;
    for (int e = 0; e < m.edge_count(); ++e) {
        auto [a, b] = m.endpoints(e);
        if (a == b) continue;   // loops join no vertex pair
        groups[{std::min(a, b), std::max(a, b)}].push_back(e);
    }

    std::vector<ParallelClass> out;
    for (auto& [vw, group_edges] : groups) {
        if (group_edges.size() < 2) continue;
        ParallelClass cls;
        cls.v = vw.first;
        cls.w = vw.second;
        const int k = static_cast<int>(group_edges.size());

        std::vector<char> in_class(m.edge_count(), 0);
        for (int e : group_edges) in_class[e] = 1;

        // Class darts at v in sigma order, starting at the smallest one.
        int start = -1;
        for (int d : m.darts_at(cls.v))
            if (in_class[d >> 1] && (start < 0 || d < start)) start = d;
        std::vector<int> class_darts;
        int cur = start;
        do {
            if (in_class[cur >> 1]) class_darts.push_back(cur);
            cur = m.sigma(cur);
        } while (cur != start);
        assert(static_cast<int>(class_darts.size()) == k);
        for (int d : class_darts) cls.edges.push_back(d >> 1);

        // The class edges cut the sphere into k regions; flood faces with
        // the class edges as walls. Region i is seeded by the corner just
        // counterclockwise of class dart i at v, i.e. the face of sigma(d).
        FaceSet fs = m.faces();
        std::vector<int> region_of_face(fs.walks.size(), -1);
        for (int i = 0; i < k; ++i) {
            int seed = fs.face_of[m.sigma(class_darts[i])];
            std::vector<int> stack = {seed};
            assert(region_of_face[seed] == -1);
            region_of_face[seed] = i;
            while (!stack.empty()) {
                int f = stack.back();
                stack.pop_back();
                for (int d : fs.walks[f]) {
                    if (in_class[d >> 1]) continue;
                    int g = fs.face_of[d ^ 1];
                    if (region_of_face[g] == -1) {
                        region_of_face[g] = i;
                        stack.push_back(g);
                    }
                }
            }
        }

        cls.region_interiors.assign(k, {});
        std::vector<int> region_of_vertex(m.vertex_count(), -1);
        for (size_t f = 0; f < fs.walks.size(); ++f) {
            int r = region_of_face[f];
            assert(r >= 0);
            for (int d : fs.walks[f]) {
                int z = m.vertex_of(d);
                if (z == cls.v || z == cls.w || region_of_vertex[z] == r) continue;
                assert(region_of_vertex[z] == -1);
                region_of_vertex[z] = r;
                cls.region_interiors[r].push_back(z);
            }
        }
        for (auto& interior : cls.region_interiors)
            std::sort(interior.begin(), interior.end());

        out.push_back(std::move(cls));
    }
    return out;
}

} // namespace muq
