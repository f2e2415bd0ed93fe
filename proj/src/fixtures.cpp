#include "muq/fixtures.hpp"

#include <map>

namespace muq::fixtures {

PlaneMap simple_from_neighbors(const std::vector<std::vector<int>>& neighbors) {
    RotationData data;
    data.rotations.resize(neighbors.size());
    std::map<std::pair<int, int>, int> open;   // (from, to) -> dart id
    int next = 0;
    for (int v = 0; v < static_cast<int>(neighbors.size()); ++v) {
        for (int w : neighbors[v]) {
            int d = next++;
            data.rotations[v].push_back(d);
            auto it = open.find({w, v});
            if (it != open.end()) {
                data.pairing.emplace_back(it->second, d);
                open.erase(it);
            } else {
                auto [pos, fresh] = open.emplace(std::pair{v, w}, d);
                if (!fresh)
                    throw MapError(MapErrc::malformed_pairing,
                                   "neighbor builder needs a simple graph");
            }
        }
    }
    if (!open.empty())
        throw MapError(MapErrc::malformed_pairing, "unmatched neighbor entries");
    return PlaneMap::from_rotation(data);
}

PlaneMap k2() {
    return PlaneMap::from_rotation({{{0}, {1}}, {{0, 1}}});
}

PlaneMap single_loop() {
    return PlaneMap::from_rotation({{{0, 1}}, {{0, 1}}});
}

PlaneMap p3_path() {
    return simple_from_neighbors({{1}, {0, 2}, {1}});
}

PlaneMap tetrahedron() {
    return simple_from_neighbors({{3, 1, 2}, {2, 0, 3}, {3, 0, 1}, {1, 0, 2}});
}

PlaneMap p2() {
    return simple_from_neighbors({{1}, {0, 2}, {1}});
}

PlaneMap c4() {
    return simple_from_neighbors({{1, 3}, {2, 0}, {3, 1}, {0, 2}});
}

PlaneMap q3() {
    // Two vertices joined by a double edge, one pendant hanging in each of
    // the two regions.
    RotationData data;
    data.rotations = {{0, 4, 2}, {1, 6, 3}, {5}, {7}};
    data.pairing = {{0, 1}, {2, 3}, {4, 5}, {6, 7}};
    return PlaneMap::from_rotation(data);
}

PlaneMap q4() {
    // A double edge between a degree-4 and a degree-2 vertex; the two
    // pendants sit on the degree-4 side, one per region.
    RotationData data;
    data.rotations = {{0, 4, 2, 6}, {1, 3}, {5}, {7}};
    data.pairing = {{0, 1}, {2, 3}, {4, 5}, {6, 7}};
    return PlaneMap::from_rotation(data);
}

PlaneMap cube() {
    return simple_from_neighbors({
        {1, 4, 3},
        {2, 5, 0},
        {3, 6, 1},
        {2, 0, 7},
        {5, 7, 0},
        {6, 4, 1},
        {2, 7, 5},
        {6, 3, 4},
    });
}

PlaneMap f10() {
    // Hubs 0 and 1; rim 2..9. Hub 0 serves the odd rim positions from
    // inside, hub 1 the even ones from outside.
    return simple_from_neighbors({
        {2, 4, 6, 8},
        {3, 9, 7, 5},
        {3, 0, 9},
        {1, 4, 2},
        {5, 0, 3},
        {1, 6, 4},
        {7, 0, 5},
        {1, 8, 6},
        {9, 0, 7},
        {1, 2, 8},
    });
}

} // namespace muq::fixtures
