/*
 * Shared test helpers. The automorphism counter here is an independent
 * oracle: it extends dart bijections by propagation instead of comparing
 * canonical codes, and must agree with the canonical module everywhere.
 */
#ifndef MUQ_TEST_UTIL_HPP
#define MUQ_TEST_UTIL_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "muq/plane_map.hpp"

namespace muq::testutil {

/// Dart bijections commuting with alpha and conjugating sigma to itself
/// (reversed = false) or to its inverse (reversed = true).
inline int extension_count(const PlaneMap& m, bool reversed) {
    const int D = m.dart_count();
    if (D == 0) return reversed ? 0 : 1;
    std::vector<int> sig(D), sig_inv(D);
    for (int d = 0; d < D; ++d) sig[d] = m.sigma(d);
    for (int d = 0; d < D; ++d) sig_inv[sig[d]] = d;
    const std::vector<int>& target = reversed ? sig_inv : sig;

    int count = 0;
    for (int t = 0; t < D; ++t) {
        std::vector<int> pi(D, -1);
        pi[0] = t;
        std::vector<int> stack = {0};
        bool ok = true;
        while (!stack.empty() && ok) {
            int d = stack.back();
            stack.pop_back();
            const int want[2][2] = {{sig[d], target[pi[d]]}, {d ^ 1, pi[d] ^ 1}};
            for (const auto& w : want) {
                if (pi[w[0]] == -1) {
                    pi[w[0]] = w[1];
                    stack.push_back(w[0]);
                } else if (pi[w[0]] != w[1]) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        std::vector<char> hit(D, 0);
        for (int d = 0; d < D && ok; ++d) {
            ok = pi[d] >= 0 && !hit[pi[d]] && pi[d ^ 1] == (pi[d] ^ 1) &&
                 pi[sig[d]] == target[pi[d]];
            if (pi[d] >= 0) hit[pi[d]] = 1;
        }
        if (ok) ++count;
    }
    return count;
}

/// Signed automorphism group order: orientation-preserving extensions plus,
/// with reflections, orientation-reversing ones.
inline int brute_automorphism_count(const PlaneMap& m, bool reflect) {
    if (m.dart_count() == 0) return 1;
    int c = extension_count(m, false);
    if (reflect) c += extension_count(m, true);
    return c;
}

/// Same map with scrambled vertex order, dart ids and rotation starting
/// points.
inline PlaneMap random_relabel(const PlaneMap& m, std::mt19937& rng) {
    const int n = m.vertex_count();
    const int D = m.dart_count();
    std::vector<int> vperm(n), dperm(D);
    std::iota(vperm.begin(), vperm.end(), 0);
    std::iota(dperm.begin(), dperm.end(), 0);
    std::shuffle(vperm.begin(), vperm.end(), rng);
    std::shuffle(dperm.begin(), dperm.end(), rng);

    RotationData data;
    data.rotations.resize(n);
    for (int v = 0; v < n; ++v) {
        std::vector<Dart> rot = m.darts_at(vperm[v]);
        if (!rot.empty())
            std::rotate(rot.begin(),
                        rot.begin() + std::uniform_int_distribution<size_t>(0, rot.size() - 1)(rng),
                        rot.end());
        for (Dart d : rot) data.rotations[v].push_back(dperm[d]);
    }
    for (int e = 0; e < m.edge_count(); ++e)
        data.pairing.emplace_back(dperm[2 * e], dperm[2 * e + 1]);
    return PlaneMap::from_rotation(data);
}

/// The mirror image: sigma inverted, alpha kept.
inline PlaneMap mirrored(const PlaneMap& m) {
    const int D = m.dart_count();
    std::vector<int> sigma_inv(D), vertex_of(D);
    for (int d = 0; d < D; ++d) {
        sigma_inv[m.sigma(d)] = d;
        vertex_of[d] = m.vertex_of(d);
    }
    if (D == 0) return PlaneMap::single_vertex();
    return PlaneMap::from_parts(m.vertex_count(), std::move(sigma_inv), std::move(vertex_of));
}

} // namespace muq::testutil

#endif
