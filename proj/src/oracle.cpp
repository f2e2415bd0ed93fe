#include "muq/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace muq {

namespace {

struct PairTable {
    std::vector<std::pair<int, int>> pairs;   // (a, b), a < b, lex order
};

// Multiplicity vectors over the vertex pairs summing to the edge count.
// Kept only if every vertex is covered, the support is connected and the
// graph is bipartite (a sphere map with even faces has even cycles only).
void collect_multigraphs(int n, int edge_target, const PairTable& pt,
                         std::vector<std::vector<int>>& out) {
    const int P = static_cast<int>(pt.pairs.size());
    const int max_mult = std::max(1, n - 2);   // a larger class would trap an empty region
    std::vector<int> mult(P, 0);

    auto leaf_ok = [&]() {
        std::vector<int> deg(n, 0);
        for (int p = 0; p < P; ++p) {
            deg[pt.pairs[p].first] += mult[p];
            deg[pt.pairs[p].second] += mult[p];
        }
        for (int v = 0; v < n; ++v)
            if (deg[v] == 0) return false;

        // Connectivity of the support via union-find.
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        int components = n;
        for (int p = 0; p < P; ++p) {
            if (mult[p] == 0) continue;
            int a = find(pt.pairs[p].first), b = find(pt.pairs[p].second);
            if (a != b) {
                parent[a] = b;
                --components;
            }
        }
        if (components != 1) return false;

        // Two-color the support.
        std::vector<int> color(n, -1);
        std::vector<int> stack = {0};
        color[0] = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int p = 0; p < P; ++p) {
                if (mult[p] == 0) continue;
                auto [a, b] = pt.pairs[p];
                int other = a == v ? b : (b == v ? a : -1);
                if (other < 0) continue;
                if (color[other] == -1) {
                    color[other] = color[v] ^ 1;
                    stack.push_back(other);
                } else if (color[other] == color[v]) {
                    return false;
                }
            }
        }
        return true;
    };

    // Iterative depth-first fill of the multiplicity vector.
    std::vector<int> remaining_after(P + 1, 0);
    for (int p = P - 1; p >= 0; --p)
        remaining_after[p] = remaining_after[p + 1] + max_mult;

    auto rec = [&](auto&& self, int p, int left) -> void {
        if (p == P) {
            if (left == 0 && leaf_ok()) out.push_back(mult);
            return;
        }
        if (left > remaining_after[p]) return;
        for (int m = 0; m <= std::min(left, max_mult); ++m) {
            mult[p] = m;
            self(self, p + 1, left - m);
        }
        mult[p] = 0;
    };
    rec(rec, 0, edge_target);
}

// All rotation systems of one labeled multigraph, keeping the all-quad ones.
void scan_rotations(int n, const PairTable& pt, const std::vector<int>& mult,
                    Canonicalizer& canon, std::unordered_set<Code>& sink) {
    std::vector<std::pair<int, int>> edges;
    for (size_t p = 0; p < mult.size(); ++p)
        for (int i = 0; i < mult[p]; ++i) edges.push_back(pt.pairs[p]);
    const int E = static_cast<int>(edges.size());
    const int D = 2 * E;

    std::vector<int> vertex_of(D);
    std::vector<std::vector<int>> incident(n);
    for (int e = 0; e < E; ++e) {
        vertex_of[2 * e] = edges[e].first;
        vertex_of[2 * e + 1] = edges[e].second;
        incident[edges[e].first].push_back(2 * e);
        incident[edges[e].second].push_back(2 * e + 1);
    }

    // Cyclic orders per vertex: first dart pinned, tail permuted.
    std::vector<int> sigma(D, -1);
    std::vector<char> visited(D, 0);

    auto write_sigma = [&](int v, const std::vector<int>& tail) {
        int first = incident[v][0];
        int prev = first;
        for (int d : tail) {
            sigma[prev] = d;
            prev = d;
        }
        sigma[prev] = first;
    };

    auto faces_all_quads = [&]() {
        std::fill(visited.begin(), visited.end(), 0);
        for (int d = 0; d < D; ++d) {
            if (visited[d]) continue;
            int cur = d, len = 0;
            do {
                visited[cur] = 1;
                cur = sigma[cur ^ 1];
                ++len;
                if (len > 4) return false;
            } while (cur != d);
            if (len != 4) return false;
        }
        return true;
    };

    std::vector<std::vector<int>> tails(n);
    for (int v = 0; v < n; ++v) {
        tails[v].assign(incident[v].begin() + 1, incident[v].end());
        std::sort(tails[v].begin(), tails[v].end());
        write_sigma(v, tails[v]);
    }

    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            if (faces_all_quads())
                sink.insert(canon.code(PlaneMap::from_parts(n, sigma, vertex_of), true));
            return;
        }
        std::sort(tails[v].begin(), tails[v].end());
        do {
            write_sigma(v, tails[v]);
            self(self, v + 1);
        } while (std::next_permutation(tails[v].begin(), tails[v].end()));
    };
    rec(rec, 0);
}

} // namespace

std::vector<Code> brute_force_muqs(int n, int jobs) {
    if (n < 3 || n > 7)
        throw MapError(MapErrc::order_too_large_for_oracle,
                       "rotation-system scan is exhaustive only for 3 <= n <= 7");

    PairTable pt;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) pt.pairs.emplace_back(a, b);

    std::vector<std::vector<int>> graphs;
    collect_multigraphs(n, 2 * n - 4, pt, graphs);

    std::unordered_set<Code> merged;
#ifdef _OPENMP
#pragma omp parallel num_threads(jobs > 1 ? jobs : 1)
    {
        Canonicalizer canon;
        std::unordered_set<Code> local;
#pragma omp for schedule(dynamic, 1)
        for (long g = 0; g < static_cast<long>(graphs.size()); ++g)
            scan_rotations(n, pt, graphs[g], canon, local);
#pragma omp critical
        merged.insert(local.begin(), local.end());
    }
#else
    (void)jobs;
    Canonicalizer canon;
    for (const auto& g : graphs) scan_rotations(n, pt, g, canon, merged);
#endif

    std::vector<Code> out(merged.begin(), merged.end());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace muq
