#include "muq/io_rotsys.hpp"

#include <map>
#include <sstream>

#include "muq/canonical.hpp"

namespace muq {

namespace {

[[noreturn]] void fail(int line_no, const std::string& what) {
    throw MapError(MapErrc::syntax_error, "line " + std::to_string(line_no) + ": " + what);
}

std::string edge_token(int index) {
    // a..z, aa..az, ba..
    std::string out;
    ++index;
    while (index > 0) {
        --index;
        out.insert(out.begin(), static_cast<char>('a' + index % 26));
        index /= 26;
    }
    return out;
}

} // namespace

std::vector<PlaneMap> parse_rotsys(const std::string& text) {
    std::vector<std::string> lines;
    {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            lines.push_back(line);
        }
    }

    std::vector<PlaneMap> maps;
    size_t i = 0;
    while (i < lines.size()) {
        if (lines[i].find_first_not_of(" \t") == std::string::npos) {
            ++i;
            continue;
        }
        const int header_line = static_cast<int>(i) + 1;
        int n = -1, e = -1;
        {
            std::istringstream hs(lines[i]);
            std::string tn, te;
            hs >> tn >> te;
            if (tn.rfind("n=", 0) != 0 || te.rfind("e=", 0) != 0)
                fail(header_line, "expected header 'n=<N> e=<E>'");
            try {
                n = std::stoi(tn.substr(2));
                e = std::stoi(te.substr(2));
            } catch (...) {
                fail(header_line, "bad number in header");
            }
            std::string rest;
            if (hs >> rest) fail(header_line, "trailing tokens after header");
            if (n < 1 || e < 0) fail(header_line, "need n >= 1 and e >= 0");
        }
        ++i;

        std::vector<std::vector<std::string>> vertex_tokens(n);
        for (int v = 0; v < n; ++v, ++i) {
            const int line_no = static_cast<int>(i) + 1;
            if (i >= lines.size()) fail(line_no, "record ends before vertex " + std::to_string(v + 1));
            std::istringstream vs(lines[i]);
            std::string head;
            vs >> head;
            if (head != std::to_string(v + 1) + ":")
                fail(line_no, "expected '" + std::to_string(v + 1) + ":'");
            std::string tok;
            while (vs >> tok) vertex_tokens[v].push_back(tok);
        }

        std::map<std::string, std::vector<int>> occurrences;
        RotationData data;
        data.rotations.resize(n);
        int next_dart = 0;
        for (int v = 0; v < n; ++v)
            for (const auto& tok : vertex_tokens[v]) {
                data.rotations[v].push_back(next_dart);
                occurrences[tok].push_back(next_dart);
                ++next_dart;
            }
        if (static_cast<int>(occurrences.size()) != e)
            fail(header_line, "header says e=" + std::to_string(e) + " but record uses " +
                                  std::to_string(occurrences.size()) + " edge ids");
        for (const auto& [tok, darts] : occurrences) {
            if (darts.size() != 2)
                throw MapError(MapErrc::inconsistent_incidence,
                               "edge id '" + tok + "' appears " + std::to_string(darts.size()) +
                                   " times (record at line " + std::to_string(header_line) + ")");
            data.pairing.emplace_back(darts[0], darts[1]);
        }
        maps.push_back(PlaneMap::from_rotation(data));
    }
    return maps;
}

std::string emit_rotsys_one(const PlaneMap& m, std::vector<int>* vertex_rank_out) {
    Canonicalizer canon;
    CanonicalLabeling lab = canon.labeling(m, true);
    const int D = m.dart_count();

    // Vertices and edges numbered by first appearance in label order.
    std::vector<int> vertex_rank(m.vertex_count(), -1);
    std::vector<int> edge_rank(m.edge_count(), -1);
    std::vector<int> vertex_by_rank(m.vertex_count(), -1);
    std::vector<Dart> start_dart(m.vertex_count(), -1);
    int nv = 0, ne = 0;
    for (int i = 0; i < D; ++i) {
        int d = lab.order[i];
        int v = m.vertex_of(d);
        if (vertex_rank[v] < 0) {
            vertex_rank[v] = nv;
            vertex_by_rank[nv] = v;
            start_dart[v] = d;
            ++nv;
        }
        if (edge_rank[d >> 1] < 0) edge_rank[d >> 1] = ne++;
    }
    if (D == 0) {   // the one-vertex map
        vertex_by_rank[0] = 0;
        vertex_rank[0] = 0;
        nv = 1;
    }
    if (vertex_rank_out) *vertex_rank_out = vertex_rank;

    std::ostringstream out;
    out << "n=" << m.vertex_count() << " e=" << m.edge_count() << "\n";
    for (int r = 0; r < m.vertex_count(); ++r) {
        int v = vertex_by_rank[r];
        out << (r + 1) << ":";
        if (v >= 0 && start_dart[v] >= 0) {
            int d = start_dart[v];
            int cur = d;
            do {
                out << ' ' << edge_token(edge_rank[cur >> 1]);
                cur = lab.mirrored ? m.sigma_inv(cur) : m.sigma(cur);
            } while (cur != d);
        }
        out << "\n";
    }
    return out.str();
}

std::string emit_rotsys(const std::vector<PlaneMap>& maps) {
    std::string out;
    for (size_t i = 0; i < maps.size(); ++i) {
        if (i) out += "\n";
        out += emit_rotsys_one(maps[i]);
    }
    return out;
}

} // namespace muq
