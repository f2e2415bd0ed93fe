#include "muq/io_planar_code.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>

#include "muq/canonical.hpp"
#include "muq/predicates.hpp"

namespace muq {

namespace {

constexpr char kHeader[] = ">>planar_code<<";
constexpr size_t kHeaderLen = sizeof(kHeader) - 1;
constexpr long kPairingSearchCap = 1'000'000;

struct NeighborRecord {
    std::vector<std::vector<int>> ccw;   // 0-based neighbor lists, counterclockwise
};

// Enumerates dart pairings class by class: bijections between the two
// occurrence sets of each vertex pair, perfect matchings of each loop set.
class PairingSearch {
public:
    PairingSearch(const NeighborRecord& rec) {
        int next = 0;
        rotations_.resize(rec.ccw.size());
        for (size_t v = 0; v < rec.ccw.size(); ++v)
            for (int w : rec.ccw[v]) {
                rotations_[v].push_back(next);
                int a = static_cast<int>(v);
                if (a == w)
                    loop_classes_[a].push_back(next);
                else
                    side_[{std::min(a, w), std::max(a, w)}][a < w ? 0 : 1].push_back(next);
                ++next;
            }
        dart_count_ = next;

        for (auto& [vw, sides] : side_) {
            if (sides[0].size() != sides[1].size())
                throw MapError(MapErrc::truncated_record,
                               "neighbor lists disagree on a multiplicity");
            classes_.push_back({sides[0], sides[1]});
        }
        for (auto& [v, darts] : loop_classes_) {
            if (darts.size() % 2 != 0)
                throw MapError(MapErrc::truncated_record, "odd number of loop ends");
            classes_.push_back({darts, {}});
        }

        long total = 1;
        for (const auto& cls : classes_) {
            long ways = 1;
            if (cls.second.empty()) {
                for (long m = static_cast<long>(cls.first.size()) - 1; m > 0; m -= 2) ways *= m;
            } else {
                for (long m = 2; m <= static_cast<long>(cls.second.size()); ++m) ways *= m;
            }
            total *= ways;
            if (total > kPairingSearchCap)
                throw MapError(MapErrc::ambiguous_multiedge_pairing,
                               "pairing search space too large");
        }
    }

    /// Calls fn for every complete pairing (mate array over all darts).
    template <typename Fn>
    void for_each_pairing(Fn&& fn) {
        mate_.assign(dart_count_, -1);
        recurse(0, fn);
    }

    const std::vector<std::vector<int>>& rotations() const { return rotations_; }

private:
    template <typename Fn>
    void recurse(size_t ci, Fn&& fn) {
        if (ci == classes_.size()) {
            fn(mate_);
            return;
        }
        const auto& [left, right] = classes_[ci];
        if (!right.empty()) {
            std::vector<int> perm = right;
            std::sort(perm.begin(), perm.end());
            do {
                for (size_t i = 0; i < left.size(); ++i) {
                    mate_[left[i]] = perm[i];
                    mate_[perm[i]] = left[i];
                }
                recurse(ci + 1, fn);
            } while (std::next_permutation(perm.begin(), perm.end()));
        } else {
            match_loops(left, 0, ci, fn);
        }
    }

    template <typename Fn>
    void match_loops(const std::vector<int>& darts, size_t used_mask, size_t ci, Fn&& fn) {
        size_t first = 0;
        while (first < darts.size() && (used_mask & (size_t{1} << first))) ++first;
        if (first == darts.size()) {
            recurse(ci + 1, fn);
            return;
        }
        for (size_t j = first + 1; j < darts.size(); ++j) {
            if (used_mask & (size_t{1} << j)) continue;
            mate_[darts[first]] = darts[j];
            mate_[darts[j]] = darts[first];
            match_loops(darts, used_mask | (size_t{1} << first) | (size_t{1} << j), ci, fn);
        }
    }

    int dart_count_ = 0;
    std::vector<std::vector<int>> rotations_;
    std::map<std::pair<int, int>, std::array<std::vector<int>, 2>> side_;
    std::map<int, std::vector<int>> loop_classes_;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> classes_;
    std::vector<int> mate_;
};

PlaneMap realize_record(const NeighborRecord& rec) {
    PairingSearch search(rec);
    Canonicalizer canon;
    std::vector<std::pair<std::string, PlaneMap>> classes;
    const int n = static_cast<int>(rec.ccw.size());
    search.for_each_pairing([&](const std::vector<int>& mate) {
        std::optional<PlaneMap> m;
        try {
            m = assemble_map(n, search.rotations(), mate, true);
        } catch (const MapError& err) {
            if (err.code() == MapErrc::not_genus_zero) return;   // wrong completion, keep going
            throw;   // disconnected or malformed under every pairing
        }
        std::string code = canon.code(*m, true);
        for (const auto& [c, unused] : classes)
            if (c == code) return;
        classes.emplace_back(std::move(code), std::move(*m));
    });

    if (classes.empty())
        throw MapError(MapErrc::non_planar_pairing,
                       "no dart pairing of this record closes into a sphere map");
    if (classes.size() == 1) return classes.front().second;

    std::vector<PlaneMap> quads;
    for (auto& [c, m] : classes)
        if (is_quadrangulation(m)) quads.push_back(m);
    if (quads.size() == 1) return quads.front();
    throw MapError(MapErrc::ambiguous_multiedge_pairing,
                   std::to_string(classes.size()) + " non-isomorphic sphere completions");
}

} // namespace

std::vector<PlaneMap> parse_planar_code(const std::string& bytes) {
    if (bytes.size() < kHeaderLen || bytes.compare(0, kHeaderLen, kHeader) != 0)
        throw MapError(MapErrc::bad_header, "missing '>>planar_code<<'");

    std::vector<PlaneMap> out;
    size_t pos = kHeaderLen;
    while (pos < bytes.size()) {
        int n = static_cast<unsigned char>(bytes[pos++]);
        if (n == 0) throw MapError(MapErrc::truncated_record, "record with n = 0");
        NeighborRecord rec;
        rec.ccw.resize(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> cw;
            for (;;) {
                if (pos >= bytes.size())
                    throw MapError(MapErrc::truncated_record, "record ends inside a neighbor list");
                int b = static_cast<unsigned char>(bytes[pos++]);
                if (b == 0) break;
                if (b > n)
                    throw MapError(MapErrc::truncated_record, "neighbor id out of range");
                cw.push_back(b - 1);
            }
            // Clockwise on the wire, counterclockwise inside.
            if (!cw.empty()) {
                rec.ccw[v].push_back(cw.front());
                for (size_t i = cw.size(); i > 1; --i) rec.ccw[v].push_back(cw[i - 1]);
            }
        }
        out.push_back(realize_record(rec));
    }
    return out;
}

std::string emit_planar_code(const std::vector<PlaneMap>& maps) {
    std::string out = kHeader;
    for (const PlaneMap& m : maps) {
        if (m.vertex_count() > 255)
            throw MapError(MapErrc::bad_header, "order exceeds the planar_code range");
        out.push_back(static_cast<char>(m.vertex_count()));
        for (int v = 0; v < m.vertex_count(); ++v) {
            std::vector<Dart> ccw = m.darts_at(v);
            // Counterclockwise inside, clockwise on the wire.
            std::vector<Dart> cw;
            if (!ccw.empty()) {
                cw.push_back(ccw.front());
                for (size_t i = ccw.size(); i > 1; --i) cw.push_back(ccw[i - 1]);
            }
            for (Dart d : cw)
                out.push_back(static_cast<char>(m.vertex_of(d ^ 1) + 1));
            out.push_back('\0');
        }
    }
    return out;
}

} // namespace muq
