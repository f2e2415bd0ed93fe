/*
 * Complete isomorphism invariant for connected plane maps.
 *
 * The code of a map is the lexicographic minimum, over all start darts and
 * (when reflections are allowed) both rotation senses, of the serialized
 * pair (sigma_s, alpha) under the breadth-first relabeling grown from that
 * start. Two maps have equal codes iff they are isomorphic: orientation-
 * preserving only when reflect is false, up to reflection when true.
 *
 * Byte layout: u16 dart count, then for each relabeled dart its sigma image
 * and alpha image, one byte each when the dart count fits a byte, two
 * otherwise. The code is itself a faithful map encoding (see map_from_code),
 * which the enumeration uses as its compact storage format.
 */
#ifndef MUQ_CANONICAL_HPP
#define MUQ_CANONICAL_HPP

#include <compare>
#include <string>
#include <vector>

#include "muq/plane_map.hpp"

namespace muq {

struct CanonicalCode {
    std::string bytes;
    bool reflect = true;

    friend bool operator==(const CanonicalCode& a, const CanonicalCode& b) {
        return a.reflect == b.reflect && a.bytes == b.bytes;
    }
    friend std::strong_ordering operator<=>(const CanonicalCode& a, const CanonicalCode& b) {
        if (int c = a.bytes.compare(b.bytes); c != 0)
            return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        return a.reflect <=> b.reflect;
    }
};

/// The dart relabeling realizing the minimal code: order[i] is the original
/// dart with canonical label i. When mirrored is set the minimum was reached
/// in the reversed sense, i.e. over sigma^-1.
struct CanonicalLabeling {
    std::vector<int> order;
    bool mirrored = false;
};

/// Reusable scratch space for the hot per-map loops.
class Canonicalizer {
public:
    /// Minimal serialized code; O(darts^2) with prefix pruning.
    std::string code(const PlaneMap& m, bool reflect);

    CanonicalLabeling labeling(const PlaneMap& m, bool reflect);

    /// Same minimization with one indicator entry per dart marking the given
    /// edge; equal iff the (map, marked edge) pairs are isomorphic.
    std::string code_marked_edge(const PlaneMap& m, int marked_edge, bool reflect);

    /// Order of the automorphism group in the chosen regime, counted as the
    /// number of (start dart, sense) pairs reaching the minimal code. With
    /// reflect, orientation-reversing symmetries count separately even when
    /// they act on darts like an orientation-preserving one (a map with
    /// sigma = sigma^-1 is its own mirror through the surface).
    int automorphism_count(const PlaneMap& m, bool reflect);

private:
    std::string run(const PlaneMap& m, bool reflect, int marked_edge, int* aut_count);

    std::vector<int> sigma_inv_;
    std::vector<int> label_;
    std::vector<int> order_;
    std::string candidate_;
    std::string best_;
    int best_start_ = 0;
    bool best_mirrored_ = false;
};

CanonicalCode canonical_code(const PlaneMap& m, bool reflect = true);
bool is_isomorphic(const PlaneMap& a, const PlaneMap& b, bool reflect = true);
int automorphism_count(const PlaneMap& m, bool reflect);

/// Rebuilds a map from a code produced by canonical_code (or any string in
/// the same layout). The result is the canonical representative itself.
PlaneMap map_from_code(const std::string& bytes);

std::string code_to_hex(const std::string& bytes);

} // namespace muq

#endif
