/*
 * Isomorph-free generation of connected plane multigraphs by edge count, and
 * of multiquadrangulations by order through the radial transform.
 *
 * Level k holds one canonical code per isomorphism class (reflections
 * identified) of connected plane maps with k edges, sorted. Level k+1 is the
 * closure of two growth moves applied to every level-k map:
 *   (a) a new edge between two corners of one face (loops and parallel
 *       edges included; the corner pair may coincide), and
 *   (b) a new pendant vertex in a corner.
 * Deleting a non-bridge edge inverts (a); a map whose edges are all bridges
 * is a tree and loses a leaf to invert (b), so every class is reached.
 *
 * The expansion exists twice: a plain serial reference and an OpenMP kernel
 * sharding the frontier. Both produce identical sorted levels; tests and the
 * bench_expand tool compare them.
 */
#ifndef MUQ_ENUMERATE_HPP
#define MUQ_ENUMERATE_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "muq/canonical.hpp"
#include "muq/plane_map.hpp"

namespace muq {

using Code = std::string;   // canonical_code(..., reflect=true).bytes

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

/// Codes of all children of m under moves (a) and (b), duplicates included.
void append_child_codes(const PlaneMap& m, Canonicalizer& canon, std::vector<Code>& out);

/// One expansion step. Returns false (and leaves `out` unspecified) only
/// when the deadline fired mid-level.
bool expand_level_serial(const std::vector<Code>& level, std::vector<Code>& out,
                         Deadline deadline = {});
bool expand_level_parallel(const std::vector<Code>& level, int jobs, std::vector<Code>& out,
                           Deadline deadline = {});
bool expand_level(const std::vector<Code>& level, int jobs, std::vector<Code>& out,
                  Deadline deadline = {});

struct LevelStats {
    int k = 0;
    std::uint64_t classes = 0;
    double seconds = 0.0;
};
using ProgressFn = std::function<void(const LevelStats&)>;

/// Drives the level-by-level growth, optionally persisting each completed
/// level to <dir>/level_<k>.chk and resuming from the highest one found.
class LevelStepper {
public:
    explicit LevelStepper(int jobs = 1, std::string checkpoint_dir = {},
                          ProgressFn progress = {});

    int k() const { return k_; }
    const std::vector<Code>& level() const { return level_; }

    /// Loads the highest checkpoint with k <= max_k, if any.
    bool try_resume(int max_k);

    /// Advances one level; false when the deadline fired (level unchanged).
    bool step(Deadline deadline = {});

private:
    void save_checkpoint() const;

    int jobs_;
    std::string dir_;
    ProgressFn progress_;
    int k_ = 0;
    std::vector<Code> level_;
};

/// All connected plane multigraphs with exactly k edges, sorted codes.
std::vector<Code> enumerate_plane_multigraphs(int k, int jobs = 1);

/// Vertex-face incidence map of h (one edge per dart of h, joining the
/// dart's vertex to the face on its right). Always a multiquadrangulation
/// with n = e(h)+2, e = 2 e(h); equal for h and dual(h). Needs e(h) >= 1.
PlaneMap radial_graph(const PlaneMap& h);

/// Radial images of a level, deduplicated and sorted: exactly the MUQs of
/// order k+2 when the level is enumerate_plane_multigraphs(k).
std::vector<Code> muqs_from_level(const std::vector<Code>& level, int jobs = 1);

/// One representative per isomorphism class of MUQs of order n >= 3.
std::vector<Code> enumerate_muqs(int n, int jobs = 1);

struct FilterSpec {
    enum class Kind { simple, parallel, irreducible, parallel_irreducible, min_degree };
    Kind kind = Kind::simple;
    int degree = 0;
};

/// Accepted forms: simple | parallel | irreducible | parallel-irreducible |
/// min-degree>=<d>. Throws UnknownPredicate.
FilterSpec parse_filter(const std::string& text);
bool muq_matches(const PlaneMap& m, const FilterSpec& spec);
std::vector<Code> filter_muqs(const std::vector<Code>& muqs, const FilterSpec& spec);

/// Rooted planar maps with k edges: 2 * 3^k * (2k)! / (k! (k+2)!).
std::int64_t rooted_planar_map_count(int k);

} // namespace muq

#endif
