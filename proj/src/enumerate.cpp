#include "muq/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cassert>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "muq/fixtures.hpp"
#include "muq/map_edit.hpp"
#include "muq/predicates.hpp"

namespace muq {

namespace {

constexpr int kDeadlineStride = 256;

bool past(const Deadline& deadline) {
    return deadline && std::chrono::steady_clock::now() > *deadline;
}

} // namespace

void append_child_codes(const PlaneMap& m, Canonicalizer& canon, std::vector<Code>& out) {
    if (m.dart_count() == 0) {
        // The seed map has no corners; its children are the two one-edge maps.
        out.push_back(canon.code(fixtures::k2(), true));
        out.push_back(canon.code(fixtures::single_loop(), true));
        return;
    }
    FaceSet fs = m.faces();
    for (const auto& walk : fs.walks) {
        for (size_t i = 0; i < walk.size(); ++i)
            for (size_t j = i; j < walk.size(); ++j)
                out.push_back(canon.code(add_edge_in_face(m, walk[i], walk[j]), true));
    }
    for (int d = 0; d < m.dart_count(); ++d)
        out.push_back(canon.code(add_pendant(m, d), true));
}

bool expand_level_serial(const std::vector<Code>& level, std::vector<Code>& out,
                         Deadline deadline) {
    Canonicalizer canon;
    std::unordered_set<Code> seen;
    std::vector<Code> children;
    for (size_t i = 0; i < level.size(); ++i) {
        if (i % kDeadlineStride == 0 && past(deadline)) return false;
        children.clear();
        append_child_codes(map_from_code(level[i]), canon, children);
        for (auto& c : children) seen.insert(std::move(c));
    }
    out.assign(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return true;
}

bool expand_level_parallel(const std::vector<Code>& level, int jobs, std::vector<Code>& out,
                           Deadline deadline) {
#ifndef _OPENMP
    (void)jobs;
    return expand_level_serial(level, out, deadline);
#else
    constexpr int kShards = 64;
    std::array<std::unordered_set<Code>, kShards> shards;
    std::array<std::mutex, kShards> locks;
    std::atomic<bool> aborted{false};
    std::hash<std::string> hasher;

#pragma omp parallel num_threads(jobs)
    {
        Canonicalizer canon;
        std::vector<Code> children;
#pragma omp for schedule(dynamic, 16)
        for (long i = 0; i < static_cast<long>(level.size()); ++i) {
            if (aborted.load(std::memory_order_relaxed)) continue;
            if (i % kDeadlineStride == 0 && past(deadline)) {
                aborted.store(true, std::memory_order_relaxed);
                continue;
            }
            children.clear();
            append_child_codes(map_from_code(level[i]), canon, children);
            for (auto& c : children) {
                size_t s = hasher(c) % kShards;
                std::lock_guard<std::mutex> g(locks[s]);
                shards[s].insert(std::move(c));
            }
        }
    }
    if (aborted.load()) return false;

    size_t total = 0;
    for (const auto& s : shards) total += s.size();
    out.clear();
    out.reserve(total);
    for (auto& s : shards)
        for (const auto& c : s) out.push_back(c);
    std::sort(out.begin(), out.end());
    return true;
#endif
}

bool expand_level(const std::vector<Code>& level, int jobs, std::vector<Code>& out,
                  Deadline deadline) {
    if (jobs > 1) return expand_level_parallel(level, jobs, out, deadline);
    return expand_level_serial(level, out, deadline);
}

LevelStepper::LevelStepper(int jobs, std::string checkpoint_dir, ProgressFn progress)
    : jobs_(jobs), dir_(std::move(checkpoint_dir)), progress_(std::move(progress)) {
    Canonicalizer canon;
    level_ = {canon.code(PlaneMap::single_vertex(), true)};
}

namespace {

constexpr char kCheckpointMagic[] = "MUQLEVEL1\n";

std::string checkpoint_path(const std::string& dir, int k) {
    return dir + "/level_" + std::to_string(k) + ".chk";
}

bool load_checkpoint(const std::string& path, int expect_k, std::vector<Code>& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    char magic[sizeof(kCheckpointMagic) - 1];
    in.read(magic, sizeof(magic));
    if (!in || std::string(magic, sizeof(magic)) != kCheckpointMagic) return false;
    std::uint32_t k = 0;
    std::uint64_t count = 0;
    in.read(reinterpret_cast<char*>(&k), sizeof(k));
    in.read(reinterpret_cast<char*>(&count), sizeof(count));
    if (!in || static_cast<int>(k) != expect_k) return false;
    std::vector<Code> codes;
    codes.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        std::uint16_t len = 0;
        in.read(reinterpret_cast<char*>(&len), sizeof(len));
        if (!in) return false;
        std::string bytes(len, '\0');
        in.read(bytes.data(), len);
        if (!in) return false;
        codes.push_back(std::move(bytes));
    }
    out = std::move(codes);
    return true;
}

} // namespace

void LevelStepper::save_checkpoint() const {
    if (dir_.empty()) return;
    std::filesystem::create_directories(dir_);
    std::string path = checkpoint_path(dir_, k_);
    std::string tmp = path + ".tmp";
    {
        std::ofstream outf(tmp, std::ios::binary | std::ios::trunc);
        outf.write(kCheckpointMagic, sizeof(kCheckpointMagic) - 1);
        std::uint32_t k = static_cast<std::uint32_t>(k_);
        std::uint64_t count = level_.size();
        outf.write(reinterpret_cast<const char*>(&k), sizeof(k));
        outf.write(reinterpret_cast<const char*>(&count), sizeof(count));
        for (const auto& c : level_) {
            std::uint16_t len = static_cast<std::uint16_t>(c.size());
            outf.write(reinterpret_cast<const char*>(&len), sizeof(len));
            outf.write(c.data(), len);
        }
        if (!outf) return;
    }
    std::filesystem::rename(tmp, path);
}

bool LevelStepper::try_resume(int max_k) {
    if (dir_.empty()) return false;
    for (int k = max_k; k > k_; --k) {
        std::vector<Code> codes;
        if (load_checkpoint(checkpoint_path(dir_, k), k, codes)) {
            k_ = k;
            level_ = std::move(codes);
            return true;
        }
    }
    return false;
}

bool LevelStepper::step(Deadline deadline) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Code> next;
    if (!expand_level(level_, jobs_, next, deadline)) return false;
    level_ = std::move(next);
    ++k_;
    save_checkpoint();
    if (progress_) {
        LevelStats stats;
        stats.k = k_;
        stats.classes = level_.size();
        stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        progress_(stats);
    }
    return true;
}

std::vector<Code> enumerate_plane_multigraphs(int k, int jobs) {
    LevelStepper stepper(jobs);
    while (stepper.k() < k) {
        bool ok = stepper.step();
        assert(ok);
        (void)ok;
    }
    return stepper.level();
}

PlaneMap radial_graph(const PlaneMap& h) {
    assert(h.dart_count() > 0);
    FaceSet fs = h.faces();
    const int D = h.dart_count();
    const int nh = h.vertex_count();
    std::vector<int> sigma(2 * D), vertex_of(2 * D);
    for (int d = 0; d < D; ++d) {
        sigma[2 * d] = 2 * h.sigma(d);
        vertex_of[2 * d] = h.vertex_of(d);
        sigma[2 * d + 1] = 2 * h.phi(d) + 1;
        vertex_of[2 * d + 1] = nh + fs.face_of[d];
    }
    return PlaneMap::from_parts(nh + static_cast<int>(fs.walks.size()),
                                std::move(sigma), std::move(vertex_of));
}

std::vector<Code> muqs_from_level(const std::vector<Code>& level, int jobs) {
    std::vector<Code> out(level.size());
#ifdef _OPENMP
#pragma omp parallel num_threads(jobs > 1 ? jobs : 1)
    {
        Canonicalizer canon;
#pragma omp for schedule(dynamic, 64)
        for (long i = 0; i < static_cast<long>(level.size()); ++i)
            out[i] = canon.code(radial_graph(map_from_code(level[i])), true);
    }
#else
    (void)jobs;
    Canonicalizer canon;
    for (size_t i = 0; i < level.size(); ++i)
        out[i] = canon.code(radial_graph(map_from_code(level[i])), true);
#endif
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Code> enumerate_muqs(int n, int jobs) {
    assert(n >= 3);
    return muqs_from_level(enumerate_plane_multigraphs(n - 2, jobs), jobs);
}

FilterSpec parse_filter(const std::string& text) {
    if (text == "simple") return {FilterSpec::Kind::simple, 0};
    if (text == "parallel") return {FilterSpec::Kind::parallel, 0};
    if (text == "irreducible") return {FilterSpec::Kind::irreducible, 0};
    if (text == "parallel-irreducible") return {FilterSpec::Kind::parallel_irreducible, 0};
    const std::string prefix = "min-degree>=";
    if (text.rfind(prefix, 0) == 0) {
        try {
            int d = std::stoi(text.substr(prefix.size()));
            return {FilterSpec::Kind::min_degree, d};
        } catch (...) {
        }
    }
    throw MapError(MapErrc::unknown_predicate, "no filter named '" + text + "'");
}

bool muq_matches(const PlaneMap& m, const FilterSpec& spec) {
    switch (spec.kind) {
        case FilterSpec::Kind::simple:
            return is_simple_quadrangulation(m);
        case FilterSpec::Kind::parallel:
            return !parallel_classes(m).empty();
        case FilterSpec::Kind::irreducible:
            return is_irreducible(m);
        case FilterSpec::Kind::parallel_irreducible:
            return is_irreducible(m) && !parallel_classes(m).empty();
        case FilterSpec::Kind::min_degree:
            return m.min_degree() >= spec.degree;
    }
    return false;
}

std::vector<Code> filter_muqs(const std::vector<Code>& muqs, const FilterSpec& spec) {
    std::vector<Code> out;
    for (const auto& c : muqs)
        if (muq_matches(map_from_code(c), spec)) out.push_back(c);
    return out;
}

std::int64_t rooted_planar_map_count(int k) {
    // 2 * 3^k * C(2k, k) / ((k+1)(k+2))
    std::int64_t binom = 1;
    for (int i = 1; i <= k; ++i) binom = binom * (k + i) / i;   // exact at each step
    std::int64_t pow3 = 1;
    for (int i = 0; i < k; ++i) pow3 *= 3;
    std::int64_t num = 2 * pow3 * binom;
    assert(num % (static_cast<std::int64_t>(k + 1) * (k + 2)) == 0);
    return num / (static_cast<std::int64_t>(k + 1) * (k + 2));
}

} // namespace muq
