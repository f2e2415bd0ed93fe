/*
 * Runnable checks over the enumerated census:
 *   min8            — below order 8 the only irreducible MUQ is the order-3
 *                     path, and no MUQ of order <= 7 has minimum degree 3
 *   two-irreducibles— orders 8..10 hold exactly one irreducible each at 8
 *                     and 10, both simple, matching the built-in fixtures
 *   theorem1        — no parallel irreducible MUQ up to the given order
 *   upper14         — doubling the order-8 irreducible yields an order-14
 *                     parallel irreducible witness
 * plus per-order census tables. Reports embed the canonical codes and rotsys
 * text of every witness, and re-runs are byte-identical.
 */
#ifndef MUQ_VERIFY_HPP
#define MUQ_VERIFY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "muq/enumerate.hpp"

namespace muq {

struct Report {
    std::string check;
    bool pass = false;
    bool complete = true;                 // false only for budget-stopped runs
    std::vector<std::string> lines;

    std::string render() const;
};

struct CensusRecord {
    int n = 0;
    std::int64_t total = 0;
    std::int64_t simple_count = 0;
    std::int64_t parallel_count = 0;
    std::int64_t irreducible_count = 0;
    std::int64_t parallel_irreducible_count = 0;
    std::array<std::int64_t, 4> min_degree_histogram{};   // index = min degree
};

struct VerifyOptions {
    int jobs = 1;
    std::string checkpoint_dir;       // level checkpoints, empty = none
    double budget_seconds = 0;        // 0 = unlimited
    ProgressFn progress;              // per-level reporting
};

/// First parallel irreducible in a sorted MUQ stream, if any. The theorem1
/// detector; exposed so tests can feed synthetic counterexamples through it.
std::optional<Code> find_parallel_irreducible(const std::vector<Code>& muqs);

Report verify_min_order_8(int n_max = 7, int jobs = 1);
Report verify_two_irreducibles(int jobs = 1);
Report verify_theorem1(int n_max, const VerifyOptions& opts = {});
Report verify_upper_bound_14();

std::vector<CensusRecord> census(int n_min, int n_max, int jobs = 1);
std::string render_census(const std::vector<CensusRecord>& records);

} // namespace muq

#endif
