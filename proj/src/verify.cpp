#include "muq/verify.hpp"

#include <chrono>
#include <sstream>

#include "muq/fixtures.hpp"
#include "muq/halves.hpp"
#include "muq/io_rotsys.hpp"
#include "muq/predicates.hpp"

namespace muq {

namespace {

std::string indent_block(const std::string& text) {
    std::istringstream in(text);
    std::string line, out;
    while (std::getline(in, line)) out += "    " + line + "\n";
    return out;
}

void embed_witness(Report& rep, const std::string& label, const PlaneMap& m) {
    rep.lines.push_back(label + " code=" + code_to_hex(canonical_code(m).bytes));
    std::string block = indent_block(emit_rotsys_one(m));
    std::istringstream in(block);
    std::string line;
    while (std::getline(in, line)) rep.lines.push_back(line);
}

} // namespace

std::string Report::render() const {
    std::string out = "check: " + check + "\n";
    for (const auto& l : lines) out += l + "\n";
    out += "result: ";
    out += pass ? (complete ? "PASS" : "INCOMPLETE") : "FAIL";
    out += "\n";
    return out;
}

std::optional<Code> find_parallel_irreducible(const std::vector<Code>& muqs) {
    for (const auto& c : muqs) {
        PlaneMap m = map_from_code(c);
        if (is_irreducible(m) && !parallel_classes(m).empty()) return c;
    }
    return std::nullopt;
}

Report verify_min_order_8(int n_max, int jobs) {
    Report rep{.check = "min8"};
    rep.pass = true;
    if (n_max > 7) n_max = 7;

    LevelStepper stepper(jobs);
    for (int n = 3; n <= n_max; ++n) {
        while (stepper.k() < n - 2) stepper.step();
        std::vector<Code> muqs = muqs_from_level(stepper.level(), jobs);
        std::vector<Code> irreducibles = filter_muqs(muqs, {FilterSpec::Kind::irreducible, 0});
        std::vector<Code> mindeg3 = filter_muqs(muqs, {FilterSpec::Kind::min_degree, 3});
        rep.lines.push_back("order " + std::to_string(n) + ": muqs=" +
                            std::to_string(muqs.size()) + " irreducible=" +
                            std::to_string(irreducibles.size()) + " min-degree-3=" +
                            std::to_string(mindeg3.size()));
        if (!mindeg3.empty()) {
            rep.pass = false;
            embed_witness(rep, "counterexample (min degree 3 below order 8)",
                          map_from_code(mindeg3.front()));
        }
        if (n == 3) {
            if (irreducibles.size() != 1 ||
                !is_isomorphic(map_from_code(irreducibles[0]), fixtures::p2())) {
                rep.pass = false;
                rep.lines.push_back("order 3 irreducibles are not exactly the order-3 path");
            } else {
                embed_witness(rep, "order-3 witness", fixtures::p2());
            }
        } else if (!irreducibles.empty()) {
            rep.pass = false;
            embed_witness(rep, "unexpected irreducible", map_from_code(irreducibles.front()));
        }
    }
    return rep;
}

Report verify_two_irreducibles(int jobs) {
    Report rep{.check = "two-irreducibles"};
    rep.pass = true;

    const PlaneMap cube = fixtures::cube();
    const PlaneMap f10 = fixtures::f10();

    LevelStepper stepper(jobs);
    for (int n = 8; n <= 10; ++n) {
        while (stepper.k() < n - 2) stepper.step();
        std::vector<Code> irr =
            filter_muqs(muqs_from_level(stepper.level(), jobs), {FilterSpec::Kind::irreducible, 0});
        const std::int64_t expect = n == 9 ? 0 : 1;
        rep.lines.push_back("order " + std::to_string(n) +
                            ": irreducible=" + std::to_string(irr.size()) +
                            " expected=" + std::to_string(expect));
        if (static_cast<std::int64_t>(irr.size()) != expect) {
            rep.pass = false;
            continue;
        }
        if (n == 9) continue;

        PlaneMap found = map_from_code(irr.front());
        const PlaneMap& fixture = n == 8 ? cube : f10;
        const char* name = n == 8 ? "order-8 fixture" : "order-10 fixture";
        if (!is_simple_quadrangulation(found)) {
            rep.pass = false;
            rep.lines.push_back(std::string(name) + ": witness is not simple");
        }
        if (!is_isomorphic(found, fixture)) {
            rep.pass = false;
            rep.lines.push_back(std::string(name) + ": witness does not match");
        } else {
            embed_witness(rep, name, fixture);
            rep.lines.push_back(std::string("    symmetries: with-reflections=") +
                                std::to_string(automorphism_count(fixture, true)) +
                                " orientation-only=" +
                                std::to_string(automorphism_count(fixture, false)));
        }
    }
    return rep;
}

Report verify_theorem1(int n_max, const VerifyOptions& opts) {
    Report rep{.check = "theorem1"};
    rep.pass = true;

    Deadline deadline;
    if (opts.budget_seconds > 0)
        deadline = std::chrono::steady_clock::now() +
                   std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                       std::chrono::duration<double>(opts.budget_seconds));

    LevelStepper stepper(opts.jobs, opts.checkpoint_dir, opts.progress);
    stepper.try_resume(n_max - 2);
    if (stepper.k() > 0)
        rep.lines.push_back("resumed from checkpoint at k=" + std::to_string(stepper.k()));

    // Orders below the resume point were verified by the run that wrote the
    // checkpoint; re-verification starts at the current level.
    for (int n = stepper.k() + 2; n <= n_max; ++n) {
        if (n >= 3) {
            std::vector<Code> muqs = muqs_from_level(stepper.level(), opts.jobs);
            std::optional<Code> bad = find_parallel_irreducible(muqs);
            rep.lines.push_back("order " + std::to_string(n) + ": muqs=" +
                                std::to_string(muqs.size()) + " parallel-irreducible=" +
                                std::to_string(bad ? 1 : 0));
            if (bad) {
                rep.pass = false;
                embed_witness(rep, "counterexample", map_from_code(*bad));
                return rep;
            }
        }
        if (n == n_max) break;
        if (!stepper.step(deadline)) {
            rep.complete = false;
            rep.lines.push_back("budget exhausted while expanding to k=" +
                                std::to_string(stepper.k() + 1) + "; progress checkpointed" +
                                (opts.checkpoint_dir.empty() ? " (no checkpoint dir)" : ""));
            return rep;
        }
    }
    return rep;
}

Report verify_upper_bound_14() {
    Report rep{.check = "upper14"};
    rep.pass = true;

    PlaneMap cube = fixtures::cube();
    std::vector<Half> halves = halves_of(cube);
    rep.lines.push_back("order-8 irreducible: halves up to symmetry = " +
                        std::to_string(halves.size()));
    if (halves.empty()) {
        rep.pass = false;
        rep.lines.push_back("no half found on the order-8 irreducible");
        return rep;
    }

    bool emitted = false;
    for (size_t h = 0; h < halves.size(); ++h) {
        for (int side = 0; side < 2; ++side) {
            PlaneMap p = double_half(halves[h], side);
            auto classes = parallel_classes(p);
            bool ok = p.vertex_count() == 14 && p.edge_count() == 24 &&
                      is_quadrangulation(p) && is_irreducible(p) && !classes.empty();
            std::string regions;
            if (!classes.empty()) {
                for (const auto& interior : classes.front().region_interiors)
                    regions += (regions.empty() ? "" : ",") + std::to_string(interior.size());
            }
            int dv = ok ? p.degree(classes.front().v) : -1;
            int dw = ok ? p.degree(classes.front().w) : -1;
            ok = ok && dv == 6 && dw == 6;
            rep.lines.push_back("half " + std::to_string(h) + " side " + std::to_string(side) +
                                ": order=" + std::to_string(p.vertex_count()) +
                                " edges=" + std::to_string(p.edge_count()) +
                                " marked-degrees=" + std::to_string(dv) + "," +
                                std::to_string(dw) + " regions=[" + regions + "]" +
                                (ok ? "" : "  ** FAILED **"));
            if (!ok) rep.pass = false;
            if (ok && !emitted) {
                embed_witness(rep, "order-14 parallel irreducible", p);
                emitted = true;
            }
        }
    }
    if (!emitted) rep.pass = false;
    return rep;
}

std::vector<CensusRecord> census(int n_min, int n_max, int jobs) {
    std::vector<CensusRecord> out;
    LevelStepper stepper(jobs);
    for (int n = 3; n <= n_max; ++n) {
        while (stepper.k() < n - 2) stepper.step();
        if (n < n_min) continue;
        CensusRecord rec;
        rec.n = n;
        for (const Code& c : muqs_from_level(stepper.level(), jobs)) {
            PlaneMap m = map_from_code(c);
            ++rec.total;
            bool parallel = !parallel_classes(m).empty();
            bool irreducible = is_irreducible(m);
            if (is_simple_quadrangulation(m)) ++rec.simple_count;
            if (parallel) ++rec.parallel_count;
            if (irreducible) ++rec.irreducible_count;
            if (parallel && irreducible) ++rec.parallel_irreducible_count;
            int md = m.min_degree();
            if (md >= 0 && md < 4) ++rec.min_degree_histogram[md];
        }
        out.push_back(rec);
    }
    return out;
}

std::string render_census(const std::vector<CensusRecord>& records) {
    std::string out =
        "n\ttotal\tsimple\tparallel\tirreducible\tparallel_irreducible\tmindeg1\tmindeg2\tmindeg3\n";
    for (const auto& r : records) {
        out += std::to_string(r.n) + "\t" + std::to_string(r.total) + "\t" +
               std::to_string(r.simple_count) + "\t" + std::to_string(r.parallel_count) + "\t" +
               std::to_string(r.irreducible_count) + "\t" +
               std::to_string(r.parallel_irreducible_count) + "\t" +
               std::to_string(r.min_degree_histogram[1]) + "\t" +
               std::to_string(r.min_degree_histogram[2]) + "\t" +
               std::to_string(r.min_degree_histogram[3]) + "\n";
    }
    return out;
}

} // namespace muq
