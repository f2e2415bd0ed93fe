/*
 * Command-line front end.
 *
 * Exit codes: 0 success, 1 verification found a counterexample, 2 usage
 * error, 3 document format error. All stdout output is deterministic for a
 * given invocation (maps sorted by canonical code); progress and marked-
 * vertex notes go to stderr.
 */
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "muq/canonical.hpp"
#include "muq/enumerate.hpp"
#include "muq/halves.hpp"
#include "muq/io_planar_code.hpp"
#include "muq/io_rotsys.hpp"
#include "muq/map_edit.hpp"
#include "muq/oracle.hpp"
#include "muq/predicates.hpp"
#include "muq/verify.hpp"

namespace {

using namespace muq;

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFormat = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool is_format_errc(MapErrc c) {
    switch (c) {
        case MapErrc::bad_header:
        case MapErrc::truncated_record:
        case MapErrc::ambiguous_multiedge_pairing:
        case MapErrc::non_planar_pairing:
        case MapErrc::syntax_error:
        case MapErrc::inconsistent_incidence:
        case MapErrc::malformed_pairing:
        case MapErrc::not_connected:
        case MapErrc::not_genus_zero:
            return true;
        default:
            return false;
    }
}

std::string read_stream(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<PlaneMap> read_maps(const std::string& path) {
    std::string bytes = read_stream(path);
    if (bytes.rfind(">>planar_code<<", 0) == 0) return parse_planar_code(bytes);
    return parse_rotsys(bytes);
}

void write_output(const std::string& path, const std::string& bytes) {
    if (path == "-") {
        std::cout << bytes;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << bytes;
}

std::string render_maps(const std::vector<PlaneMap>& maps, const std::string& format) {
    if (format == "rotsys") return emit_rotsys(maps);
    if (format == "planar_code") return emit_planar_code(maps);
    throw UsageError("unknown format '" + format + "'");
}

std::vector<PlaneMap> decode_all(const std::vector<Code>& codes) {
    std::vector<PlaneMap> maps;
    maps.reserve(codes.size());
    for (const auto& c : codes) maps.push_back(map_from_code(c));
    return maps;
}

ProgressFn stderr_progress() {
    return [](const LevelStats& s) {
        std::fprintf(stderr, "checkpoint: k=%d classes=%llu elapsed=%.2fs\n", s.k,
                     static_cast<unsigned long long>(s.classes), s.seconds);
    };
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"plane multiquadrangulation census and construction toolkit"};
    app.require_subcommand(1);

    // enumerate
    auto* cmd_enum = app.add_subcommand("enumerate", "isomorph-free MUQs of one order");
    int en_n = 0, en_jobs = 1;
    std::string en_filter, en_format = "rotsys", en_out = "-", en_checkpoint;
    bool en_count_only = false;
    cmd_enum->add_option("-n,--order", en_n, "order (vertex count), >= 3")->required();
    cmd_enum->add_option("--filter", en_filter,
                         "simple | parallel | irreducible | parallel-irreducible | min-degree>=D");
    cmd_enum->add_option("--format", en_format, "rotsys | planar_code")
        ->check(CLI::IsMember({"rotsys", "planar_code"}));
    cmd_enum->add_option("-o,--output", en_out, "output file, - for stdout");
    cmd_enum->add_flag("--count-only", en_count_only, "print only the class count");
    cmd_enum->add_option("--jobs,-j", en_jobs, "worker threads");
    cmd_enum->add_option("--checkpoint", en_checkpoint, "directory for level checkpoints");

    // census
    auto* cmd_census = app.add_subcommand("census", "per-order census table");
    int ce_min = 3, ce_max = 0, ce_jobs = 1;
    std::string ce_out = "-";
    cmd_census->add_option("--min", ce_min, "first order");
    cmd_census->add_option("--max", ce_max, "last order")->required();
    cmd_census->add_option("-o,--output", ce_out, "output file");
    cmd_census->add_option("--jobs,-j", ce_jobs, "worker threads");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run a built-in check");
    std::string vf_check, vf_checkpoint;
    int vf_max_n = -1, vf_jobs = 1;
    double vf_budget = 0;
    bool vf_stretch = false;
    cmd_verify->add_option("check", vf_check, "min8 | two-irreducibles | theorem1 | upper14 | all")
        ->required()
        ->check(CLI::IsMember({"min8", "two-irreducibles", "theorem1", "upper14", "all"}));
    cmd_verify->add_option("--max-n", vf_max_n, "largest order checked");
    cmd_verify->add_flag("--stretch", vf_stretch, "allow orders beyond 11 for theorem1");
    cmd_verify->add_option("--max-seconds", vf_budget, "soft time budget; checkpoint and stop");
    cmd_verify->add_option("--checkpoint", vf_checkpoint, "directory for level checkpoints");
    cmd_verify->add_option("--jobs,-j", vf_jobs, "worker threads");

    // canon
    auto* cmd_canon = app.add_subcommand("canon", "canonical codes in hex");
    std::string ca_input = "-";
    bool ca_no_reflect = false;
    cmd_canon->add_option("input", ca_input, "document file, - for stdin");
    cmd_canon->add_flag("--no-reflect", ca_no_reflect, "distinguish mirror images");

    // iso
    auto* cmd_iso = app.add_subcommand("iso", "compare the first maps of two documents");
    std::string iso_a, iso_b;
    bool iso_no_reflect = false;
    cmd_iso->add_option("a", iso_a)->required();
    cmd_iso->add_option("b", iso_b)->required();
    cmd_iso->add_flag("--no-reflect", iso_no_reflect, "distinguish mirror images");

    // radial / dual
    auto* cmd_radial = app.add_subcommand("radial", "vertex-face incidence map of each input");
    std::string ra_input = "-", ra_format = "rotsys", ra_out = "-";
    cmd_radial->add_option("input", ra_input);
    cmd_radial->add_option("--format", ra_format)->check(CLI::IsMember({"rotsys", "planar_code"}));
    cmd_radial->add_option("-o,--output", ra_out);

    auto* cmd_dual = app.add_subcommand("dual", "dual map of each input");
    std::string du_input = "-", du_format = "rotsys", du_out = "-";
    cmd_dual->add_option("input", du_input);
    cmd_dual->add_option("--format", du_format)->check(CLI::IsMember({"rotsys", "planar_code"}));
    cmd_dual->add_option("-o,--output", du_out);

    // double
    auto* cmd_double = app.add_subcommand("double", "double a half along its marked edge");
    std::string db_input = "-", db_out = "-", db_side = "both";
    std::vector<int> db_mark;
    cmd_double->add_option("input", db_input, "document; first map is used");
    cmd_double->add_option("--mark", db_mark, "the two marked vertices (1-based document ids)")
        ->expected(2)
        ->required();
    cmd_double->add_option("--side", db_side, "0 | 1 | both")
        ->check(CLI::IsMember({"0", "1", "both"}));
    cmd_double->add_option("-o,--output", db_out);

    // extract
    auto* cmd_extract = app.add_subcommand("extract", "extract a half from a parallel MUQ");
    std::string ex_input = "-", ex_out = "-", ex_region = "fewest";
    std::vector<int> ex_endpoints;
    cmd_extract->add_option("input", ex_input, "document; first map is used");
    cmd_extract->add_option("--endpoints", ex_endpoints,
                            "endpoints of the parallel class (1-based document ids); "
                            "default: first class")
        ->expected(2);
    cmd_extract->add_option("--region", ex_region, "fewest | <index>");
    cmd_extract->add_option("-o,--output", ex_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*cmd_enum) {
            if (en_n < 3) throw UsageError("order must be at least 3");
            if (en_n > 255) throw UsageError("orders beyond 255 are unsupported");
            LevelStepper stepper(en_jobs, en_checkpoint,
                                 en_checkpoint.empty() ? ProgressFn{} : stderr_progress());
            stepper.try_resume(en_n - 2);
            while (stepper.k() < en_n - 2) stepper.step();
            std::vector<Code> muqs = muqs_from_level(stepper.level(), en_jobs);
            if (!en_filter.empty()) muqs = filter_muqs(muqs, parse_filter(en_filter));
            if (en_count_only) {
                write_output(en_out, std::to_string(muqs.size()) + "\n");
            } else {
                write_output(en_out, render_maps(decode_all(muqs), en_format));
            }
            return kExitOk;
        }

        if (*cmd_census) {
            if (ce_min < 3 || ce_max < ce_min) throw UsageError("need 3 <= min <= max");
            write_output(ce_out, render_census(census(ce_min, ce_max, ce_jobs)));
            return kExitOk;
        }

        if (*cmd_verify) {
            std::vector<Report> reports;
            auto run_theorem1 = [&]() {
                int n_max = vf_max_n > 0 ? vf_max_n : 11;
                if (n_max > 11 && !vf_stretch)
                    throw UsageError("orders beyond 11 need --stretch");
                if (n_max > 14) throw UsageError("theorem1 supports orders up to 14");
                VerifyOptions opts;
                opts.jobs = vf_jobs;
                opts.checkpoint_dir = vf_checkpoint;
                opts.budget_seconds = vf_budget;
                opts.progress = stderr_progress();
                reports.push_back(verify_theorem1(n_max, opts));
            };
            if (vf_check == "min8") {
                reports.push_back(verify_min_order_8(vf_max_n > 0 ? vf_max_n : 7, vf_jobs));
            } else if (vf_check == "two-irreducibles") {
                reports.push_back(verify_two_irreducibles(vf_jobs));
            } else if (vf_check == "theorem1") {
                run_theorem1();
            } else if (vf_check == "upper14") {
                reports.push_back(verify_upper_bound_14());
            } else {   // all
                reports.push_back(verify_min_order_8(7, vf_jobs));
                reports.push_back(verify_two_irreducibles(vf_jobs));
                run_theorem1();
                reports.push_back(verify_upper_bound_14());
            }
            bool all_pass = true;
            std::string text;
            for (size_t i = 0; i < reports.size(); ++i) {
                if (i) text += "\n";
                text += reports[i].render();
                all_pass = all_pass && reports[i].pass;
            }
            std::cout << text;
            return all_pass ? kExitOk : kExitCounterexample;
        }

        if (*cmd_canon) {
            std::string text;
            for (const PlaneMap& m : read_maps(ca_input))
                text += code_to_hex(canonical_code(m, !ca_no_reflect).bytes) + "\n";
            std::cout << text;
            return kExitOk;
        }

        if (*cmd_iso) {
            std::vector<PlaneMap> a = read_maps(iso_a), b = read_maps(iso_b);
            if (a.empty() || b.empty()) throw UsageError("both documents need at least one map");
            bool iso = is_isomorphic(a.front(), b.front(), !iso_no_reflect);
            std::cout << (iso ? "isomorphic" : "not-isomorphic") << "\n";
            return kExitOk;
        }

        if (*cmd_radial) {
            std::vector<PlaneMap> out;
            for (const PlaneMap& m : read_maps(ra_input)) {
                if (m.edge_count() == 0)
                    throw UsageError("radial graph needs a map with at least one edge");
                out.push_back(radial_graph(m));
            }
            write_output(ra_out, render_maps(out, ra_format));
            return kExitOk;
        }

        if (*cmd_dual) {
            std::vector<PlaneMap> out;
            for (const PlaneMap& m : read_maps(du_input)) out.push_back(dual(m));
            write_output(du_out, render_maps(out, du_format));
            return kExitOk;
        }

        if (*cmd_double) {
            std::vector<PlaneMap> maps = read_maps(db_input);
            if (maps.empty()) throw UsageError("document holds no map");
            Half h = validate_half(maps.front(), db_mark[0] - 1, db_mark[1] - 1);
            std::vector<PlaneMap> out;
            if (db_side == "0" || db_side == "both") out.push_back(double_half(h, 0));
            if (db_side == "1" || db_side == "both") out.push_back(double_half(h, 1));
            write_output(db_out, emit_rotsys(out));
            if (out.size() == 2)
                std::cerr << "sides isomorphic: "
                          << (is_isomorphic(out[0], out[1]) ? "yes" : "no") << "\n";
            return kExitOk;
        }

        if (*cmd_extract) {
            std::vector<PlaneMap> maps = read_maps(ex_input);
            if (maps.empty()) throw UsageError("document holds no map");
            const PlaneMap& g = maps.front();
            std::vector<ParallelClass> classes = parallel_classes(g);
            if (classes.empty())
                throw MapError(MapErrc::not_parallel, "map has no parallel class");
            const ParallelClass* cls = &classes.front();
            if (!ex_endpoints.empty()) {
                int v = std::min(ex_endpoints[0], ex_endpoints[1]) - 1;
                int w = std::max(ex_endpoints[0], ex_endpoints[1]) - 1;
                cls = nullptr;
                for (const auto& c : classes)
                    if (c.v == v && c.w == w) cls = &c;
                if (!cls) throw UsageError("no parallel class between those vertices");
            }
            std::optional<int> region;
            if (ex_region != "fewest") {
                try {
                    region = std::stoi(ex_region);
                } catch (...) {
                    throw UsageError("--region takes 'fewest' or an index");
                }
            }
            Half h = extract_half(g, *cls, region);
            std::vector<int> rank;
            write_output(ex_out, emit_rotsys_one(h.map, &rank));
            std::cerr << "marked vertices (output ids): " << rank[h.v] + 1 << " "
                      << rank[h.w] + 1 << "\n";
            return kExitOk;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const MapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return is_format_errc(e.code()) ? kExitFormat : kExitUsage;
    }
    return kExitUsage;
}
