/*
 * Compares the serial reference expansion against the OpenMP kernel, level
 * by level, and checks that both produce identical class sets.
 */
#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "muq/enumerate.hpp"

using namespace muq;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    int max_k = argc > 1 ? std::atoi(argv[1]) : 7;
    int jobs = argc > 2 ? std::atoi(argv[2]) : 4;
    std::printf("level expansion, serial reference vs %d-thread kernel\n", jobs);
    std::printf("%4s %10s %12s %12s %8s\n", "k", "classes", "serial[s]", "parallel[s]", "speedup");

    std::vector<Code> level = {canonical_code(PlaneMap::single_vertex()).bytes};
    for (int k = 1; k <= max_k; ++k) {
        std::vector<Code> serial, parallel;
        auto t0 = std::chrono::steady_clock::now();
        expand_level_serial(level, serial);
        double ts = seconds_since(t0);

        t0 = std::chrono::steady_clock::now();
        expand_level_parallel(level, jobs, parallel);
        double tp = seconds_since(t0);

        if (serial != parallel) {
            std::printf("MISMATCH at k=%d: serial %zu classes, parallel %zu\n", k, serial.size(),
                        parallel.size());
            return 1;
        }
        std::printf("%4d %10zu %12.3f %12.3f %8.2f\n", k, serial.size(), ts, tp,
                    tp > 0 ? ts / tp : 0.0);
        level = std::move(serial);
    }
    return 0;
}
