// Benchmark: optimized solvers against the exhaustive reference oracle, and
// the OpenMP sweep against its serial twin.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "matchdim/invariants.hpp"
#include "matchdim/oracle.hpp"
#include "matchdim/verifier.hpp"

using namespace matchdim;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void bench_solvers() {
    constexpr double probabilities[] = {0.2, 0.5, 0.8};
    constexpr int cap = 14;
    std::vector<Graph> corpus;
    for (int i = 0; i < 60; ++i)
        corpus.push_back(random_graph(
            RandomGraphSpec{11 + i % 4, probabilities[i % 3], 0xBE5Cull + i, false}));

    auto start = Clock::now();
    int checksum_fast = 0;
    for (const Graph& g : corpus) {
        const InvariantProfile p = invariant_profile(g);
        checksum_fast += p.ind_match + p.min_match + p.match + p.dim;
    }
    const double fast = seconds_since(start);

    start = Clock::now();
    int checksum_ref = 0;
    for (const Graph& g : corpus) {
        const InvariantProfile p = oracle_profile(g, cap);
        checksum_ref += p.ind_match + p.min_match + p.match + p.dim;
    }
    const double ref = seconds_since(start);

    std::printf("solver corpus   : %zu graphs (n = 11..14)\n", corpus.size());
    std::printf("  branch&bound  : %8.3f ms\n", fast * 1e3);
    std::printf("  oracle        : %8.3f ms\n", ref * 1e3);
    std::printf("  speedup       : %8.2fx  (checksums %d/%d %s)\n", ref / fast,
                checksum_fast, checksum_ref,
                checksum_fast == checksum_ref ? "agree" : "DISAGREE");
}

void bench_sweep() {
    constexpr int max_b = 4, d_slack = 2;

    auto start = Clock::now();
    const auto serial = sweep_theorem_serial(max_b, d_slack);
    const double serial_time = seconds_since(start);

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    start = Clock::now();
    const auto parallel = sweep_theorem(max_b, d_slack, threads);
    const double parallel_time = seconds_since(start);

    int failures = 0;
    for (size_t i = 0; i < serial.size(); ++i)
        if (!serial[i].passed || !parallel[i].passed ||
            serial[i].computed != parallel[i].computed)
            ++failures;

    std::printf("theorem sweep   : max_b=%d d_slack=%d -> %zu tuples\n", max_b,
                d_slack, serial.size());
    std::printf("  serial        : %8.3f ms\n", serial_time * 1e3);
    std::printf("  %2d threads    : %8.3f ms\n", threads, parallel_time * 1e3);
    std::printf("  speedup       : %8.2fx  (%d mismatches)\n",
                serial_time / parallel_time, failures);
}

}  // namespace

int main() {
    bench_solvers();
    bench_sweep();
    return 0;
}
