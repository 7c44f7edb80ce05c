// Benchmark: OpenMP kernels against their serial references.
//   - eigendecomposition: round-robin kernel (1 thread / max threads) vs the
//     cyclic-by-row serial reference
//   - search restarts: parallel vs serial scheduling (identical results)

#include <chrono>
#include <cstdio>
#include <vector>

#include "mbkit/constructions.hpp"
#include "mbkit/eig.hpp"
#include "mbkit/rng.hpp"
#include "mbkit/search.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace mbk;

namespace {

double now_ms() {
    using namespace std::chrono;
    return duration<double, std::milli>(steady_clock::now().time_since_epoch()).count();
}

SymmetricMatrix random_symmetric(int n, std::uint64_t seed) {
    Rng rng(seed);
    SymmetricMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) a.set(i, j, rng.normal());
    return a;
}

template <typename F>
double time_best_of(int reps, F&& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        double t0 = now_ms();
        f();
        best = std::min(best, now_ms() - t0);
    }
    return best;
}

}  // namespace

int main() {
#ifdef _OPENMP
    int max_threads = omp_get_max_threads();
#else
    int max_threads = 1;
#endif
    std::printf("mbkit benchmark (max threads: %d)\n\n", max_threads);

    std::printf("%-28s %10s %10s %10s\n", "eigendecompose", "serial-ref", "kernel@1", "kernel@max");
    for (int n : {64, 128, 200}) {
        SymmetricMatrix a = random_symmetric(n, 42 + n);
        double t_ref = time_best_of(3, [&] { (void)reference::eigendecompose_serial(a); });
#ifdef _OPENMP
        omp_set_num_threads(1);
#endif
        double t_k1 = time_best_of(3, [&] { (void)eigendecompose(a); });
#ifdef _OPENMP
        omp_set_num_threads(max_threads);
#endif
        double t_kmax = time_best_of(3, [&] { (void)eigendecompose(a); });
        std::printf("  n=%-24d %8.2fms %8.2fms %8.2fms\n", n, t_ref, t_k1, t_kmax);
    }

    std::printf("\n%-28s %10s %10s\n", "find_realization", "serial", "parallel");
    {
        // join of two 4-cycles: an 8-vertex instance with k = 2
        CliqueBlockSpec spec({{1, 1}, {1, 1}});
        RealizationCertificate c4 = canonical_blocks_auto(spec);
        Graph g = join(c4.graph, c4.graph);
        SearchConfig cfg;
        cfg.restarts = 48;
        cfg.max_iters = 400;
        cfg.seed = 7;

        cfg.parallel = false;
        double t_serial = time_best_of(2, [&] { (void)find_realization(g, 2, cfg); });
        cfg.parallel = true;
        double t_par = time_best_of(2, [&] { (void)find_realization(g, 2, cfg); });
        std::printf("  %-26s %8.2fms %8.2fms\n", "C4 v C4, k=2", t_serial, t_par);
    }
    return 0;
}
