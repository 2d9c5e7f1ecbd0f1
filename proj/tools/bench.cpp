// Compares the OpenMP kernels against their serial references on synthetic
// workloads and checks that both produce identical results.

#include <chrono>
#include <cstdio>
#include <string>

#include "tropdea/distance.hpp"
#include "tropdea/hulls.hpp"
#include "tropdea/oracle.hpp"
#include "tropdea/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace tropdea;
using clock_type = std::chrono::steady_clock;

double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

std::vector<RVec> random_cloud(int count, int dim, uint64_t seed) {
    Rng rng(seed);
    std::vector<RVec> pts(static_cast<size_t>(count), RVec(static_cast<size_t>(dim)));
    for (auto& p : pts)
        for (double& v : p) v = rng.uniform(-5.0, 5.0);
    return pts;
}

void row(const char* name, double serial_ms, double parallel_ms, double max_diff) {
    std::printf("%-28s %10.1f ms %10.1f ms %8.2fx   max|diff|=%g\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms, max_diff);
}

} // namespace

int main(int argc, char** argv) {
    int scale = argc > 1 ? std::atoi(argv[1]) : 1;
    if (scale < 1) scale = 1;
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d, scale = %d\n\n", omp_get_max_threads(), scale);
#else
    std::printf("OpenMP disabled (serial build), scale = %d\n\n", scale);
#endif
    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        auto p = random_cloud(1200 * scale, 3, 1);
        auto q = random_cloud(1500 * scale, 3, 2);
        auto t0 = clock_type::now();
        double serial = hausdorff_serial(p, q);
        double t_serial = ms_since(t0);
        t0 = clock_type::now();
        double parallel = hausdorff(p, q);
        double t_parallel = ms_since(t0);
        row("hausdorff 1200x1500 d=3", t_serial, t_parallel, std::abs(serial - parallel));
    }

    {
        Dataset ds = random_dataset(7, /*max_firms=*/2, /*max_dim=*/3, /*integer=*/false);
        // Grow it to a few hundred firms for a batch-scoring workload.
        std::vector<Firm> firms;
        Rng rng(99);
        const int ell = 400 * scale;
        for (int k = 0; k < ell; ++k) {
            Firm f;
            f.id = "s" + std::to_string(k);
            for (int i = 0; i < 3; ++i) f.x.push_back(rng.uniform(0.0, 8.0));
            for (int j = 0; j < 2; ++j) f.y.push_back(rng.uniform(0.0, 8.0));
            firms.push_back(std::move(f));
        }
        Dataset big = Dataset::validated(3, 2, std::move(firms));
        TechSpec tech = TechSpec::parse("quant-vrs:+inf");
        auto t0 = clock_type::now();
        auto serial = score_all(big, tech, Orientation::Output, /*parallel=*/false);
        double t_serial = ms_since(t0);
        t0 = clock_type::now();
        auto parallel = score_all(big, tech, Orientation::Output, /*parallel=*/true);
        double t_parallel = ms_since(t0);
        double diff = 0.0;
        for (size_t k = 0; k < serial.size(); ++k)
            diff = std::max(diff, std::abs(serial[k].delta - parallel[k].delta));
        row("score_all tropical l=400", t_serial, t_parallel, diff);

        TechSpec convex = TechSpec::parse("convex-vrs");
        t0 = clock_type::now();
        auto cs = score_all(big, convex, Orientation::Output, /*parallel=*/false);
        t_serial = ms_since(t0);
        t0 = clock_type::now();
        auto cp = score_all(big, convex, Orientation::Output, /*parallel=*/true);
        t_parallel = ms_since(t0);
        diff = 0.0;
        for (size_t k = 0; k < cs.size(); ++k) diff = std::max(diff, std::abs(cs[k].delta - cp[k].delta));
        row("score_all convex l=400", t_serial, t_parallel, diff);
    }

    {
        HullSpec h{limit_example_points(), Alpha::finite(5.0), false};
        const int samples = 200000 * scale;
        auto t0 = clock_type::now();
        auto serial = sample_hull(h, samples, 0, /*parallel=*/false);
        double t_serial = ms_since(t0);
        t0 = clock_type::now();
        auto parallel = sample_hull(h, samples, 0, /*parallel=*/true);
        double t_parallel = ms_since(t0);
        double diff = 0.0;
        for (size_t i = 0; i < serial.size(); ++i)
            for (size_t j = 0; j < serial[i].size(); ++j)
                diff = std::max(diff, std::abs(serial[i][j] - parallel[i][j]));
        row("sample_hull 200k draws", t_serial, t_parallel, diff);
    }

    return 0;
}
