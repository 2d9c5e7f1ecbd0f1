#include <cmath>

#include <doctest.h>

#include "tropdea/distance.hpp"
#include "tropdea/hulls.hpp"
#include "tropdea/oracle.hpp"
#include "tropdea/rng.hpp"

using namespace tropdea;

namespace {

std::vector<RVec> cloud(int count, int dim, uint64_t seed) {
    Rng rng(seed);
    std::vector<RVec> pts(static_cast<size_t>(count), RVec(static_cast<size_t>(dim)));
    for (auto& p : pts)
        for (double& v : p) v = rng.uniform(-4.0, 4.0);
    return pts;
}

} // namespace

TEST_CASE("parallel hausdorff equals the serial reference") {
    for (uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        auto p = cloud(157, 3, seed);
        auto q = cloud(203, 3, seed + 10);
        CHECK(hausdorff(p, q) == hausdorff_serial(p, q));
    }
}

TEST_CASE("parallel scoring equals the serial path") {
    Rng rng(71);
    std::vector<Firm> firms;
    for (int k = 0; k < 120; ++k) {
        Firm f;
        f.id = "s" + std::to_string(k);
        for (int i = 0; i < 2; ++i) f.x.push_back(rng.uniform(0.0, 6.0));
        f.y.push_back(rng.uniform(0.0, 6.0));
        firms.push_back(std::move(f));
    }
    Dataset ds = Dataset::validated(2, 1, std::move(firms));
    for (const char* name : {"fdh", "convex-vrs", "quant-vrs:+inf", "quant-crs:-inf", "quant-crs:1"}) {
        TechSpec tech = TechSpec::parse(name);
        auto serial = score_all(ds, tech, Orientation::Output, /*parallel=*/false);
        auto parallel = score_all(ds, tech, Orientation::Output, /*parallel=*/true);
        REQUIRE(serial.size() == parallel.size());
        for (size_t k = 0; k < serial.size(); ++k) {
            CHECK(serial[k].delta == parallel[k].delta);
            CHECK(serial[k].benchmark.x == parallel[k].benchmark.x);
            CHECK(serial[k].benchmark.y == parallel[k].benchmark.y);
        }
    }
}

TEST_CASE("parallel sampling is bit-identical to serial sampling") {
    HullSpec h{limit_example_points(), Alpha::finite(3.0), false};
    auto serial = sample_hull(h, 500, 11, /*parallel=*/false);
    auto parallel = sample_hull(h, 500, 11, /*parallel=*/true);
    REQUIRE(serial.size() == parallel.size());
    for (size_t i = 0; i < serial.size(); ++i) CHECK(serial[i] == parallel[i]);

    auto again = sample_hull(h, 500, 11, /*parallel=*/true);
    for (size_t i = 0; i < serial.size(); ++i) CHECK(again[i] == parallel[i]);

    auto other_seed = sample_hull(h, 500, 12, /*parallel=*/true);
    bool differs = false;
    for (size_t i = 0; i < serial.size(); ++i) differs = differs || other_seed[i] != parallel[i];
    CHECK(differs);
}
