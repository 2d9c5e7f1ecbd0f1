#ifndef TROPDEA_ORACLE_HPP
#define TROPDEA_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tropdea/dataset.hpp"
#include "tropdea/distance.hpp"
#include "tropdea/technology.hpp"

namespace tropdea {

struct OracleReport {
    std::string instance;
    double oracle_value = 0.0;
    double engine_value = 0.0;
    double gap = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// Largest feasible shift of p along the oriented unit direction, located
/// by doubling plus bisection on the membership predicate alone. Uses its
/// own FDH and tropical membership routines, kept separate from the engine
/// paths it is used to check.
double bisect_distance(const TechSpec& tech, const Dataset& ds, const Point& p, Orientation o,
                       double tol);

/// Exhaustive sweep of the weight simplex (ell <= 3) against the LP
/// optimum, compared in delta space with a grid-step Lipschitz allowance.
OracleReport grid_lp_check(const Dataset& ds, int kbar, double alpha, bool vrs, Orientation o,
                           double resolution);

/// Test seam: lets a fixture corrupt one engine path to prove the battery
/// detects regressions.
struct Corruption {
    bool corrupt_tropical = false;
    double offset = 0.0;
};

/// The full randomized verification battery. Same seed, same reports.
std::vector<OracleReport> verify_suite(uint64_t seed, const Corruption& corruption = {});

/// Deterministic random datasets shared by the battery and the tests.
Dataset random_dataset(uint64_t seed, int max_firms = 8, int max_dim = 3, bool integer = false);

} // namespace tropdea

#endif
