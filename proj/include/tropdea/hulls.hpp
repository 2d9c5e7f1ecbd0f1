#ifndef TROPDEA_HULLS_HPP
#define TROPDEA_HULLS_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "tropdea/alpha.hpp"
#include "tropdea/common.hpp"

namespace tropdea {

struct MembershipResult {
    bool member = false;
    /// Simplex weights when member (semiring sentinels mark excluded points).
    std::vector<double> witness;
    /// Aggregation of the generators under the witness weights.
    RVec reconstruction;
};

/// Generator set plus the hull flavor: conic=false is the weight-normalized
/// hull, conic=true the translation-homothetic span (no normalization).
struct HullSpec {
    std::vector<RVec> points;
    Alpha alpha;
    bool conic = false;
};

/// Membership for finite alpha, via LP feasibility in exponential space.
MembershipResult member_sigma_alpha(const HullSpec& h, const RVec& z);

/// Membership at alpha = +-inf via residuation: the extremal feasible
/// weights are computed in closed form and the reconstruction is compared
/// exactly against the query.
MembershipResult member_tropical(const HullSpec& h, const RVec& z);

/// Multiplicative residuation over positive data: the max-normalized hull
/// (inverse=false) or the min-normalized inverse hull (inverse=true, which
/// requires strictly positive coordinates).
MembershipResult member_bconvex(const std::vector<RVec>& points, const RVec& z, bool inverse);

/// Deterministic hull sample: per-sample weight draws are mapped onto the
/// weight simplex of h.alpha. Draws with the same seed and index agree
/// across alphas, so samples of nearby hulls are pointwise matched, and
/// the parallel and serial paths produce identical output.
std::vector<RVec> sample_hull(const HullSpec& h, int count, uint64_t seed, bool parallel = true);

/// Symmetric Hausdorff distance between finite point sets (Euclidean).
double hausdorff(std::span<const RVec> p, std::span<const RVec> q);

/// Single-threaded reference used by tests and the benchmark.
double hausdorff_serial(std::span<const RVec> p, std::span<const RVec> q);

/// For each finite alpha (same sign as the target), the sampled Hausdorff
/// gap between the alpha-hull and the tropical limit hull, using matched
/// weight draws.
std::vector<std::pair<double, double>> limit_gap(const std::vector<RVec>& points,
                                                 std::span<const double> alphas, const Alpha& target,
                                                 int samples, uint64_t seed);

/// The documented 5-point planar set used by the bundled hull-limit
/// experiment (the hull figures ship no coordinates, so this choice is
/// part of this artifact, not of the reference data).
const std::vector<RVec>& limit_example_points();

} // namespace tropdea

#endif
