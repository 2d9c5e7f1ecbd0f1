#ifndef TROPDEA_TECHNOLOGY_HPP
#define TROPDEA_TECHNOLOGY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tropdea/alpha.hpp"
#include "tropdea/common.hpp"
#include "tropdea/dataset.hpp"

namespace tropdea {

enum class Family { QuantizedVRS, QuantizedCRS, ConvexVRS, ConvexCRS, FDH };

/// A technology family plus its parameters. For the quantized families,
/// alpha = +-inf selects the tropical (max-plus / min-plus) technology.
struct TechSpec {
    Family family = Family::ConvexVRS;
    Alpha alpha = Alpha::plus_inf();
    bool discrete = false;

    /// Grammar: convex-vrs | convex-crs | fdh |
    ///          quant-vrs:<alpha|+inf|-inf> | quant-crs:<alpha|+inf|-inf>
    /// with an optional ":discrete" suffix (tropical/fdh families only).
    static TechSpec parse(std::string_view s);
    std::string str() const;

    bool quantized() const { return family == Family::QuantizedVRS || family == Family::QuantizedCRS; }
    bool tropical() const { return quantized() && alpha.is_infinite(); }
    bool vrs() const { return family == Family::QuantizedVRS || family == Family::ConvexVRS; }
};

/// A candidate production plan. Coordinates may be negative when the
/// strict-definition flag is off (constraint-level evaluation).
struct Point {
    RVec x;
    RVec y;
};

struct Containment {
    bool member = false;
    /// Intensity weights certifying membership (index of the dominating
    /// firm for FDH, stored as a unit weight vector).
    std::vector<double> weights;
};

/// Membership of p in the technology built on ds. With strict=true
/// (the default) points outside the nonnegative orthant are rejected; the
/// constraint-level test used by the duality identities passes strict=false.
Containment contains(const TechSpec& tech, const Dataset& ds, const Point& p, bool strict = true);

struct AxiomCounterexample {
    Point from;
    Point to;
};

struct AxiomReport {
    int trials = 0;
    bool free_disposal_pass = true; // T3
    std::optional<AxiomCounterexample> free_disposal_fail;
    bool translation_applicable = false; // T4 holds by construction only for quantized CRS
    bool translation_pass = true;
    std::optional<AxiomCounterexample> translation_fail;
};

/// Randomized audit of free disposal (all families) and graph translation
/// homotheticity (expected to hold for the quantized CRS family; violations
/// elsewhere are reported, not errors).
AxiomReport verify_axioms(const TechSpec& tech, const Dataset& ds, int trials, uint64_t seed);

} // namespace tropdea

#endif
