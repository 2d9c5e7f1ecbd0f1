#ifndef TROPDEA_DUALITY_HPP
#define TROPDEA_DUALITY_HPP

#include <cstdint>
#include <vector>

#include "tropdea/common.hpp"
#include "tropdea/dataset.hpp"
#include "tropdea/distance.hpp"
#include "tropdea/rng.hpp"
#include "tropdea/technology.hpp"

namespace tropdea {

/// A normalized price vector for the quantized inner product: the weights
/// satisfy sum_i e^{alpha w_i} = 1, i.e. the inner product of w with the
/// origin is zero.
struct PriceVector {
    std::vector<double> w;
    double alpha = 1.0;
};

/// Validates the normalization within 1e-9.
PriceVector normalized_prices(std::vector<double> w, double alpha);

/// Uniform draw on the normalization surface: Dirichlet weights mapped
/// through (1/alpha) ln.
PriceVector random_prices(int dim, double alpha, Rng& rng);

/// (1/alpha) ln sum_i e^{alpha (w_i + z_i)}, stabilized.
double q_inner(const PriceVector& v, const RVec& z);

/// Extended value for the support functions: the cost is +inf on an empty
/// input set, the revenue -inf on an empty output set.
struct QValue {
    enum class Kind { Finite, PlusInf, MinusInf } kind = Kind::Finite;
    double value = 0.0;
    bool finite() const { return kind == Kind::Finite; }
};

/// Smallest priced input bundle able to produce y under the technology.
QValue q_cost(const PriceVector& w, const RVec& y, const TechSpec& tech, const Dataset& ds);

/// Largest priced output bundle producible from x under the technology.
QValue q_revenue(const PriceVector& p, const RVec& x, const TechSpec& tech, const Dataset& ds);

struct DualityReport {
    int firm = 0;
    Orientation orientation = Orientation::Input;
    double alpha = 1.0;
    int trials = 0;
    double distance = 0.0;
    int weak_violations = 0;
    /// Smallest sampled margin (price gap minus distance); weak duality
    /// holds when this stays above -1e-9.
    double worst_margin = kInf;
    bool degenerate = false;
    double strong_gap = kInf;
    std::vector<double> witness_prices;
};

/// Weak duality over sampled prices plus the strong-duality witness
/// extracted from the distance LP's multipliers. tech must be a quantized
/// family with finite alpha.
DualityReport duality_check(const Dataset& ds, int kbar, const TechSpec& tech, Orientation o,
                            int trials, uint64_t seed);

} // namespace tropdea

#endif
