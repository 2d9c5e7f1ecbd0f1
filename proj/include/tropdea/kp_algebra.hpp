#ifndef TROPDEA_KP_ALGEBRA_HPP
#define TROPDEA_KP_ALGEBRA_HPP

#include <span>

#include "tropdea/alpha.hpp"
#include "tropdea/common.hpp"

namespace tropdea {

/// Quantized addition: (1/a) ln(e^{a x} + e^{a y}) for finite alpha,
/// max at +inf, min at -inf. Stabilized so the result never overflows
/// for finite operands of moderate size.
double kp_add(double a, double b, const Alpha& alpha);

/// Exponential generalized mean (1/a) ln sum_i e^{a v_i}; max / min in the
/// limits. The sequence must be nonempty.
double kp_mean(std::span<const double> values, const Alpha& alpha);

/// Weighted aggregation of points: elementwise mean over k of
/// (t_k + point_k). Weight sentinels exclude a point.
RVec kp_combine(std::span<const RVec> points, std::span<const double> t, const Alpha& alpha);

/// Whether t lies on the weight simplex of the given alpha:
/// kp_mean(t) == 0 within tol for finite alpha, max t == 0 at +inf,
/// min t == 0 at -inf.
bool simplex_weights_valid(std::span<const double> t, const Alpha& alpha, double tol = 1e-9);

} // namespace tropdea

#endif
