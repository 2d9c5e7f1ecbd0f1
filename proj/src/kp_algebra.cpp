#include "tropdea/kp_algebra.hpp"

#include <algorithm>
#include <cmath>

namespace tropdea {

namespace {

// log(sum e^{u_i}) over already alpha-scaled exponents, shifted by the max.
// Returns -inf when every exponent is -inf.
double lse_scaled(std::span<const double> u) {
    double m = -kInf;
    for (double v : u) m = std::max(m, v);
    if (m == -kInf) return -kInf;
    double s = 0.0;
    for (double v : u) s += std::exp(v - m);
    return m + std::log(s);
}

void check_operand(double v, const Alpha& alpha) {
    if (std::isnan(v)) throw numerical_error("NaN operand in quantized arithmetic");
    if (!std::isinf(v)) return;
    // Only the excluded-participant sentinel of the active semiring is legal.
    if (alpha.is_finite()) {
        if (v != alpha.excluded_sentinel())
            throw numerical_error("operand sentinel does not match the sign of alpha");
    } else if (alpha.is_plus_inf() && v == kInf) {
        throw numerical_error("+inf operand is not representable in the max-plus semiring");
    } else if (alpha.is_minus_inf() && v == -kInf) {
        throw numerical_error("-inf operand is not representable in the min-plus semiring");
    }
}

} // namespace

double kp_add(double a, double b, const Alpha& alpha) {
    const double v[2] = {a, b};
    return kp_mean(v, alpha);
}

double kp_mean(std::span<const double> values, const Alpha& alpha) {
    if (values.empty()) throw std::invalid_argument("kp_mean: empty sequence");
    for (double v : values) check_operand(v, alpha);
    if (alpha.is_plus_inf()) return *std::max_element(values.begin(), values.end());
    if (alpha.is_minus_inf()) return *std::min_element(values.begin(), values.end());

    const double a = alpha.value();
    int participants = 0;
    double last = 0.0;
    double m = -kInf; // max of a*v_i over participating entries
    for (double v : values) {
        if (std::isinf(v)) continue; // excluded sentinel, e^{a v} = 0
        ++participants;
        last = v;
        m = std::max(m, a * v);
    }
    if (participants == 0) return alpha.excluded_sentinel();
    if (participants == 1) return last; // exact; no round trip through exp/log
    double s = 0.0;
    for (double v : values) {
        if (std::isinf(v)) continue;
        s += std::exp(a * v - m);
    }
    double r = (m + std::log(s)) / a;
    if (!std::isfinite(r))
        throw numerical_error("kp_mean overflowed after stabilization (alpha=" + alpha.str() + ")");
    return r;
}

RVec kp_combine(std::span<const RVec> points, std::span<const double> t, const Alpha& alpha) {
    if (points.empty() || points.size() != t.size())
        throw std::invalid_argument("kp_combine: need |points| == |t| >= 1");
    const size_t d = points.front().size();
    for (const RVec& p : points)
        if (p.size() != d) throw std::invalid_argument("kp_combine: dimension mismatch");

    RVec out(d);
    std::vector<double> shifted(points.size());
    for (size_t j = 0; j < d; ++j) {
        for (size_t k = 0; k < points.size(); ++k) shifted[k] = t[k] + points[k][j];
        out[j] = kp_mean(shifted, alpha);
    }
    return out;
}

bool simplex_weights_valid(std::span<const double> t, const Alpha& alpha, double tol) {
    if (t.empty()) return false;
    if (alpha.is_plus_inf()) {
        double m = -kInf;
        for (double v : t) {
            if (v == kInf || std::isnan(v)) return false;
            m = std::max(m, v);
        }
        return m == 0.0;
    }
    if (alpha.is_minus_inf()) {
        double m = kInf;
        for (double v : t) {
            if (v == -kInf || std::isnan(v)) return false;
            m = std::min(m, v);
        }
        return m == 0.0;
    }
    const double a = alpha.value();
    std::vector<double> scaled(t.size());
    for (size_t k = 0; k < t.size(); ++k) {
        if (std::isinf(t[k])) {
            if (t[k] != alpha.excluded_sentinel()) return false;
            scaled[k] = -kInf;
        } else {
            scaled[k] = a * t[k];
        }
    }
    double norm = lse_scaled(scaled) / a; // kp_mean(t, alpha)
    return std::isfinite(norm) && std::abs(norm) <= tol;
}

} // namespace tropdea
