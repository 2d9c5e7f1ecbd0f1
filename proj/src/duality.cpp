#include "tropdea/duality.hpp"

#include <algorithm>
#include <cmath>

#include "tropdea/kp_algebra.hpp"
#include "tropdea/lp.hpp"

namespace tropdea {

namespace {

double normalization_residual(const std::vector<double>& w, double alpha) {
    double s = 0.0;
    for (double v : w) s += std::isinf(v) ? 0.0 : std::exp(alpha * v);
    return std::abs(s - 1.0);
}

void check_finite_alpha(double alpha) {
    if (alpha == 0.0 || !std::isfinite(alpha))
        throw std::invalid_argument("price vectors require finite nonzero alpha");
}

// Transformed feasibility rows shared by the support-function LPs. The free
// bundle variables come first, then the intensity weights.
struct SupportLp {
    LpProblem lp;
    int nfree;
};

SupportLp support_lp(const TechSpec& tech, const Dataset& ds, bool cost_side, const RVec& fixed,
                     double alpha) {
    if (!tech.quantized() || !tech.alpha.is_finite() || tech.alpha.value() != alpha)
        throw std::invalid_argument("support functions need a quantized technology matching alpha");
    const int ell = ds.size();
    const int m = ds.inputs();
    const int n = ds.outputs();
    const bool positive = alpha > 0.0;
    const bool vrs = tech.family == Family::QuantizedVRS;
    const int nfree = cost_side ? m : n;

    auto ex = [&](double v) {
        double r = std::exp(alpha * v);
        if (!std::isfinite(r)) throw numerical_error("exponential transform overflow in support LP");
        return r;
    };

    SupportLp s;
    s.nfree = nfree;
    s.lp.c.assign(static_cast<size_t>(nfree + ell), 0.0);
    // Free-bundle rows: u >= aggregation (cost side, alpha>0) etc.; the
    // directions flip both with the side and with the sign of alpha.
    for (int r = 0; r < nfree; ++r) {
        std::vector<double> row(static_cast<size_t>(nfree + ell), 0.0);
        row[static_cast<size_t>(r)] = 1.0;
        for (int k = 0; k < ell; ++k) {
            double coord = cost_side ? ds.firm(k).x[static_cast<size_t>(r)] : ds.firm(k).y[static_cast<size_t>(r)];
            row[static_cast<size_t>(nfree + k)] = -ex(coord);
        }
        bool lower = cost_side == positive; // bundle bounded below by the aggregation
        s.lp.add(std::move(row), lower ? Rel::Ge : Rel::Le, 0.0);
    }
    // Fixed-bundle rows.
    const int nfixed = cost_side ? n : m;
    for (int r = 0; r < nfixed; ++r) {
        std::vector<double> row(static_cast<size_t>(nfree + ell), 0.0);
        for (int k = 0; k < ell; ++k) {
            double coord = cost_side ? ds.firm(k).y[static_cast<size_t>(r)] : ds.firm(k).x[static_cast<size_t>(r)];
            row[static_cast<size_t>(nfree + k)] = ex(coord);
        }
        bool lower = cost_side == positive; // aggregation covers the fixed bundle
        s.lp.add(std::move(row), lower ? Rel::Ge : Rel::Le, ex(fixed[static_cast<size_t>(r)]));
    }
    if (vrs) {
        std::vector<double> row(static_cast<size_t>(nfree + ell), 0.0);
        for (int k = 0; k < ell; ++k) row[static_cast<size_t>(nfree + k)] = 1.0;
        s.lp.add(std::move(row), Rel::Eq, 1.0);
    }
    return s;
}

} // namespace

PriceVector normalized_prices(std::vector<double> w, double alpha) {
    check_finite_alpha(alpha);
    if (w.empty()) throw std::invalid_argument("empty price vector");
    if (normalization_residual(w, alpha) > 1e-9)
        throw std::invalid_argument("price vector violates the normalization constraint");
    return PriceVector{std::move(w), alpha};
}

PriceVector random_prices(int dim, double alpha, Rng& rng) {
    check_finite_alpha(alpha);
    if (dim < 1) throw std::invalid_argument("price dimension must be positive");
    std::vector<double> u = rng.dirichlet(static_cast<size_t>(dim));
    std::vector<double> w(static_cast<size_t>(dim));
    for (int i = 0; i < dim; ++i) w[static_cast<size_t>(i)] = std::log(u[static_cast<size_t>(i)]) / alpha;
    return PriceVector{std::move(w), alpha};
}

double q_inner(const PriceVector& v, const RVec& z) {
    if (v.w.size() != z.size()) throw std::invalid_argument("q_inner dimension mismatch");
    std::vector<double> sum(v.w.size());
    for (size_t i = 0; i < z.size(); ++i) sum[i] = v.w[i] + z[i];
    return kp_mean(sum, Alpha::finite(v.alpha));
}

QValue q_cost(const PriceVector& w, const RVec& y, const TechSpec& tech, const Dataset& ds) {
    if (static_cast<int>(w.w.size()) != ds.inputs() || static_cast<int>(y.size()) != ds.outputs())
        throw std::invalid_argument("q_cost dimension mismatch");
    const double a = w.alpha;
    SupportLp s = support_lp(tech, ds, /*cost_side=*/true, y, a);
    for (int i = 0; i < s.nfree; ++i) {
        double c = std::isinf(w.w[static_cast<size_t>(i)]) ? 0.0 : std::exp(a * w.w[static_cast<size_t>(i)]);
        s.lp.c[static_cast<size_t>(i)] = c;
    }
    // inf over x of (1/a) ln <e^{aw}, e^{ax}>: minimize the transformed
    // objective for a > 0, maximize it for a < 0.
    s.lp.sense = a > 0.0 ? Sense::Minimize : Sense::Maximize;
    LpSolution sol = solve(s.lp);
    if (sol.status == LpStatus::Infeasible) return {QValue::Kind::PlusInf, kInf};
    if (sol.status == LpStatus::Unbounded)
        throw numerical_error("cost LP unbounded; data admits arbitrarily cheap bundles");
    if (sol.objective <= 0.0) return {QValue::Kind::PlusInf, kInf}; // degenerate all-zero bundle
    return {QValue::Kind::Finite, std::log(sol.objective) / a};
}

QValue q_revenue(const PriceVector& p, const RVec& x, const TechSpec& tech, const Dataset& ds) {
    if (static_cast<int>(p.w.size()) != ds.outputs() || static_cast<int>(x.size()) != ds.inputs())
        throw std::invalid_argument("q_revenue dimension mismatch");
    const double a = p.alpha;
    SupportLp s = support_lp(tech, ds, /*cost_side=*/false, x, a);
    for (int j = 0; j < s.nfree; ++j) {
        double c = std::isinf(p.w[static_cast<size_t>(j)]) ? 0.0 : std::exp(a * p.w[static_cast<size_t>(j)]);
        s.lp.c[static_cast<size_t>(j)] = c;
    }
    // sup over y of (1/a) ln <e^{ap}, e^{ay}>: maximize for a > 0, minimize
    // for a < 0.
    s.lp.sense = a > 0.0 ? Sense::Maximize : Sense::Minimize;
    LpSolution sol = solve(s.lp);
    if (sol.status == LpStatus::Infeasible) return {QValue::Kind::MinusInf, -kInf};
    if (sol.status == LpStatus::Unbounded)
        throw numerical_error("revenue LP unbounded; data admits arbitrarily large bundles");
    if (sol.objective <= 0.0) return {QValue::Kind::MinusInf, -kInf};
    return {QValue::Kind::Finite, std::log(sol.objective) / a};
}

DualityReport duality_check(const Dataset& ds, int kbar, const TechSpec& tech, Orientation o,
                            int trials, uint64_t seed) {
    if (kbar < 0 || kbar >= ds.size()) throw std::invalid_argument("firm index out of range");
    if (trials < 1) throw std::invalid_argument("trials must be positive");
    if (!tech.quantized() || !tech.alpha.is_finite())
        throw std::invalid_argument("duality check needs a quantized technology with finite alpha");
    const double alpha = tech.alpha.value();
    const bool vrs = tech.family == Family::QuantizedVRS;
    const bool input = o == Orientation::Input;
    const Firm& firm = ds.firm(kbar);

    DualityReport rep;
    rep.firm = kbar;
    rep.orientation = o;
    rep.alpha = alpha;
    rep.trials = trials;

    ScoreRecord score = distance_quantized_lp(ds, kbar, alpha, vrs, o);
    rep.distance = score.delta;

    auto price_gap = [&](const PriceVector& pv) {
        if (input) {
            QValue c = q_cost(pv, firm.y, tech, ds);
            if (!c.finite()) return kInf;
            return q_inner(pv, firm.x) - c.value;
        }
        QValue r = q_revenue(pv, firm.x, tech, ds);
        if (!r.finite()) return kInf; // cannot happen at an observed firm
        return r.value - q_inner(pv, firm.y);
    };

    const int dim = input ? ds.inputs() : ds.outputs();
    std::vector<double> margins(static_cast<size_t>(trials));
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
    for (int trial = 0; trial < trials; ++trial) {
        try {
            Rng rng = Rng::stream(seed, static_cast<uint64_t>(trial));
            PriceVector pv = random_prices(dim, alpha, rng);
            margins[static_cast<size_t>(trial)] = price_gap(pv) - rep.distance;
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    for (double m : margins) {
        rep.worst_margin = std::min(rep.worst_margin, m);
        if (m < -1e-9) ++rep.weak_violations;
    }

    // Strong duality: the minimizing prices come from the multipliers of the
    // distance LP rows matching the oriented side, normalized to unit mass.
    const std::vector<double>& duals = *score.duals;
    const int offset = input ? 0 : ds.inputs();
    std::vector<double> v(static_cast<size_t>(dim));
    double mass = 0.0;
    for (int r = 0; r < dim; ++r) mass += (v[static_cast<size_t>(r)] = std::abs(duals[static_cast<size_t>(offset + r)]));
    if (mass <= 1e-12) {
        rep.degenerate = true;
        return rep;
    }
    std::vector<double> w(static_cast<size_t>(dim));
    for (int r = 0; r < dim; ++r) {
        double share = v[static_cast<size_t>(r)] / mass;
        w[static_cast<size_t>(r)] = share > 0.0 ? std::log(share) / alpha
                                                : Alpha::finite(alpha).excluded_sentinel();
    }
    PriceVector witness{w, alpha};
    rep.witness_prices = w;
    rep.strong_gap = std::abs(price_gap(witness) - rep.distance);
    return rep;
}

} // namespace tropdea
