#include "tropdea/distance.hpp"

#include <algorithm>
#include <cmath>

#include "tropdea/lp.hpp"

namespace tropdea {

namespace {

void check_index(const Dataset& ds, int kbar) {
    if (kbar < 0 || kbar >= ds.size()) throw std::invalid_argument("firm index out of range");
}

double beta_row(const Dataset& ds, int kbar, int k) {
    double b = kInf;
    for (int i = 0; i < ds.inputs(); ++i)
        b = std::min(b, ds.firm(kbar).x[static_cast<size_t>(i)] - ds.firm(k).x[static_cast<size_t>(i)]);
    return b;
}

double beta_c_row(const Dataset& ds, int kbar, int k) {
    double b = kInf;
    for (int j = 0; j < ds.outputs(); ++j)
        b = std::min(b, ds.firm(k).y[static_cast<size_t>(j)] - ds.firm(kbar).y[static_cast<size_t>(j)]);
    return b;
}

// ---- Max-plus closed forms ------------------------------------------------

double maxplus_vrs_in(const Dataset& ds, int kbar) {
    const int ell = ds.size();
    std::vector<double> beta(static_cast<size_t>(ell));
    double beta_max = -kInf;
    for (int k = 0; k < ell; ++k) beta_max = std::max(beta_max, beta[static_cast<size_t>(k)] = beta_row(ds, kbar, k));
    double outer = kInf;
    for (int j = 0; j < ds.outputs(); ++j) {
        double inner = -kInf; // k = kbar always qualifies, so never empty
        for (int k = 0; k < ell; ++k) {
            if (ds.firm(kbar).y[static_cast<size_t>(j)] <= ds.firm(k).y[static_cast<size_t>(j)])
                inner = std::max(inner, ds.firm(k).y[static_cast<size_t>(j)] -
                                            ds.firm(kbar).y[static_cast<size_t>(j)] +
                                            beta[static_cast<size_t>(k)]);
        }
        outer = std::min(outer, inner);
    }
    return std::min(outer, beta_max);
}

double maxplus_vrs_out(const Dataset& ds, int kbar) {
    const int ell = ds.size();
    std::vector<double> beta(static_cast<size_t>(ell));
    for (int k = 0; k < ell; ++k) beta[static_cast<size_t>(k)] = std::min(beta_row(ds, kbar, k), 0.0);
    double outer = kInf;
    for (int j = 0; j < ds.outputs(); ++j) {
        double inner = -kInf;
        for (int k = 0; k < ell; ++k)
            inner = std::max(inner, ds.firm(k).y[static_cast<size_t>(j)] -
                                        ds.firm(kbar).y[static_cast<size_t>(j)] +
                                        beta[static_cast<size_t>(k)]);
        outer = std::min(outer, inner);
    }
    return outer;
}

double maxplus_crs(const Dataset& ds, int kbar) {
    const int ell = ds.size();
    std::vector<double> beta(static_cast<size_t>(ell));
    for (int k = 0; k < ell; ++k) beta[static_cast<size_t>(k)] = beta_row(ds, kbar, k);
    double outer = kInf;
    for (int j = 0; j < ds.outputs(); ++j) {
        double inner = -kInf;
        for (int k = 0; k < ell; ++k)
            inner = std::max(inner, ds.firm(k).y[static_cast<size_t>(j)] -
                                        ds.firm(kbar).y[static_cast<size_t>(j)] +
                                        beta[static_cast<size_t>(k)]);
        outer = std::min(outer, inner);
    }
    return outer;
}

// ---- Direct min-plus closed forms (cross-check path) ----------------------

double minplus_crs(const Dataset& ds, int kbar) {
    const int ell = ds.size();
    std::vector<double> betac(static_cast<size_t>(ell));
    for (int k = 0; k < ell; ++k) betac[static_cast<size_t>(k)] = beta_c_row(ds, kbar, k);
    double outer = kInf;
    for (int i = 0; i < ds.inputs(); ++i) {
        double inner = -kInf;
        for (int k = 0; k < ell; ++k)
            inner = std::max(inner, ds.firm(kbar).x[static_cast<size_t>(i)] -
                                        ds.firm(k).x[static_cast<size_t>(i)] +
                                        betac[static_cast<size_t>(k)]);
        outer = std::min(outer, inner);
    }
    return outer;
}

double minplus_vrs_in(const Dataset& ds, int kbar) {
    const int ell = ds.size();
    std::vector<double> betac(static_cast<size_t>(ell));
    for (int k = 0; k < ell; ++k) betac[static_cast<size_t>(k)] = std::min(beta_c_row(ds, kbar, k), 0.0);
    double outer = kInf;
    for (int i = 0; i < ds.inputs(); ++i) {
        double inner = -kInf;
        for (int k = 0; k < ell; ++k)
            inner = std::max(inner, ds.firm(kbar).x[static_cast<size_t>(i)] -
                                        ds.firm(k).x[static_cast<size_t>(i)] +
                                        betac[static_cast<size_t>(k)]);
        outer = std::min(outer, inner);
    }
    return outer;
}

double tropical_delta(const Dataset& ds, int kbar, TropicalVariant variant, Orientation o);

// Swap identity: evaluating at firm kbar of the negated role-swapped data
// with the opposite orientation and the opposite semiring.
double swap_delta(const Dataset& ds, int kbar, TropicalVariant swapped_variant, Orientation o) {
    Dataset swapped = swap_negate(ds);
    Orientation flipped = o == Orientation::Input ? Orientation::Output : Orientation::Input;
    return tropical_delta(swapped, kbar, swapped_variant, flipped);
}

double tropical_delta(const Dataset& ds, int kbar, TropicalVariant variant, Orientation o) {
    switch (variant) {
    case TropicalVariant::MaxPlusVRS:
        return o == Orientation::Input ? maxplus_vrs_in(ds, kbar) : maxplus_vrs_out(ds, kbar);
    case TropicalVariant::MaxPlusCRS:
        if (o == Orientation::Input) return maxplus_crs(ds, kbar);
        return swap_delta(ds, kbar, TropicalVariant::MinPlusCRS, o);
    case TropicalVariant::MinPlusCRS:
        if (o == Orientation::Input) return minplus_crs(ds, kbar);
        return swap_delta(ds, kbar, TropicalVariant::MaxPlusCRS, o);
    case TropicalVariant::MinPlusVRS:
        if (o == Orientation::Input) {
            double via_swap = swap_delta(ds, kbar, TropicalVariant::MaxPlusVRS, o);
            double direct = minplus_vrs_in(ds, kbar);
            if (via_swap != direct)
                throw numerical_error("min-plus VRS input: swap identity and direct form disagree");
            return via_swap;
        }
        return swap_delta(ds, kbar, TropicalVariant::MaxPlusVRS, o);
    }
    throw std::logic_error("unreachable tropical variant");
}

TechSpec tech_for(TropicalVariant variant) {
    TechSpec t;
    bool maxplus = variant == TropicalVariant::MaxPlusVRS || variant == TropicalVariant::MaxPlusCRS;
    bool vrs = variant == TropicalVariant::MaxPlusVRS || variant == TropicalVariant::MinPlusVRS;
    t.family = vrs ? Family::QuantizedVRS : Family::QuantizedCRS;
    t.alpha = maxplus ? Alpha::plus_inf() : Alpha::minus_inf();
    return t;
}

ScoreRecord make_record(const Dataset& ds, int kbar, const TechSpec& tech, Orientation o,
                        double delta) {
    ScoreRecord r;
    r.firm_id = ds.firm(kbar).id;
    r.firm_index = kbar;
    r.tech = tech;
    r.orientation = o;
    r.delta = delta + 0.0; // normalize -0
    r.benchmark.x = ds.firm(kbar).x;
    r.benchmark.y = ds.firm(kbar).y;
    if (o == Orientation::Input)
        for (double& v : r.benchmark.x) v -= r.delta;
    else
        for (double& v : r.benchmark.y) v += r.delta;
    bool negative = false;
    for (double v : r.benchmark.x) negative = negative || v < 0.0;
    for (double v : r.benchmark.y) negative = negative || v < 0.0;
    if (negative) r.flags.push_back("benchmark-negative");
    if (ds.integral() && r.delta == std::round(r.delta)) {
        bool bench_integral = true;
        for (double v : r.benchmark.x) bench_integral = bench_integral && v == std::round(v);
        for (double v : r.benchmark.y) bench_integral = bench_integral && v == std::round(v);
        r.integral = bench_integral;
    }
    return r;
}

} // namespace

BetaTable beta_tables(const Dataset& ds) {
    const int ell = ds.size();
    BetaTable t;
    t.beta.assign(static_cast<size_t>(ell), std::vector<double>(static_cast<size_t>(ell)));
    t.beta_c.assign(static_cast<size_t>(ell), std::vector<double>(static_cast<size_t>(ell)));
    for (int kbar = 0; kbar < ell; ++kbar)
        for (int k = 0; k < ell; ++k) {
            t.beta[static_cast<size_t>(kbar)][static_cast<size_t>(k)] = beta_row(ds, kbar, k);
            t.beta_c[static_cast<size_t>(kbar)][static_cast<size_t>(k)] = beta_c_row(ds, kbar, k);
        }
    return t;
}

ScoreRecord distance_tropical(const Dataset& ds, int kbar, TropicalVariant variant, Orientation o) {
    check_index(ds, kbar);
    double delta = tropical_delta(ds, kbar, variant, o);
    return make_record(ds, kbar, tech_for(variant), o, delta);
}

ScoreRecord distance_quantized_lp(const Dataset& ds, int kbar, double alpha, bool vrs,
                                  Orientation o) {
    check_index(ds, kbar);
    if (alpha == 0.0 || !std::isfinite(alpha))
        throw std::invalid_argument("quantized LP distance requires finite nonzero alpha");
    const int ell = ds.size();
    const int m = ds.inputs();
    const int n = ds.outputs();
    const bool positive = alpha > 0.0;
    const bool input = o == Orientation::Input;
    const Firm& f = ds.firm(kbar);

    // The raw transformed coefficients span e^{alpha * coordinate range},
    // far beyond double precision at large |alpha|. Gauge each weight by its
    // tropical witness activity and each row by its right-hand exponent:
    // everything binding at the optimum then stays O(1), and what underflows
    // is provably negligible for the optimum.
    double guess = tropical_delta(ds, kbar,
                                  positive ? (vrs ? TropicalVariant::MaxPlusVRS : TropicalVariant::MaxPlusCRS)
                                           : (vrs ? TropicalVariant::MinPlusVRS : TropicalVariant::MinPlusCRS),
                                  o);
    std::vector<double> gauge(static_cast<size_t>(ell)); // predicted log-activity of s_k
    for (int k = 0; k < ell; ++k) {
        double p;
        if (positive) {
            p = kInf;
            for (int i = 0; i < m; ++i)
                p = std::min(p, f.x[static_cast<size_t>(i)] - ds.firm(k).x[static_cast<size_t>(i)]);
            if (input) p -= guess;
            if (vrs) p = std::min(p, 0.0);
        } else {
            p = -kInf;
            for (int j = 0; j < n; ++j)
                p = std::max(p, f.y[static_cast<size_t>(j)] - ds.firm(k).y[static_cast<size_t>(j)]);
            if (!input) p += guess;
            if (vrs) p = std::max(p, 0.0);
        }
        gauge[static_cast<size_t>(k)] = p;
    }
    const double radial_gauge = input ? -guess : guess; // predicted (1/alpha) log of lambda / theta

    auto ex = [&](double e) {
        double r = std::exp(alpha * e);
        if (std::isnan(r)) throw numerical_error("exponential transform failed in distance LP");
        return std::isinf(r) ? std::numeric_limits<double>::max() : r;
    };

    // Variable 0 is the gauged radial factor, then the gauged weights.
    LpProblem lp;
    lp.c.assign(static_cast<size_t>(ell) + 1, 0.0);
    lp.c[0] = 1.0;
    // min lambda for (input, alpha>0) and (output, alpha<0); max otherwise.
    lp.sense = (input == positive) ? Sense::Minimize : Sense::Maximize;
    std::vector<double> row_offset; // log-scale removed from each row

    for (int i = 0; i < m; ++i) {
        double base = f.x[static_cast<size_t>(i)] + (input ? radial_gauge : 0.0);
        std::vector<double> row(static_cast<size_t>(ell) + 1, 0.0);
        for (int k = 0; k < ell; ++k)
            row[static_cast<size_t>(k) + 1] =
                ex(ds.firm(k).x[static_cast<size_t>(i)] + gauge[static_cast<size_t>(k)] - base);
        if (input) {
            row[0] = -1.0;
            lp.add(std::move(row), positive ? Rel::Le : Rel::Ge, 0.0);
        } else {
            lp.add(std::move(row), positive ? Rel::Le : Rel::Ge, 1.0);
        }
        row_offset.push_back(base);
    }
    for (int j = 0; j < n; ++j) {
        double base = f.y[static_cast<size_t>(j)] + (input ? 0.0 : radial_gauge);
        std::vector<double> row(static_cast<size_t>(ell) + 1, 0.0);
        for (int k = 0; k < ell; ++k)
            row[static_cast<size_t>(k) + 1] =
                ex(ds.firm(k).y[static_cast<size_t>(j)] + gauge[static_cast<size_t>(k)] - base);
        if (input) {
            lp.add(std::move(row), positive ? Rel::Ge : Rel::Le, 1.0);
        } else {
            row[0] = -1.0;
            lp.add(std::move(row), positive ? Rel::Ge : Rel::Le, 0.0);
        }
        row_offset.push_back(base);
    }
    if (vrs) {
        std::vector<double> row(static_cast<size_t>(ell) + 1, 0.0);
        for (int k = 0; k < ell; ++k) row[static_cast<size_t>(k) + 1] = ex(gauge[static_cast<size_t>(k)]);
        lp.add(std::move(row), Rel::Eq, 1.0);
        row_offset.push_back(0.0);
    }

    LpSolution s = solve(lp);
    if (s.status != LpStatus::Optimal)
        throw numerical_error("quantized distance LP " +
                              std::string(s.status == LpStatus::Infeasible ? "infeasible" : "unbounded") +
                              " at an observed firm");
    double rho = s.x[0];
    if (rho <= 0.0) throw numerical_error("quantized distance LP returned a nonpositive factor");
    // lambda = rho * e^{alpha * radial_gauge}; the delta recovery is the same
    // for both signs of alpha.
    double delta = input ? -std::log(rho) / alpha + guess : std::log(rho) / alpha + guess;

    TechSpec tech;
    tech.family = vrs ? Family::QuantizedVRS : Family::QuantizedCRS;
    tech.alpha = Alpha::finite(alpha);
    ScoreRecord r = make_record(ds, kbar, tech, o, delta);
    double factor = std::exp(alpha * (input ? -delta : delta));
    if (std::isfinite(factor)) r.farrell_value = factor;
    // Undo the row gauges on the multipliers; at extreme alpha they may
    // leave double range, in which case no duals are reported.
    std::vector<double> duals(s.duals.size());
    bool duals_ok = true;
    for (size_t i = 0; i < s.duals.size(); ++i) {
        duals[i] = s.duals[i] * std::exp(-alpha * row_offset[i]);
        duals_ok = duals_ok && std::isfinite(duals[i]);
    }
    if (duals_ok) r.duals = std::move(duals);
    return r;
}

ScoreRecord distance_convex(const Dataset& ds, int kbar, bool vrs, Orientation o) {
    check_index(ds, kbar);
    const int ell = ds.size();
    const int m = ds.inputs();
    const int n = ds.outputs();
    const bool input = o == Orientation::Input;

    // Variables: delta+ (0), delta- (1), weights t_k (2..).
    LpProblem lp;
    lp.sense = Sense::Maximize;
    lp.c.assign(static_cast<size_t>(ell) + 2, 0.0);
    lp.c[0] = 1.0;
    lp.c[1] = -1.0;

    for (int i = 0; i < m; ++i) {
        std::vector<double> row(static_cast<size_t>(ell) + 2, 0.0);
        for (int k = 0; k < ell; ++k) row[static_cast<size_t>(k) + 2] = ds.firm(k).x[static_cast<size_t>(i)];
        if (input) {
            row[0] = 1.0;
            row[1] = -1.0;
        }
        lp.add(std::move(row), Rel::Le, ds.firm(kbar).x[static_cast<size_t>(i)]);
    }
    for (int j = 0; j < n; ++j) {
        std::vector<double> row(static_cast<size_t>(ell) + 2, 0.0);
        for (int k = 0; k < ell; ++k) row[static_cast<size_t>(k) + 2] = ds.firm(k).y[static_cast<size_t>(j)];
        if (!input) {
            row[0] = -1.0;
            row[1] = 1.0;
        }
        lp.add(std::move(row), Rel::Ge, ds.firm(kbar).y[static_cast<size_t>(j)]);
    }
    if (vrs) {
        std::vector<double> row(static_cast<size_t>(ell) + 2, 0.0);
        for (int k = 0; k < ell; ++k) row[static_cast<size_t>(k) + 2] = 1.0;
        lp.add(std::move(row), Rel::Eq, 1.0);
    }

    LpSolution s = solve(lp);
    if (s.status != LpStatus::Optimal)
        throw numerical_error("convex distance LP " +
                              std::string(s.status == LpStatus::Infeasible ? "infeasible" : "unbounded") +
                              " at an observed firm");
    double delta = s.x[0] - s.x[1];
    TechSpec tech;
    tech.family = vrs ? Family::ConvexVRS : Family::ConvexCRS;
    ScoreRecord r = make_record(ds, kbar, tech, o, delta);
    r.duals = s.duals;
    return r;
}

ScoreRecord distance_fdh(const Dataset& ds, int kbar, Orientation o) {
    check_index(ds, kbar);
    const Firm& f = ds.firm(kbar);
    double best = -kInf; // k = kbar always qualifies, giving 0
    if (o == Orientation::Output) {
        for (int k = 0; k < ds.size(); ++k) {
            const Firm& g = ds.firm(k);
            bool ok = true;
            for (size_t i = 0; i < f.x.size(); ++i)
                if (g.x[i] > f.x[i]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            double v = kInf;
            for (size_t j = 0; j < f.y.size(); ++j) v = std::min(v, g.y[j] - f.y[j]);
            best = std::max(best, v);
        }
    } else {
        for (int k = 0; k < ds.size(); ++k) {
            const Firm& g = ds.firm(k);
            bool ok = true;
            for (size_t j = 0; j < f.y.size(); ++j)
                if (g.y[j] < f.y[j]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            double v = kInf;
            for (size_t i = 0; i < f.x.size(); ++i) v = std::min(v, f.x[i] - g.x[i]);
            best = std::max(best, v);
        }
    }
    TechSpec tech;
    tech.family = Family::FDH;
    return make_record(ds, kbar, tech, o, best);
}

double farrell(const Dataset& ds, int kbar, Family family, Orientation o) {
    check_index(ds, kbar);
    const Firm& f = ds.firm(kbar);
    const bool input = o == Orientation::Input;
    {
        const RVec& ref = input ? f.x : f.y;
        bool all_zero = true;
        for (double v : ref) all_zero = all_zero && v == 0.0;
        if (all_zero)
            throw std::invalid_argument("radial measure undefined for a zero reference vector");
    }

    if (family == Family::FDH) {
        double best = input ? kInf : -kInf;
        for (int k = 0; k < ds.size(); ++k) {
            const Firm& g = ds.firm(k);
            if (input) {
                bool ok = true;
                for (size_t j = 0; j < f.y.size(); ++j)
                    if (g.y[j] < f.y[j]) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                double lam = 0.0;
                bool feasible = true;
                for (size_t i = 0; i < f.x.size(); ++i) {
                    if (f.x[i] > 0.0)
                        lam = std::max(lam, g.x[i] / f.x[i]);
                    else if (g.x[i] > 0.0)
                        feasible = false;
                }
                if (feasible) best = std::min(best, lam);
            } else {
                bool ok = true;
                for (size_t i = 0; i < f.x.size(); ++i)
                    if (g.x[i] > f.x[i]) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                double theta = kInf;
                for (size_t j = 0; j < f.y.size(); ++j)
                    if (f.y[j] > 0.0) theta = std::min(theta, g.y[j] / f.y[j]);
                best = std::max(best, theta);
            }
        }
        return best;
    }

    if (family != Family::ConvexVRS && family != Family::ConvexCRS)
        throw std::invalid_argument("radial measure implemented for convex and FDH families");
    const bool vrs = family == Family::ConvexVRS;
    const int ell = ds.size();

    LpProblem lp;
    lp.c.assign(static_cast<size_t>(ell) + 1, 0.0);
    lp.c[0] = 1.0;
    lp.sense = input ? Sense::Minimize : Sense::Maximize;
    for (int i = 0; i < ds.inputs(); ++i) {
        std::vector<double> row(static_cast<size_t>(ell) + 1, 0.0);
        for (int k = 0; k < ell; ++k) row[static_cast<size_t>(k) + 1] = ds.firm(k).x[static_cast<size_t>(i)];
        if (input) {
            row[0] = -f.x[static_cast<size_t>(i)];
            lp.add(std::move(row), Rel::Le, 0.0);
        } else {
            lp.add(std::move(row), Rel::Le, f.x[static_cast<size_t>(i)]);
        }
    }
    for (int j = 0; j < ds.outputs(); ++j) {
        std::vector<double> row(static_cast<size_t>(ell) + 1, 0.0);
        for (int k = 0; k < ell; ++k) row[static_cast<size_t>(k) + 1] = ds.firm(k).y[static_cast<size_t>(j)];
        if (input) {
            lp.add(std::move(row), Rel::Ge, f.y[static_cast<size_t>(j)]);
        } else {
            row[0] = -f.y[static_cast<size_t>(j)];
            lp.add(std::move(row), Rel::Ge, 0.0);
        }
    }
    if (vrs) {
        std::vector<double> row(static_cast<size_t>(ell) + 1, 0.0);
        for (int k = 0; k < ell; ++k) row[static_cast<size_t>(k) + 1] = 1.0;
        lp.add(std::move(row), Rel::Eq, 1.0);
    }
    LpSolution s = solve(lp);
    if (s.status != LpStatus::Optimal)
        throw numerical_error("radial measure LP failed at an observed firm");
    return s.x[0];
}

std::vector<ScoreRecord> score_all(const Dataset& ds, const TechSpec& tech, Orientation o,
                                   bool parallel) {
    if (tech.discrete && !ds.integral())
        throw std::invalid_argument("discrete technology requires integer-valued data");

    auto eval = [&](int k) {
        ScoreRecord r;
        switch (tech.family) {
        case Family::FDH:
            r = distance_fdh(ds, k, o);
            break;
        case Family::ConvexVRS:
        case Family::ConvexCRS:
            r = distance_convex(ds, k, tech.family == Family::ConvexVRS, o);
            break;
        case Family::QuantizedVRS:
        case Family::QuantizedCRS: {
            bool vrs = tech.family == Family::QuantizedVRS;
            if (tech.alpha.is_finite()) {
                r = distance_quantized_lp(ds, k, tech.alpha.value(), vrs, o);
            } else {
                bool maxplus = tech.alpha.is_plus_inf();
                TropicalVariant v = maxplus
                                        ? (vrs ? TropicalVariant::MaxPlusVRS : TropicalVariant::MaxPlusCRS)
                                        : (vrs ? TropicalVariant::MinPlusVRS : TropicalVariant::MinPlusCRS);
                r = distance_tropical(ds, k, v, o);
            }
            break;
        }
        }
        if (tech.discrete) {
            double rounded = std::round(r.delta);
            if (std::abs(r.delta - rounded) > 1e-9)
                throw numerical_error("discrete technology produced a non-integer distance");
            r.delta = rounded;
            r.benchmark.x = ds.firm(k).x;
            r.benchmark.y = ds.firm(k).y;
            if (o == Orientation::Input)
                for (double& v : r.benchmark.x) v -= rounded;
            else
                for (double& v : r.benchmark.y) v += rounded;
            r.integral = true;
            r.tech = tech;
        }
        return r;
    };

    std::vector<ScoreRecord> out(static_cast<size_t>(ds.size()));
    if (parallel) {
        std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
        for (int k = 0; k < ds.size(); ++k) {
            try {
                out[static_cast<size_t>(k)] = eval(k);
            } catch (...) {
#pragma omp critical
                if (!err) err = std::current_exception();
            }
        }
        if (err) std::rethrow_exception(err);
    } else {
        for (int k = 0; k < ds.size(); ++k) out[static_cast<size_t>(k)] = eval(k);
    }
    return out;
}

} // namespace tropdea
