#include "tropdea/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "tropdea/duality.hpp"
#include "tropdea/hulls.hpp"
#include "tropdea/kp_algebra.hpp"
#include "tropdea/lp.hpp"
#include "tropdea/rng.hpp"

namespace tropdea {

namespace {

// ---------------------------------------------------------------------------
// Membership routines of the oracle. These re-derive FDH dominance and the
// tropical feasibility tests from the set definitions instead of reusing the
// engine's residuation code.
// ---------------------------------------------------------------------------

bool oracle_member_fdh(const Dataset& ds, const Point& p) {
    for (const Firm& f : ds.firms()) {
        bool covers = true;
        for (size_t i = 0; i < f.x.size() && covers; ++i) covers = f.x[i] <= p.x[i];
        for (size_t j = 0; j < f.y.size() && covers; ++j) covers = f.y[j] >= p.y[j];
        if (covers) return true;
    }
    return false;
}

// Max-plus: each firm's weight is bounded by its worst input slack; the
// point is feasible when every output coordinate is reachable at those
// bounds. VRS additionally pins the weights at or below zero with at least
// one firm available at weight zero.
bool oracle_member_tropical(const Dataset& ds, const Point& p, bool maxplus, bool vrs) {
    const int ell = ds.size();
    if (maxplus) {
        bool some_free = false;
        std::vector<double> slack(static_cast<size_t>(ell));
        for (int k = 0; k < ell; ++k) {
            double s = kInf;
            for (size_t i = 0; i < p.x.size(); ++i) s = std::min(s, p.x[i] - ds.firm(k).x[i]);
            if (vrs) {
                some_free = some_free || s >= 0.0;
                s = std::min(s, 0.0);
            }
            slack[static_cast<size_t>(k)] = s;
        }
        if (vrs && !some_free) return false;
        for (size_t j = 0; j < p.y.size(); ++j) {
            double reach = -kInf;
            for (int k = 0; k < ell; ++k)
                reach = std::max(reach, slack[static_cast<size_t>(k)] + ds.firm(k).y[j]);
            if (reach < p.y[j]) return false;
        }
        return true;
    }
    bool some_free = false;
    std::vector<double> need(static_cast<size_t>(ell));
    for (int k = 0; k < ell; ++k) {
        double s = -kInf;
        for (size_t j = 0; j < p.y.size(); ++j) s = std::max(s, p.y[j] - ds.firm(k).y[j]);
        if (vrs) {
            some_free = some_free || s <= 0.0;
            s = std::max(s, 0.0);
        }
        need[static_cast<size_t>(k)] = s;
    }
    if (vrs && !some_free) return false;
    for (size_t i = 0; i < p.x.size(); ++i) {
        double floor_cost = kInf;
        for (int k = 0; k < ell; ++k)
            floor_cost = std::min(floor_cost, need[static_cast<size_t>(k)] + ds.firm(k).x[i]);
        if (floor_cost > p.x[i]) return false;
    }
    return true;
}

bool oracle_member(const TechSpec& tech, const Dataset& ds, const Point& p) {
    if (tech.family == Family::FDH) return oracle_member_fdh(ds, p);
    if (tech.tropical())
        return oracle_member_tropical(ds, p, tech.alpha.is_plus_inf(),
                                      tech.family == Family::QuantizedVRS);
    // Finite-alpha and convex families: constraint-level LP feasibility.
    return contains(tech, ds, p, /*strict=*/false).member;
}

// ---------------------------------------------------------------------------
// Closed forms re-derived for the identity checks (independent of the
// engine's implementations in distance.cpp).
// ---------------------------------------------------------------------------

double o_beta(const Dataset& ds, int kb, int k) {
    double b = kInf;
    for (int i = 0; i < ds.inputs(); ++i)
        b = std::min(b, ds.firm(kb).x[static_cast<size_t>(i)] - ds.firm(k).x[static_cast<size_t>(i)]);
    return b;
}

double o_beta_c(const Dataset& ds, int kb, int k) {
    double b = kInf;
    for (int j = 0; j < ds.outputs(); ++j)
        b = std::min(b, ds.firm(k).y[static_cast<size_t>(j)] - ds.firm(kb).y[static_cast<size_t>(j)]);
    return b;
}

double o_maxplus_crs(const Dataset& ds, int kb) {
    double outer = kInf;
    for (int j = 0; j < ds.outputs(); ++j) {
        double inner = -kInf;
        for (int k = 0; k < ds.size(); ++k)
            inner = std::max(inner, ds.firm(k).y[static_cast<size_t>(j)] -
                                        ds.firm(kb).y[static_cast<size_t>(j)] + o_beta(ds, kb, k));
        outer = std::min(outer, inner);
    }
    return outer;
}

double o_maxplus_vrs_in(const Dataset& ds, int kb) {
    double cap = -kInf;
    for (int k = 0; k < ds.size(); ++k) cap = std::max(cap, o_beta(ds, kb, k));
    double outer = kInf;
    for (int j = 0; j < ds.outputs(); ++j) {
        double inner = -kInf;
        for (int k = 0; k < ds.size(); ++k) {
            if (ds.firm(kb).y[static_cast<size_t>(j)] > ds.firm(k).y[static_cast<size_t>(j)]) continue;
            inner = std::max(inner, ds.firm(k).y[static_cast<size_t>(j)] -
                                        ds.firm(kb).y[static_cast<size_t>(j)] + o_beta(ds, kb, k));
        }
        outer = std::min(outer, inner);
    }
    return std::min(outer, cap);
}

double o_maxplus_vrs_out(const Dataset& ds, int kb) {
    double outer = kInf;
    for (int j = 0; j < ds.outputs(); ++j) {
        double inner = -kInf;
        for (int k = 0; k < ds.size(); ++k)
            inner = std::max(inner, ds.firm(k).y[static_cast<size_t>(j)] -
                                        ds.firm(kb).y[static_cast<size_t>(j)] +
                                        std::min(o_beta(ds, kb, k), 0.0));
        outer = std::min(outer, inner);
    }
    return outer;
}

double o_minplus_crs(const Dataset& ds, int kb) {
    double outer = kInf;
    for (int i = 0; i < ds.inputs(); ++i) {
        double inner = -kInf;
        for (int k = 0; k < ds.size(); ++k)
            inner = std::max(inner, ds.firm(kb).x[static_cast<size_t>(i)] -
                                        ds.firm(k).x[static_cast<size_t>(i)] + o_beta_c(ds, kb, k));
        outer = std::min(outer, inner);
    }
    return outer;
}

double o_minplus_vrs_in(const Dataset& ds, int kb) {
    double outer = kInf;
    for (int i = 0; i < ds.inputs(); ++i) {
        double inner = -kInf;
        for (int k = 0; k < ds.size(); ++k)
            inner = std::max(inner, ds.firm(kb).x[static_cast<size_t>(i)] -
                                        ds.firm(k).x[static_cast<size_t>(i)] +
                                        std::min(o_beta_c(ds, kb, k), 0.0));
        outer = std::min(outer, inner);
    }
    return outer;
}

double o_minplus_vrs_out(const Dataset& ds, int kb) {
    double cap = -kInf;
    for (int k = 0; k < ds.size(); ++k) cap = std::max(cap, o_beta_c(ds, kb, k));
    double outer = kInf;
    for (int i = 0; i < ds.inputs(); ++i) {
        double inner = -kInf;
        for (int k = 0; k < ds.size(); ++k) {
            if (ds.firm(k).x[static_cast<size_t>(i)] > ds.firm(kb).x[static_cast<size_t>(i)]) continue;
            inner = std::max(inner, ds.firm(kb).x[static_cast<size_t>(i)] -
                                        ds.firm(k).x[static_cast<size_t>(i)] + o_beta_c(ds, kb, k));
        }
        outer = std::min(outer, inner);
    }
    return std::min(outer, cap);
}

// ---------------------------------------------------------------------------

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

OracleReport make_report(std::string name, double oracle_value, double engine_value,
                         double tolerance) {
    OracleReport r;
    r.instance = std::move(name);
    r.oracle_value = oracle_value;
    r.engine_value = engine_value;
    r.gap = std::abs(oracle_value - engine_value);
    r.tolerance = tolerance;
    r.pass = r.gap <= tolerance;
    return r;
}

OracleReport make_flag_report(std::string name, bool pass, double gap = 0.0, double tol = 0.0) {
    OracleReport r;
    r.instance = std::move(name);
    r.oracle_value = 0.0;
    r.engine_value = gap;
    r.gap = gap;
    r.tolerance = tol;
    r.pass = pass;
    return r;
}

Point shifted_point(const Point& p, Orientation o, double delta) {
    Point q = p;
    if (o == Orientation::Input)
        for (double& v : q.x) v -= delta;
    else
        for (double& v : q.y) v += delta;
    return q;
}

} // namespace

Dataset random_dataset(uint64_t seed, int max_firms, int max_dim, bool integer) {
    Rng rng(seed);
    int ell = 2 + static_cast<int>(rng.below(static_cast<uint64_t>(std::max(1, max_firms - 1))));
    int m = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(max_dim)));
    int n = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(max_dim)));
    std::vector<Firm> firms;
    firms.reserve(static_cast<size_t>(ell));
    for (int k = 0; k < ell; ++k) {
        Firm f;
        f.id = "f" + std::to_string(k + 1);
        for (int i = 0; i < m; ++i)
            f.x.push_back(integer ? static_cast<double>(rng.below(11)) : rng.uniform(0.0, 8.0));
        for (int j = 0; j < n; ++j)
            f.y.push_back(integer ? static_cast<double>(rng.below(11)) : rng.uniform(0.0, 8.0));
        firms.push_back(std::move(f));
    }
    return Dataset::validated(m, n, std::move(firms));
}

double bisect_distance(const TechSpec& tech, const Dataset& ds, const Point& p, Orientation o,
                       double tol) {
    if (tol <= 0.0) throw std::invalid_argument("bisection tolerance must be positive");
    TechSpec continuous = tech;
    continuous.discrete = false; // shift probes are not lattice points

    auto feasible = [&](double delta) {
        return oracle_member(continuous, ds, shifted_point(p, o, delta));
    };
    if (!feasible(0.0)) throw std::invalid_argument("bisection start point is not feasible");

    double scale = 1.0;
    for (double v : p.x) scale = std::max(scale, std::abs(v));
    for (double v : p.y) scale = std::max(scale, std::abs(v));
    double lo = 0.0;
    double hi = 1.0;
    while (feasible(hi)) {
        lo = hi;
        hi *= 2.0;
        if (hi > scale * 1099511627776.0) // 2^40
            throw numerical_error("bisection bracket exceeded: shift appears unbounded");
    }
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        (feasible(mid) ? lo : hi) = mid;
    }
    return lo;
}

OracleReport grid_lp_check(const Dataset& ds, int kbar, double alpha, bool vrs, Orientation o,
                           double resolution) {
    if (ds.size() > 3) throw std::invalid_argument("grid check is exponential; need ell <= 3");
    if (resolution <= 0.0 || resolution > 0.5) throw std::invalid_argument("bad grid resolution");
    const int ell = ds.size();
    const int m = ds.inputs();
    const int n = ds.outputs();
    const bool positive = alpha > 0.0;
    const bool input = o == Orientation::Input;

    auto ex = [&](double v) { return std::exp(alpha * v); };
    std::vector<std::vector<double>> X(static_cast<size_t>(m), std::vector<double>(static_cast<size_t>(ell)));
    std::vector<std::vector<double>> Y(static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(ell)));
    RVec xb(static_cast<size_t>(m)), yb(static_cast<size_t>(n));
    for (int i = 0; i < m; ++i) {
        for (int k = 0; k < ell; ++k) X[static_cast<size_t>(i)][static_cast<size_t>(k)] = ex(ds.firm(k).x[static_cast<size_t>(i)]);
        xb[static_cast<size_t>(i)] = ex(ds.firm(kbar).x[static_cast<size_t>(i)]);
    }
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < ell; ++k) Y[static_cast<size_t>(j)][static_cast<size_t>(k)] = ex(ds.firm(k).y[static_cast<size_t>(j)]);
        yb[static_cast<size_t>(j)] = ex(ds.firm(kbar).y[static_cast<size_t>(j)]);
    }

    auto dot = [&](const std::vector<double>& row, const std::vector<double>& s) {
        double acc = 0.0;
        for (int k = 0; k < ell; ++k) acc += row[static_cast<size_t>(k)] * s[static_cast<size_t>(k)];
        return acc;
    };

    // Best radial factor for fixed weights; +-inf when the fixed-side rows
    // fail. For CRS the weights are rescaled onto the binding constraint.
    auto factor_for = [&](std::vector<double> s) -> double {
        const bool fixed_lower = input == positive; // fixed rows bound the aggregation from below
        if (!vrs) {
            // Rescale onto the binding fixed-side constraint: the smallest
            // admissible scale when the rows are lower bounds, the largest
            // otherwise (both are optimal for the oriented objective).
            double c = fixed_lower ? 0.0 : kInf;
            const auto& rows = input ? Y : X;
            const auto& bound = input ? yb : xb;
            for (size_t r = 0; r < rows.size(); ++r) {
                double agg = dot(rows[r], s);
                if (agg <= 0.0) return fixed_lower ? kInf : -kInf;
                double ratio = bound[r] / agg;
                c = fixed_lower ? std::max(c, ratio) : std::min(c, ratio);
            }
            for (double& v : s) v *= c;
        } else {
            const auto& rows = input ? Y : X;
            const auto& bound = input ? yb : xb;
            for (size_t r = 0; r < rows.size(); ++r) {
                double agg = dot(rows[r], s);
                bool ok = fixed_lower ? agg >= bound[r] : agg <= bound[r];
                if (!ok) return fixed_lower ? kInf : -kInf;
            }
        }
        const auto& rows = input ? X : Y;
        const auto& bound = input ? xb : yb;
        double f = fixed_lower ? -kInf : kInf;
        for (size_t r = 0; r < rows.size(); ++r) {
            double ratio = dot(rows[r], s) / bound[r];
            f = fixed_lower ? std::max(f, ratio) : std::min(f, ratio);
        }
        return f;
    };

    const bool minimize = input == positive;
    double best = minimize ? kInf : -kInf;
    const int steps = static_cast<int>(std::llround(1.0 / resolution));
    std::vector<double> s(static_cast<size_t>(ell), 0.0);
    if (ell == 1) {
        s[0] = 1.0;
        best = factor_for(s);
    } else if (ell == 2) {
        for (int i = 0; i <= steps; ++i) {
            s[0] = static_cast<double>(i) / steps;
            s[1] = 1.0 - s[0];
            double f = factor_for(s);
            best = minimize ? std::min(best, f) : std::max(best, f);
        }
    } else {
        for (int i = 0; i <= steps; ++i) {
            for (int j = 0; j <= steps - i; ++j) {
                s[0] = static_cast<double>(i) / steps;
                s[1] = static_cast<double>(j) / steps;
                s[2] = 1.0 - s[0] - s[1];
                double f = factor_for(s);
                best = minimize ? std::min(best, f) : std::max(best, f);
            }
        }
    }

    ScoreRecord lp = distance_quantized_lp(ds, kbar, alpha, vrs, o);
    double grid_delta = input ? -std::log(best) / alpha : std::log(best) / alpha;

    // Allowance: a grid step moves each aggregation by at most the largest
    // coefficient ratio, which maps to delta through 1/(|alpha| * factor).
    double ratio = 0.0;
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < ell; ++k)
            ratio = std::max(ratio, X[static_cast<size_t>(i)][static_cast<size_t>(k)] / xb[static_cast<size_t>(i)]);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < ell; ++k)
            ratio = std::max(ratio, Y[static_cast<size_t>(j)][static_cast<size_t>(k)] / yb[static_cast<size_t>(j)]);
    double slack = 3.0 * ratio * resolution / (std::abs(alpha) * std::min(best, *lp.farrell_value)) + 1e-6;

    char name[128];
    std::snprintf(name, sizeof name, "lp-vs-grid ell=%d alpha=%s %s %s", ell, fmt(alpha).c_str(),
                  vrs ? "vrs" : "crs", to_string(o));
    return make_report(name, grid_delta, lp.delta, slack);
}

// ---------------------------------------------------------------------------
// The randomized battery.
// ---------------------------------------------------------------------------

namespace {

void swap_identities(std::vector<OracleReport>& out, uint64_t seed, int count) {
    double worst_vrs = 0.0;
    double worst_crs = 0.0;
    for (int i = 0; i < count; ++i) {
        Dataset ds = random_dataset(Rng::stream(seed, static_cast<uint64_t>(i)).next(), 8, 3,
                                    i % 2 == 0);
        Dataset dc = swap_negate(ds);
        for (int k = 0; k < ds.size(); ++k) {
            worst_vrs = std::max(worst_vrs, std::abs(o_maxplus_vrs_out(ds, k) - o_minplus_vrs_in(dc, k)));
            worst_vrs = std::max(worst_vrs, std::abs(o_maxplus_vrs_in(ds, k) - o_minplus_vrs_out(dc, k)));
            worst_vrs = std::max(worst_vrs, std::abs(o_minplus_vrs_out(ds, k) - o_maxplus_vrs_in(dc, k)));
            worst_vrs = std::max(worst_vrs, std::abs(o_minplus_vrs_in(ds, k) - o_maxplus_vrs_out(dc, k)));
            worst_crs = std::max(worst_crs, std::abs(o_maxplus_crs(ds, k) - o_minplus_crs(dc, k)));
            worst_crs = std::max(worst_crs, std::abs(o_minplus_crs(ds, k) - o_maxplus_crs(dc, k)));
        }
    }
    out.push_back(make_report("duality-swap-vrs (" + std::to_string(count) + " datasets)", 0.0,
                              worst_vrs, 1e-12));
    out.push_back(make_report("duality-swap-crs (" + std::to_string(count) + " datasets)", 0.0,
                              worst_crs, 1e-12));
}

void crs_orientation_identity(std::vector<OracleReport>& out, uint64_t seed, int count) {
    double worst = 0.0;
    for (int i = 0; i < count; ++i) {
        Dataset ds = random_dataset(Rng::stream(seed, 7000 + static_cast<uint64_t>(i)).next(), 8, 3,
                                    i % 2 == 1);
        for (int k = 0; k < ds.size(); ++k) {
            for (TropicalVariant v : {TropicalVariant::MaxPlusCRS, TropicalVariant::MinPlusCRS}) {
                double din = distance_tropical(ds, k, v, Orientation::Input).delta;
                double dout = distance_tropical(ds, k, v, Orientation::Output).delta;
                worst = std::max(worst, std::abs(din - dout));
            }
        }
    }
    out.push_back(make_flag_report("crs-input-output-identity (" + std::to_string(count) +
                                       " datasets)",
                                   worst == 0.0, worst, 0.0));
}

void integer_properties(std::vector<OracleReport>& out, uint64_t seed, int count) {
    bool deltas_ok = true;
    bool bench_ok = true;
    bool discrete_ok = true;
    for (int i = 0; i < count; ++i) {
        Dataset ds = random_dataset(Rng::stream(seed, 11000 + static_cast<uint64_t>(i)).next(), 8, 3,
                                    /*integer=*/true);
        for (Orientation o : {Orientation::Input, Orientation::Output}) {
            std::vector<std::pair<TechSpec, std::vector<ScoreRecord>>> runs;
            for (const char* name :
                 {"quant-vrs:+inf", "quant-crs:+inf", "quant-vrs:-inf", "quant-crs:-inf", "fdh"}) {
                TechSpec t = TechSpec::parse(name);
                runs.emplace_back(t, score_all(ds, t, o, /*parallel=*/false));
            }
            for (auto& [tech, scores] : runs) {
                TechSpec discrete = tech;
                discrete.discrete = true;
                std::vector<ScoreRecord> zscores = score_all(ds, discrete, o, /*parallel=*/false);
                for (int k = 0; k < ds.size(); ++k) {
                    const ScoreRecord& r = scores[static_cast<size_t>(k)];
                    if (r.delta < 0.0 || r.delta != std::round(r.delta)) deltas_ok = false;
                    for (double v : r.benchmark.x)
                        if (v != std::round(v)) bench_ok = false;
                    for (double v : r.benchmark.y)
                        if (v != std::round(v)) bench_ok = false;
                    if (!oracle_member(tech, ds, r.benchmark)) bench_ok = false;
                    if (zscores[static_cast<size_t>(k)].delta != r.delta) discrete_ok = false;
                }
            }
        }
    }
    std::string suffix = " (" + std::to_string(count) + " integer datasets)";
    out.push_back(make_flag_report("integer-distances" + suffix, deltas_ok));
    out.push_back(make_flag_report("integer-benchmarks-feasible" + suffix, bench_ok));
    out.push_back(make_flag_report("discrete-equals-continuous" + suffix, discrete_ok));
}

void closed_form_vs_bisect(std::vector<OracleReport>& out, uint64_t seed, int count,
                           const Corruption& corruption) {
    double worst_real = 0.0;
    bool integer_ok = true;
    for (int i = 0; i < count; ++i) {
        bool integer = i >= count / 2;
        Rng rng = Rng::stream(seed, 15000 + static_cast<uint64_t>(i));
        Dataset ds = random_dataset(rng.next(), 8, 3, integer);
        int k = static_cast<int>(rng.below(static_cast<uint64_t>(ds.size())));
        Orientation o = rng.below(2) == 0 ? Orientation::Input : Orientation::Output;
        const char* names[5] = {"quant-vrs:+inf", "quant-crs:+inf", "quant-vrs:-inf",
                                "quant-crs:-inf", "fdh"};
        TechSpec tech = TechSpec::parse(names[rng.below(5)]);
        double engine;
        if (tech.family == Family::FDH)
            engine = distance_fdh(ds, k, o).delta;
        else {
            bool vrs = tech.family == Family::QuantizedVRS;
            bool maxplus = tech.alpha.is_plus_inf();
            TropicalVariant v = maxplus
                                    ? (vrs ? TropicalVariant::MaxPlusVRS : TropicalVariant::MaxPlusCRS)
                                    : (vrs ? TropicalVariant::MinPlusVRS : TropicalVariant::MinPlusCRS);
            engine = distance_tropical(ds, k, v, o).delta;
        }
        if (corruption.corrupt_tropical) engine += corruption.offset;
        Point p{ds.firm(k).x, ds.firm(k).y};
        double oracle = bisect_distance(tech, ds, p, o, 1e-9);
        if (integer) {
            if (std::round(oracle) != engine) integer_ok = false;
        } else {
            worst_real = std::max(worst_real, std::abs(oracle - engine));
        }
    }
    out.push_back(make_report("closed-form-vs-bisect (" + std::to_string(count / 2) +
                                  " real datasets)",
                              0.0, worst_real, 1e-6));
    out.push_back(make_flag_report("closed-form-vs-bisect-integer (" + std::to_string(count / 2) +
                                       " integer datasets)",
                                   integer_ok));
}

void lp_vs_bisect(std::vector<OracleReport>& out, uint64_t seed, int count) {
    double worst = 0.0;
    const double alphas[6] = {0.5, 1.0, 2.0, -0.5, -1.0, -2.0};
    for (int i = 0; i < count; ++i) {
        Rng rng = Rng::stream(seed, 19000 + static_cast<uint64_t>(i));
        Dataset ds = random_dataset(rng.next(), 6, 2, i % 2 == 0);
        int k = static_cast<int>(rng.below(static_cast<uint64_t>(ds.size())));
        Orientation o = rng.below(2) == 0 ? Orientation::Input : Orientation::Output;
        bool vrs = rng.below(2) == 0;
        double alpha = alphas[rng.below(6)];
        double engine = distance_quantized_lp(ds, k, alpha, vrs, o).delta;
        TechSpec tech;
        tech.family = vrs ? Family::QuantizedVRS : Family::QuantizedCRS;
        tech.alpha = Alpha::finite(alpha);
        Point p{ds.firm(k).x, ds.firm(k).y};
        double oracle = bisect_distance(tech, ds, p, o, 1e-9);
        worst = std::max(worst, std::abs(oracle - engine));
    }
    out.push_back(
        make_report("quantized-lp-vs-bisect (" + std::to_string(count) + " datasets)", 0.0, worst, 1e-5));
}

void lp_vs_grid(std::vector<OracleReport>& out, uint64_t seed, int count) {
    bool all_pass = true;
    double worst_rel = 0.0;
    const double alphas[6] = {0.5, 1.0, 2.0, -0.5, -1.0, -2.0};
    for (int i = 0; i < count; ++i) {
        Rng rng = Rng::stream(seed, 23000 + static_cast<uint64_t>(i));
        Dataset ds = random_dataset(rng.next(), 3, 2, i % 3 == 0);
        int k = static_cast<int>(rng.below(static_cast<uint64_t>(ds.size())));
        Orientation o = rng.below(2) == 0 ? Orientation::Input : Orientation::Output;
        bool vrs = rng.below(2) == 0;
        double alpha = alphas[rng.below(6)];
        double res = ds.size() == 3 ? 2e-3 : 1e-4;
        OracleReport r = grid_lp_check(ds, k, alpha, vrs, o, res);
        all_pass = all_pass && r.pass;
        if (r.tolerance > 0.0) worst_rel = std::max(worst_rel, r.gap / r.tolerance);
    }
    out.push_back(make_flag_report("lp-vs-grid (" + std::to_string(count) + " instances)", all_pass,
                                   worst_rel, 1.0));
}

void weak_strong_duality(std::vector<OracleReport>& out, uint64_t seed) {
    const Dataset& ds = builtin_example();
    int violations = 0;
    double worst_margin = kInf;
    double worst_gap = 0.0;
    int degenerate = 0;
    const double alphas[4] = {1.0, -1.0, 2.0, -2.0};
    int combo = 0;
    for (double a : alphas) {
        for (Orientation o : {Orientation::Input, Orientation::Output}) {
            TechSpec tech;
            tech.family = Family::QuantizedVRS;
            tech.alpha = Alpha::finite(a);
            DualityReport rep = duality_check(ds, 1, tech, o, 1000,
                                              Rng::stream(seed, 27000 + static_cast<uint64_t>(combo)).next());
            violations += rep.weak_violations;
            worst_margin = std::min(worst_margin, rep.worst_margin);
            if (rep.degenerate)
                ++degenerate;
            else
                worst_gap = std::max(worst_gap, rep.strong_gap);
            ++combo;
        }
    }
    out.push_back(make_flag_report("weak-duality (8x1000 prices, firm 2)", violations == 0,
                                   std::max(0.0, -worst_margin), 1e-9));
    out.push_back(make_report("strong-duality (dual witness gap, " +
                                  std::to_string(8 - degenerate) + " non-degenerate)",
                              0.0, worst_gap, 1e-6));
}

void semiring_limit_bound(std::vector<OracleReport>& out, uint64_t seed) {
    double worst = 0.0;
    const double mags[4] = {1.0, 5.0, 25.0, 50.0};
    for (double mag : mags) {
        for (double sgn : {1.0, -1.0}) {
            double a = mag * sgn;
            Rng rng = Rng::stream(seed, 31000 + static_cast<uint64_t>(mag) +
                                            (sgn > 0 ? 0 : 500));
            Alpha alpha = Alpha::finite(a);
            for (int i = 0; i < 1000; ++i) {
                double u = rng.uniform(-20.0, 20.0);
                double v = rng.uniform(-20.0, 20.0);
                double s = kp_add(u, v, alpha);
                double lim = sgn > 0 ? std::max(u, v) : std::min(u, v);
                double dev = sgn > 0 ? s - lim : lim - s;
                double excess = std::max(dev - std::log(2.0) / mag, -dev);
                worst = std::max(worst, excess);
            }
        }
    }
    out.push_back(make_flag_report("kp-add-limit-bound (8000 pairs)", worst <= 1e-12, worst, 1e-12));
}

void hull_limit_experiment(std::vector<OracleReport>& out, uint64_t seed) {
    const std::vector<RVec>& pts = limit_example_points();
    const std::vector<double> alphas = {1, 2, 5, 10, 50};
    auto gaps = limit_gap(pts, alphas, Alpha::plus_inf(), 500, seed);
    bool monotone = true;
    for (size_t i = 1; i < gaps.size(); ++i) monotone = monotone && gaps[i].second <= gaps[i - 1].second;
    out.push_back(make_flag_report("hull-gap-nonincreasing (alpha 1..50)", monotone));
    out.push_back(make_report("hull-gap-at-50 (500 samples)", 0.0, gaps.back().second, 0.15));

    // Matched weights: the finite-alpha aggregation dominates the tropical
    // one by at most (ln ell)/alpha in every coordinate.
    double worst = -kInf;
    Rng rng(seed ^ 0xabcdefULL);
    for (double a : alphas) {
        Alpha alpha = Alpha::finite(a);
        double bound = std::log(static_cast<double>(pts.size())) / a;
        for (int i = 0; i < 200; ++i) {
            std::vector<double> u = rng.dirichlet(pts.size());
            std::vector<double> t(pts.size());
            for (size_t k = 0; k < t.size(); ++k) t[k] = std::log(u[k]);
            double shift = kp_mean(t, alpha);
            for (double& w : t) w -= shift;
            RVec za = kp_combine(pts, t, alpha);
            RVec zi = kp_combine(pts, t, Alpha::plus_inf());
            for (size_t j = 0; j < za.size(); ++j) {
                double diff = za[j] - zi[j];
                worst = std::max(worst, std::max(-diff, diff - bound));
            }
        }
    }
    out.push_back(make_flag_report("hull-pointwise-bound (ln l / alpha)", worst <= 1e-9,
                                   std::max(worst, 0.0), 1e-9));
}

// Brute-force vertex enumeration for small inequality-constrained LPs.
struct VertexOracle {
    bool feasible = false;
    double best = 0.0;
};

VertexOracle enumerate_vertices(const LpProblem& p) {
    const int n = p.num_vars();
    const int m = static_cast<int>(p.rows.size());
    const int total = m + n; // constraint rows plus the x_j >= 0 bounds
    VertexOracle res;
    res.best = p.sense == Sense::Maximize ? -kInf : kInf;

    std::vector<int> pick(static_cast<size_t>(n));
    auto check_point = [&](const std::vector<double>& x) {
        for (double v : x)
            if (v < -1e-7 || !std::isfinite(v)) return false;
        for (const auto& row : p.rows) {
            double lhs = 0.0;
            for (int j = 0; j < n; ++j) lhs += row.a[static_cast<size_t>(j)] * x[static_cast<size_t>(j)];
            if (row.rel == Rel::Le && lhs > row.rhs + 1e-7) return false;
            if (row.rel == Rel::Ge && lhs < row.rhs - 1e-7) return false;
            if (row.rel == Rel::Eq && std::abs(lhs - row.rhs) > 1e-7) return false;
        }
        return true;
    };

    // Solve the n x n active-set system by Gaussian elimination.
    auto try_active_set = [&]() {
        std::vector<double> mat(static_cast<size_t>(n) * n, 0.0);
        std::vector<double> rhs(static_cast<size_t>(n), 0.0);
        for (int r = 0; r < n; ++r) {
            int c = pick[static_cast<size_t>(r)];
            if (c < m) {
                for (int j = 0; j < n; ++j)
                    mat[static_cast<size_t>(r) * n + j] = p.rows[static_cast<size_t>(c)].a[static_cast<size_t>(j)];
                rhs[static_cast<size_t>(r)] = p.rows[static_cast<size_t>(c)].rhs;
            } else {
                mat[static_cast<size_t>(r) * n + (c - m)] = 1.0;
            }
        }
        for (int col = 0; col < n; ++col) {
            int piv = -1;
            double mag = 1e-9;
            for (int r = col; r < n; ++r)
                if (std::abs(mat[static_cast<size_t>(r) * n + col]) > mag) {
                    mag = std::abs(mat[static_cast<size_t>(r) * n + col]);
                    piv = r;
                }
            if (piv < 0) return;
            if (piv != col) {
                for (int j = 0; j < n; ++j)
                    std::swap(mat[static_cast<size_t>(piv) * n + j], mat[static_cast<size_t>(col) * n + j]);
                std::swap(rhs[static_cast<size_t>(piv)], rhs[static_cast<size_t>(col)]);
            }
            for (int r = 0; r < n; ++r) {
                if (r == col) continue;
                double f = mat[static_cast<size_t>(r) * n + col] / mat[static_cast<size_t>(col) * n + col];
                if (f == 0.0) continue;
                for (int j = 0; j < n; ++j)
                    mat[static_cast<size_t>(r) * n + j] -= f * mat[static_cast<size_t>(col) * n + j];
                rhs[static_cast<size_t>(r)] -= f * rhs[static_cast<size_t>(col)];
            }
        }
        std::vector<double> x(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) x[static_cast<size_t>(j)] = rhs[static_cast<size_t>(j)] / mat[static_cast<size_t>(j) * n + j];
        if (!check_point(x)) return;
        double obj = 0.0;
        for (int j = 0; j < n; ++j) obj += p.c[static_cast<size_t>(j)] * x[static_cast<size_t>(j)];
        res.feasible = true;
        res.best = p.sense == Sense::Maximize ? std::max(res.best, obj) : std::min(res.best, obj);
    };

    // All n-subsets of the total constraints.
    std::vector<int> idx(static_cast<size_t>(n));
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == n) {
            pick = idx;
            try_active_set();
            return;
        }
        for (int c = start; c < total; ++c) {
            idx[static_cast<size_t>(depth)] = c;
            self(self, c + 1, depth + 1);
        }
    };
    if (n > 0) rec(rec, 0, 0);
    return res;
}

void lp_solver_battery(std::vector<OracleReport>& out, uint64_t seed, int count) {
    double worst_obj = 0.0;
    double worst_feas = 0.0;
    double worst_cs = 0.0;
    double worst_dual = 0.0;
    bool status_ok = true;
    for (int i = 0; i < count; ++i) {
        Rng rng = Rng::stream(seed, 35000 + static_cast<uint64_t>(i));
        int n = 1 + static_cast<int>(rng.below(4));
        int m = 1 + static_cast<int>(rng.below(4));
        LpProblem p;
        p.sense = rng.below(2) == 0 ? Sense::Minimize : Sense::Maximize;
        p.c.resize(static_cast<size_t>(n));
        for (double& v : p.c) v = static_cast<double>(rng.below(7)) - 3.0;
        for (int r = 0; r < m; ++r) {
            std::vector<double> a(static_cast<size_t>(n));
            for (double& v : a) v = static_cast<double>(rng.below(7)) - 3.0;
            Rel rel = rng.below(2) == 0 ? Rel::Le : Rel::Ge;
            double rhs = static_cast<double>(rng.below(7)) - 3.0;
            p.add(std::move(a), rel, rhs);
        }
        VertexOracle vo = enumerate_vertices(p);
        LpSolution s = solve(p);
        if (s.status == LpStatus::Optimal) {
            if (!vo.feasible) {
                status_ok = false;
                continue;
            }
            worst_obj = std::max(worst_obj, std::abs(s.objective - vo.best));
            // Feasibility and complementary slackness audits.
            double dual_obj = 0.0;
            for (int r = 0; r < m; ++r) {
                double lhs = 0.0;
                for (int j = 0; j < n; ++j) lhs += p.rows[static_cast<size_t>(r)].a[static_cast<size_t>(j)] * s.x[static_cast<size_t>(j)];
                double b = p.rows[static_cast<size_t>(r)].rhs;
                double viol = 0.0;
                if (p.rows[static_cast<size_t>(r)].rel == Rel::Le) viol = lhs - b;
                if (p.rows[static_cast<size_t>(r)].rel == Rel::Ge) viol = b - lhs;
                if (p.rows[static_cast<size_t>(r)].rel == Rel::Eq) viol = std::abs(lhs - b);
                worst_feas = std::max(worst_feas, viol);
                worst_cs = std::max(worst_cs, std::abs(s.duals[static_cast<size_t>(r)] * (lhs - b)));
                dual_obj += s.duals[static_cast<size_t>(r)] * b;
            }
            worst_dual = std::max(worst_dual, std::abs(dual_obj - s.objective));
        } else if (s.status == LpStatus::Infeasible) {
            if (vo.feasible) status_ok = false;
        } else {
            // Unbounded: a feasible vertex must exist and a boxed version
            // must push the objective far past every vertex value.
            if (!vo.feasible) {
                status_ok = false;
                continue;
            }
            LpProblem boxed = p;
            boxed.add(std::vector<double>(static_cast<size_t>(n), 1.0), Rel::Le, 1e6);
            LpSolution sb = solve(boxed);
            if (sb.status != LpStatus::Optimal ||
                (p.sense == Sense::Maximize ? sb.objective < vo.best + 100.0
                                            : sb.objective > vo.best - 100.0))
                status_ok = false;
        }
    }
    std::string suffix = " (" + std::to_string(count) + " random LPs)";
    out.push_back(make_report("lp-objective-vs-vertex-enumeration" + suffix, 0.0, worst_obj, 1e-7));
    out.push_back(make_flag_report("lp-status-vs-vertex-enumeration" + suffix, status_ok));
    out.push_back(make_report("lp-primal-feasibility" + suffix, 0.0, worst_feas, 1e-8));
    out.push_back(make_report("lp-complementary-slackness" + suffix, 0.0, worst_cs, 1e-7));
    out.push_back(make_report("lp-dual-objective-match" + suffix, 0.0, worst_dual, 1e-7));
}

void lp_vs_tropical_limit(std::vector<OracleReport>& out, uint64_t seed) {
    // CRS only: the quantized CRS distance lies within (ln ell)/|alpha| of
    // its tropical limit; the VRS distance need not converge pointwise.
    double worst = 0.0;
    const double mags[3] = {10.0, 25.0, 50.0};
    for (int i = 0; i < 20; ++i) {
        Rng rng = Rng::stream(seed, 39000 + static_cast<uint64_t>(i));
        Dataset ds = random_dataset(rng.next(), 6, 2, /*integer=*/true);
        double bound = std::log(static_cast<double>(ds.size()));
        for (double mag : mags) {
            for (double sgn : {1.0, -1.0}) {
                double a = mag * sgn;
                TropicalVariant v = sgn > 0 ? TropicalVariant::MaxPlusCRS : TropicalVariant::MinPlusCRS;
                for (Orientation o : {Orientation::Input, Orientation::Output}) {
                    for (int k = 0; k < ds.size(); ++k) {
                        double lp = distance_quantized_lp(ds, k, a, /*vrs=*/false, o).delta;
                        double trop = distance_tropical(ds, k, v, o).delta;
                        double excess = std::abs(lp - trop) - bound / mag;
                        worst = std::max(worst, excess);
                    }
                }
            }
        }
    }
    out.push_back(make_flag_report("quantized-crs-vs-tropical-bound (alpha 10,25,50)",
                                   worst <= 1e-6, std::max(worst, 0.0), 1e-6));
}

} // namespace

std::vector<OracleReport> verify_suite(uint64_t seed, const Corruption& corruption) {
    std::vector<OracleReport> out;
    swap_identities(out, seed, 200);
    crs_orientation_identity(out, seed, 200);
    integer_properties(out, seed, 200);
    closed_form_vs_bisect(out, seed, 200, corruption);
    lp_vs_bisect(out, seed, 50);
    lp_vs_grid(out, seed, 50);
    weak_strong_duality(out, seed);
    semiring_limit_bound(out, seed);
    hull_limit_experiment(out, seed);
    lp_solver_battery(out, seed, 100);
    lp_vs_tropical_limit(out, seed);
    return out;
}

} // namespace tropdea
