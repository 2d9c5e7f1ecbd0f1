#include "tropdea/technology.hpp"

#include <algorithm>
#include <cmath>

#include "tropdea/lp.hpp"
#include "tropdea/rng.hpp"

namespace tropdea {

namespace {

bool integral_point(const Point& p) {
    for (double v : p.x)
        if (v != std::floor(v)) return false;
    for (double v : p.y)
        if (v != std::floor(v)) return false;
    return true;
}

// Tropical membership by residuation. At +inf the input rows cap each
// weight from above and the output rows are checked at the caps; at -inf
// the output rows floor each weight and the input rows are checked.
Containment contains_tropical(const TechSpec& tech, const Dataset& ds, const Point& p) {
    const bool maxplus = tech.alpha.is_plus_inf();
    const bool vrs = tech.family == Family::QuantizedVRS;
    const int ell = ds.size();
    const int m = ds.inputs();
    const int n = ds.outputs();
    std::vector<double> t(static_cast<size_t>(ell));
    Containment c;

    if (maxplus) {
        for (int k = 0; k < ell; ++k) {
            double w = kInf;
            for (int i = 0; i < m; ++i) w = std::min(w, p.x[static_cast<size_t>(i)] - ds.firm(k).x[static_cast<size_t>(i)]);
            t[static_cast<size_t>(k)] = w;
        }
        if (vrs) {
            double mx = *std::max_element(t.begin(), t.end());
            if (mx < 0.0) return c;
            for (double& w : t) w = std::min(w, 0.0);
        }
        for (int j = 0; j < n; ++j) {
            double agg = -kInf;
            for (int k = 0; k < ell; ++k)
                agg = std::max(agg, t[static_cast<size_t>(k)] + ds.firm(k).y[static_cast<size_t>(j)]);
            if (!(agg >= p.y[static_cast<size_t>(j)])) return c;
        }
    } else {
        for (int k = 0; k < ell; ++k) {
            double w = -kInf;
            for (int j = 0; j < n; ++j) w = std::max(w, p.y[static_cast<size_t>(j)] - ds.firm(k).y[static_cast<size_t>(j)]);
            t[static_cast<size_t>(k)] = w;
        }
        if (vrs) {
            double mn = *std::min_element(t.begin(), t.end());
            if (mn > 0.0) return c;
            for (double& w : t) w = std::max(w, 0.0);
        }
        for (int i = 0; i < m; ++i) {
            double agg = kInf;
            for (int k = 0; k < ell; ++k)
                agg = std::min(agg, t[static_cast<size_t>(k)] + ds.firm(k).x[static_cast<size_t>(i)]);
            if (!(agg <= p.x[static_cast<size_t>(i)])) return c;
        }
    }
    c.member = true;
    c.weights = std::move(t);
    return c;
}

// LP feasibility for the convex families and, through the exponential
// transform, for the quantized families at finite alpha (where the
// inequality directions flip with the sign of alpha). The transformed
// problem is gauged per firm so the coefficients stay within double range
// at large |alpha|; see distance_quantized_lp for the same construction.
Containment contains_lp(const TechSpec& tech, const Dataset& ds, const Point& p) {
    const int ell = ds.size();
    const int m = ds.inputs();
    const int n = ds.outputs();
    const bool quantized = tech.quantized();
    const double a = quantized ? tech.alpha.value() : 0.0;
    const bool flip = quantized && a < 0.0;
    const bool vrs = tech.family == Family::QuantizedVRS || tech.family == Family::ConvexVRS;

    std::vector<double> gauge(static_cast<size_t>(ell), 0.0);
    if (quantized) {
        for (int k = 0; k < ell; ++k) {
            double g;
            if (a > 0.0) {
                g = kInf;
                for (int i = 0; i < m; ++i)
                    g = std::min(g, p.x[static_cast<size_t>(i)] - ds.firm(k).x[static_cast<size_t>(i)]);
                if (vrs) g = std::min(g, 0.0);
            } else {
                g = -kInf;
                for (int j = 0; j < n; ++j)
                    g = std::max(g, p.y[static_cast<size_t>(j)] - ds.firm(k).y[static_cast<size_t>(j)]);
                if (vrs) g = std::max(g, 0.0);
            }
            gauge[static_cast<size_t>(k)] = g;
        }
    }
    auto coef = [&](double v, int k, double base) {
        if (!quantized) return v;
        double r = std::exp(a * (v + gauge[static_cast<size_t>(k)] - base));
        if (std::isnan(r)) throw numerical_error("exponential transform failed in membership test");
        return std::isinf(r) ? std::numeric_limits<double>::max() : r;
    };

    LpProblem lp;
    lp.c.assign(static_cast<size_t>(ell), 0.0);
    for (int i = 0; i < m; ++i) {
        double base = p.x[static_cast<size_t>(i)];
        std::vector<double> row(static_cast<size_t>(ell));
        for (int k = 0; k < ell; ++k)
            row[static_cast<size_t>(k)] = coef(ds.firm(k).x[static_cast<size_t>(i)], k, base);
        lp.add(std::move(row), flip ? Rel::Ge : Rel::Le, quantized ? 1.0 : base);
    }
    for (int j = 0; j < n; ++j) {
        double base = p.y[static_cast<size_t>(j)];
        std::vector<double> row(static_cast<size_t>(ell));
        for (int k = 0; k < ell; ++k)
            row[static_cast<size_t>(k)] = coef(ds.firm(k).y[static_cast<size_t>(j)], k, base);
        lp.add(std::move(row), flip ? Rel::Le : Rel::Ge, quantized ? 1.0 : base);
    }
    if (vrs) {
        if (quantized) {
            std::vector<double> row(static_cast<size_t>(ell));
            for (int k = 0; k < ell; ++k) row[static_cast<size_t>(k)] = coef(0.0, k, 0.0);
            lp.add(std::move(row), Rel::Eq, 1.0);
        } else {
            lp.add(std::vector<double>(static_cast<size_t>(ell), 1.0), Rel::Eq, 1.0);
        }
    }

    LpSolution s = solve(lp);
    Containment c;
    if (s.status != LpStatus::Optimal) return c;
    // The phase-1 tolerance must not leak through the exponential gauges:
    // re-verify the witness against every row at a much tighter residual.
    for (const LpConstraint& row : lp.rows) {
        double lhs = 0.0;
        double scale = std::abs(row.rhs);
        for (int k = 0; k < ell; ++k) {
            lhs += row.a[static_cast<size_t>(k)] * s.x[static_cast<size_t>(k)];
            scale = std::max(scale, std::abs(row.a[static_cast<size_t>(k)] * s.x[static_cast<size_t>(k)]));
        }
        double slack = 1e-10 * std::max(1.0, scale);
        bool ok = row.rel == Rel::Le   ? lhs <= row.rhs + slack
                  : row.rel == Rel::Ge ? lhs >= row.rhs - slack
                                       : std::abs(lhs - row.rhs) <= slack;
        if (!ok) return c;
    }
    c.member = true;
    if (quantized) {
        c.weights.resize(static_cast<size_t>(ell));
        for (int k = 0; k < ell; ++k) {
            double u = s.x[static_cast<size_t>(k)]; // gauged weight sigma_k
            c.weights[static_cast<size_t>(k)] =
                u > 0.0 ? std::log(u) / a + gauge[static_cast<size_t>(k)] : tech.alpha.excluded_sentinel();
        }
    } else {
        c.weights = s.x;
    }
    return c;
}

Containment contains_fdh(const Dataset& ds, const Point& p) {
    Containment c;
    for (int k = 0; k < ds.size(); ++k) {
        const Firm& f = ds.firm(k);
        bool dom = true;
        for (size_t i = 0; i < f.x.size(); ++i)
            if (f.x[i] > p.x[i]) {
                dom = false;
                break;
            }
        if (dom)
            for (size_t j = 0; j < f.y.size(); ++j)
                if (f.y[j] < p.y[j]) {
                    dom = false;
                    break;
                }
        if (dom) {
            c.member = true;
            c.weights.assign(static_cast<size_t>(ds.size()), 0.0);
            c.weights[static_cast<size_t>(k)] = 1.0;
            return c;
        }
    }
    return c;
}

} // namespace

TechSpec TechSpec::parse(std::string_view s) {
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
        size_t pos = s.find(':', start);
        if (pos == std::string_view::npos) {
            parts.emplace_back(s.substr(start));
            break;
        }
        parts.emplace_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    TechSpec t;
    bool discrete = !parts.empty() && parts.back() == "discrete";
    size_t nbody = parts.size() - (discrete ? 1 : 0);
    const std::string& head = parts.at(0);
    if (head == "convex-vrs" || head == "convex-crs" || head == "fdh") {
        if (nbody != 1) throw std::invalid_argument("technology '" + head + "' takes no alpha");
        t.family = head == "convex-vrs" ? Family::ConvexVRS
                   : head == "convex-crs" ? Family::ConvexCRS
                                          : Family::FDH;
    } else if (head == "quant-vrs" || head == "quant-crs") {
        if (nbody != 2) throw std::invalid_argument("technology '" + head + "' needs an alpha");
        t.family = head == "quant-vrs" ? Family::QuantizedVRS : Family::QuantizedCRS;
        t.alpha = Alpha::parse(parts.at(1));
    } else {
        throw std::invalid_argument("unknown technology '" + std::string(s) + "'");
    }
    if (discrete) {
        if (!(t.family == Family::FDH || (t.quantized() && t.alpha.is_infinite())))
            throw std::invalid_argument("discrete flag requires a tropical or fdh technology");
        t.discrete = true;
    }
    return t;
}

std::string TechSpec::str() const {
    std::string s;
    switch (family) {
    case Family::ConvexVRS: s = "convex-vrs"; break;
    case Family::ConvexCRS: s = "convex-crs"; break;
    case Family::FDH: s = "fdh"; break;
    case Family::QuantizedVRS: s = "quant-vrs:" + alpha.str(); break;
    case Family::QuantizedCRS: s = "quant-crs:" + alpha.str(); break;
    }
    if (discrete) s += ":discrete";
    return s;
}

Containment contains(const TechSpec& tech, const Dataset& ds, const Point& p, bool strict) {
    if (static_cast<int>(p.x.size()) != ds.inputs() || static_cast<int>(p.y.size()) != ds.outputs())
        throw std::invalid_argument("point dimensions do not match the dataset");
    if (tech.discrete && !integral_point(p))
        throw std::invalid_argument("discrete technology requires an integer-valued point");
    if (strict) {
        for (double v : p.x)
            if (v < 0.0) return {};
        for (double v : p.y)
            if (v < 0.0) return {};
    }
    if (tech.family == Family::FDH) return contains_fdh(ds, p);
    if (tech.tropical()) return contains_tropical(tech, ds, p);
    return contains_lp(tech, ds, p);
}

AxiomReport verify_axioms(const TechSpec& tech, const Dataset& ds, int trials, uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials must be positive");
    AxiomReport rep;
    rep.trials = trials;
    rep.translation_applicable = tech.family == Family::QuantizedCRS;
    Rng rng(seed);
    const int m = ds.inputs();
    const int n = ds.outputs();

    auto disposal_point = [&](Rng& r) {
        const Firm& f = ds.firm(static_cast<int>(r.below(static_cast<uint64_t>(ds.size()))));
        Point p{f.x, f.y};
        for (double& v : p.x) v += r.uniform(0.0, 2.0);
        for (double& v : p.y) v -= r.uniform(0.0, 1.0) * v;
        if (tech.discrete) {
            for (double& v : p.x) v = std::floor(v);
            for (double& v : p.y) v = std::floor(v);
        }
        return p;
    };

    for (int trial = 0; trial < trials; ++trial) {
        Point p = disposal_point(rng);
        if (!contains(tech, ds, p).member) {
            rep.free_disposal_pass = false;
            rep.free_disposal_fail = AxiomCounterexample{p, p};
            break;
        }
        Point q = p;
        for (int i = 0; i < m; ++i) q.x[static_cast<size_t>(i)] += rng.uniform(0.0, 2.0);
        for (int j = 0; j < n; ++j) q.y[static_cast<size_t>(j)] -= rng.uniform(0.0, 1.0) * q.y[static_cast<size_t>(j)];
        if (tech.discrete) {
            for (double& v : q.x) v = std::floor(v);
            for (double& v : q.y) v = std::floor(v);
        }
        if (!contains(tech, ds, q).member) {
            rep.free_disposal_pass = false;
            rep.free_disposal_fail = AxiomCounterexample{p, q};
            break;
        }
    }

    for (int trial = 0; trial < trials; ++trial) {
        const Firm& f = ds.firm(static_cast<int>(rng.below(static_cast<uint64_t>(ds.size()))));
        Point p{f.x, f.y};
        double lo = 0.0;
        for (double v : p.x) lo = std::max(lo, -v);
        for (double v : p.y) lo = std::max(lo, -v);
        double delta = rng.uniform(-lo, 3.0); // nonnegativity guard on the shifted point
        if (tech.discrete) delta = std::floor(delta);
        Point q = p;
        for (double& v : q.x) v += delta;
        for (double& v : q.y) v += delta;
        if (!contains(tech, ds, q).member) {
            rep.translation_pass = false;
            rep.translation_fail = AxiomCounterexample{p, q};
            break;
        }
    }
    return rep;
}

} // namespace tropdea
