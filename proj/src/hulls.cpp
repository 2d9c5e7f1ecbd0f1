#include "tropdea/hulls.hpp"

#include <algorithm>
#include <cmath>

#include "tropdea/kp_algebra.hpp"
#include "tropdea/lp.hpp"
#include "tropdea/rng.hpp"

namespace tropdea {

namespace {

void check_dims(const std::vector<RVec>& points, const RVec& z) {
    if (points.empty()) throw std::invalid_argument("hull needs at least one generator");
    for (const RVec& p : points)
        if (p.size() != z.size()) throw std::invalid_argument("hull dimension mismatch");
}

} // namespace

MembershipResult member_sigma_alpha(const HullSpec& h, const RVec& z) {
    if (!h.alpha.is_finite())
        throw std::invalid_argument("member_sigma_alpha requires finite alpha");
    check_dims(h.points, z);
    const double a = h.alpha.value();
    const size_t ell = h.points.size();
    const size_t d = z.size();

    auto ex = [&](double v) {
        double r = std::exp(a * v);
        if (!std::isfinite(r)) throw numerical_error("exponential transform overflow in hull test");
        return r;
    };

    // Feasibility of e^{a z} = sum_k u_k e^{a z_k}, u >= 0 (plus sum u = 1
    // for the normalized hull).
    LpProblem lp;
    lp.c.assign(ell, 0.0);
    for (size_t j = 0; j < d; ++j) {
        std::vector<double> row(ell);
        for (size_t k = 0; k < ell; ++k) row[k] = ex(h.points[k][j]);
        lp.add(std::move(row), Rel::Eq, ex(z[j]));
    }
    if (!h.conic) lp.add(std::vector<double>(ell, 1.0), Rel::Eq, 1.0);

    LpSolution s = solve(lp);
    MembershipResult r;
    if (s.status != LpStatus::Optimal) return r;
    r.member = true;
    r.witness.resize(ell);
    for (size_t k = 0; k < ell; ++k)
        r.witness[k] = s.x[k] > 0.0 ? std::log(s.x[k]) / a : h.alpha.excluded_sentinel();
    r.reconstruction = kp_combine(h.points, r.witness, h.alpha);
    return r;
}

MembershipResult member_tropical(const HullSpec& h, const RVec& z) {
    if (h.alpha.is_finite()) throw std::invalid_argument("member_tropical requires alpha = +-inf");
    check_dims(h.points, z);
    const size_t ell = h.points.size();
    const size_t d = z.size();
    const bool maxplus = h.alpha.is_plus_inf();

    // Largest (max-plus) / smallest (min-plus) weights compatible with z,
    // then cap onto the simplex for the normalized hull.
    std::vector<double> t(ell);
    for (size_t k = 0; k < ell; ++k) {
        double w = maxplus ? kInf : -kInf;
        for (size_t j = 0; j < d; ++j) {
            double diff = z[j] - h.points[k][j];
            w = maxplus ? std::min(w, diff) : std::max(w, diff);
        }
        t[k] = w;
    }
    MembershipResult r;
    if (!h.conic) {
        double extreme = maxplus ? *std::max_element(t.begin(), t.end())
                                 : *std::min_element(t.begin(), t.end());
        bool normalizable = maxplus ? extreme >= 0.0 : extreme <= 0.0;
        if (!normalizable) return r;
        for (double& w : t) w = maxplus ? std::min(w, 0.0) : std::max(w, 0.0);
    }
    RVec rec = kp_combine(h.points, t, h.alpha);
    r.reconstruction = rec;
    r.witness = std::move(t);
    r.member = rec == z;
    return r;
}

MembershipResult member_bconvex(const std::vector<RVec>& points, const RVec& z, bool inverse) {
    check_dims(points, z);
    const size_t ell = points.size();
    const size_t d = z.size();
    for (const RVec& p : points)
        for (double v : p)
            if (v < 0.0 || (inverse && v <= 0.0))
                throw std::invalid_argument(inverse ? "inverse hull requires strictly positive data"
                                                    : "hull data must be nonnegative");
    for (double v : z)
        if (v < 0.0 || (inverse && v <= 0.0))
            throw std::invalid_argument("query point outside the admissible orthant");

    std::vector<double> raw(ell);
    std::vector<double> t(ell);
    for (size_t k = 0; k < ell; ++k) {
        double w = inverse ? -kInf : kInf;
        bool constrained = false;
        for (size_t j = 0; j < d; ++j) {
            double g = points[k][j];
            if (g == 0.0) continue; // 0 coordinate never constrains t_k * 0 <= z_j
            constrained = true;
            double ratio = z[j] / g;
            w = inverse ? std::max(w, ratio) : std::min(w, ratio);
        }
        if (!constrained) w = 1.0;
        raw[k] = w;
        t[k] = inverse ? std::max(w, 1.0) : std::min(w, 1.0);
    }
    MembershipResult r;
    // The normalization (max weight 1, resp. min weight 1) must be
    // attainable, i.e. some uncapped weight reaches it.
    double extreme = inverse ? *std::min_element(raw.begin(), raw.end())
                             : *std::max_element(raw.begin(), raw.end());
    if (inverse ? extreme > 1.0 : extreme < 1.0) {
        r.witness = t;
        return r;
    }
    r.witness = t;
    RVec rec(d, inverse ? kInf : 0.0);
    for (size_t j = 0; j < d; ++j)
        for (size_t k = 0; k < ell; ++k) {
            double v = t[k] * points[k][j];
            rec[j] = inverse ? std::min(rec[j], v) : std::max(rec[j], v);
        }
    r.reconstruction = rec;
    r.member = rec == z;
    return r;
}

std::vector<RVec> sample_hull(const HullSpec& h, int count, uint64_t seed, bool parallel) {
    if (count < 1) throw std::invalid_argument("sample count must be positive");
    if (h.points.empty()) throw std::invalid_argument("hull needs at least one generator");
    const size_t ell = h.points.size();
    std::vector<RVec> out(static_cast<size_t>(count));

    auto draw = [&](int i) {
        Rng rng = Rng::stream(seed, static_cast<uint64_t>(i));
        std::vector<double> u = rng.dirichlet(ell);
        std::vector<double> t(ell);
        for (size_t k = 0; k < ell; ++k) t[k] = std::log(u[k]);
        // Map the log-weights onto the simplex of h.alpha. The shift is the
        // alpha-mean of the raw weights, so draws with the same index land on
        // matched points of every hull in the alpha family.
        double shift = kp_mean(t, h.alpha);
        for (double& w : t) w -= shift;
        if (h.alpha.is_infinite()) {
            // Snap to a dyadic grid: residuation then reproduces the sample
            // bit-exactly whenever the generators are exactly representable.
            for (double& w : t) w = std::round(w * 4294967296.0) / 4294967296.0;
        }
        if (h.conic) {
            double extra = rng.uniform(-2.0, 2.0);
            for (double& w : t) w += extra;
        }
        out[static_cast<size_t>(i)] = kp_combine(h.points, t, h.alpha);
    };

    if (parallel) {
        std::exception_ptr err;
#pragma omp parallel for schedule(static)
        for (int i = 0; i < count; ++i) {
            try {
                draw(i);
            } catch (...) {
#pragma omp critical
                if (!err) err = std::current_exception();
            }
        }
        if (err) std::rethrow_exception(err);
    } else {
        for (int i = 0; i < count; ++i) draw(i);
    }
    return out;
}

namespace {

double dist2(const RVec& a, const RVec& b) {
    double s = 0.0;
    for (size_t j = 0; j < a.size(); ++j) {
        double diff = a[j] - b[j];
        s += diff * diff;
    }
    return s;
}

double directed_serial(std::span<const RVec> p, std::span<const RVec> q) {
    double worst = 0.0;
    for (const RVec& a : p) {
        double best = kInf;
        for (const RVec& b : q) best = std::min(best, dist2(a, b));
        worst = std::max(worst, best);
    }
    return worst;
}

double directed_parallel(std::span<const RVec> p, std::span<const RVec> q) {
    double worst = 0.0;
    const int np = static_cast<int>(p.size());
#pragma omp parallel for schedule(static) reduction(max : worst)
    for (int i = 0; i < np; ++i) {
        double best = kInf;
        for (const RVec& b : q) best = std::min(best, dist2(p[static_cast<size_t>(i)], b));
        worst = std::max(worst, best);
    }
    return worst;
}

void check_hausdorff_args(std::span<const RVec> p, std::span<const RVec> q) {
    if (p.empty() || q.empty()) throw std::invalid_argument("hausdorff: empty point set");
    size_t d = p.front().size();
    for (const RVec& v : p)
        if (v.size() != d) throw std::invalid_argument("hausdorff: dimension mismatch");
    for (const RVec& v : q)
        if (v.size() != d) throw std::invalid_argument("hausdorff: dimension mismatch");
}

} // namespace

double hausdorff(std::span<const RVec> p, std::span<const RVec> q) {
    check_hausdorff_args(p, q);
    return std::sqrt(std::max(directed_parallel(p, q), directed_parallel(q, p)));
}

double hausdorff_serial(std::span<const RVec> p, std::span<const RVec> q) {
    check_hausdorff_args(p, q);
    return std::sqrt(std::max(directed_serial(p, q), directed_serial(q, p)));
}

const std::vector<RVec>& limit_example_points() {
    static const std::vector<RVec> pts = {{0, 0}, {1, 3}, {2, 1}, {3, 4}, {4, 2}};
    return pts;
}

std::vector<std::pair<double, double>> limit_gap(const std::vector<RVec>& points,
                                                 std::span<const double> alphas, const Alpha& target,
                                                 int samples, uint64_t seed) {
    if (target.is_finite()) throw std::invalid_argument("limit target must be +-inf");
    for (double a : alphas) {
        Alpha check = Alpha::finite(a);
        if (check.sign() != target.sign())
            throw std::invalid_argument("alphas must share the sign of the limit target");
    }
    HullSpec limit{points, target, false};
    std::vector<RVec> limit_cloud = sample_hull(limit, samples, seed);
    std::vector<std::pair<double, double>> out;
    out.reserve(alphas.size());
    for (double a : alphas) {
        HullSpec spec{points, Alpha::finite(a), false};
        std::vector<RVec> cloud = sample_hull(spec, samples, seed);
        out.emplace_back(a, hausdorff(cloud, limit_cloud));
    }
    return out;
}

} // namespace tropdea
