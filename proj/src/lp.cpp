#include "tropdea/lp.hpp"

#include <algorithm>
#include <cmath>

namespace tropdea {

namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kCostTol = 1e-9;
constexpr double kPhase1Tol = 1e-8;

struct Tableau {
    int m = 0;    // rows
    int n = 0;    // total columns (structural + aux)
    int nstruct = 0;
    std::vector<double> a;   // m x n, row-major (scaled, standardized)
    std::vector<double> rhs; // m
    std::vector<int> basis;  // m
    std::vector<int> row_id; // original user row per tableau row

    double& at(int r, int c) { return a[static_cast<size_t>(r) * n + c]; }
    double at(int r, int c) const { return a[static_cast<size_t>(r) * n + c]; }

    void pivot(int pr, int pc) {
        double pv = at(pr, pc);
        for (int c = 0; c < n; ++c) at(pr, c) /= pv;
        rhs[pr] /= pv;
        at(pr, pc) = 1.0;
        for (int r = 0; r < m; ++r) {
            if (r == pr) continue;
            double f = at(r, pc);
            if (f == 0.0) continue;
            for (int c = 0; c < n; ++c) at(r, c) -= f * at(pr, c);
            rhs[r] -= f * rhs[pr];
            at(r, pc) = 0.0;
        }
        basis[pr] = pc;
    }

    void drop_row(int r) {
        a.erase(a.begin() + static_cast<long>(r) * n, a.begin() + static_cast<long>(r + 1) * n);
        rhs.erase(rhs.begin() + r);
        basis.erase(basis.begin() + r);
        row_id.erase(row_id.begin() + r);
        --m;
    }
};

std::vector<double> reduced_costs(const Tableau& t, const std::vector<double>& cost) {
    std::vector<double> rc = cost;
    for (int r = 0; r < t.m; ++r) {
        double cb = cost[static_cast<size_t>(t.basis[r])];
        if (cb == 0.0) continue;
        for (int c = 0; c < t.n; ++c) rc[static_cast<size_t>(c)] -= cb * t.at(r, c);
    }
    return rc;
}

// Returns Optimal/Unbounded; advances the iteration counter.
LpStatus run_simplex(Tableau& t, const std::vector<double>& cost,
                     const std::vector<bool>& banned, int& iters, int max_iters) {
    const int bland_after = 3 * (t.m + t.n);
    int local = 0;
    while (true) {
        if (iters >= max_iters)
            throw numerical_error("simplex cycling guard exceeded (" + std::to_string(iters) +
                                  " iterations)");
        std::vector<double> rc = reduced_costs(t, cost);
        int enter = -1;
        if (local < bland_after) {
            double best = -kCostTol;
            for (int c = 0; c < t.n; ++c) {
                if (banned[static_cast<size_t>(c)]) continue;
                if (rc[static_cast<size_t>(c)] < best) {
                    best = rc[static_cast<size_t>(c)];
                    enter = c;
                }
            }
        } else {
            for (int c = 0; c < t.n; ++c) {
                if (banned[static_cast<size_t>(c)]) continue;
                if (rc[static_cast<size_t>(c)] < -kCostTol) {
                    enter = c;
                    break;
                }
            }
        }
        if (enter < 0) return LpStatus::Optimal;

        int leave = -1;
        double best_ratio = kInf;
        for (int r = 0; r < t.m; ++r) {
            double coef = t.at(r, enter);
            if (coef > kPivotTol) {
                double ratio = t.rhs[r] / coef;
                if (ratio < best_ratio - 1e-12 ||
                    (ratio < best_ratio + 1e-12 && (leave < 0 || t.basis[r] < t.basis[leave]))) {
                    best_ratio = ratio;
                    leave = r;
                }
            }
        }
        if (leave < 0) return LpStatus::Unbounded;
        t.pivot(leave, enter);
        ++iters;
        ++local;
    }
}

// Gaussian elimination with partial pivoting; zero rows/columns yield zero
// components instead of NaN.
std::vector<double> gauss_solve(std::vector<double> mat, std::vector<double> rhs, int m) {
    auto at = [&](int r, int c) -> double& { return mat[static_cast<size_t>(r) * m + c]; };
    for (int col = 0; col < m; ++col) {
        int piv = col;
        for (int r = col + 1; r < m; ++r)
            if (std::abs(at(r, col)) > std::abs(at(piv, col))) piv = r;
        if (std::abs(at(piv, col)) < 1e-300) continue;
        if (piv != col) {
            for (int c = 0; c < m; ++c) std::swap(at(piv, c), at(col, c));
            std::swap(rhs[static_cast<size_t>(piv)], rhs[static_cast<size_t>(col)]);
        }
        for (int r = col + 1; r < m; ++r) {
            double f = at(r, col) / at(col, col);
            if (f == 0.0) continue;
            for (int c = col; c < m; ++c) at(r, c) -= f * at(col, c);
            rhs[static_cast<size_t>(r)] -= f * rhs[static_cast<size_t>(col)];
        }
    }
    std::vector<double> x(static_cast<size_t>(m), 0.0);
    for (int r = m - 1; r >= 0; --r) {
        double s = rhs[static_cast<size_t>(r)];
        for (int c = r + 1; c < m; ++c) s -= at(r, c) * x[static_cast<size_t>(c)];
        x[static_cast<size_t>(r)] = std::abs(at(r, r)) < 1e-300 ? 0.0 : s / at(r, r);
    }
    return x;
}

} // namespace

LpSolution solve(const LpProblem& p) {
    const int nvars = p.num_vars();
    const int nrows = static_cast<int>(p.rows.size());
    for (const auto& row : p.rows)
        if (static_cast<int>(row.a.size()) != nvars)
            throw std::invalid_argument("LP row dimension mismatch");
    for (double v : p.c)
        if (!std::isfinite(v)) throw std::invalid_argument("non-finite objective coefficient");

    // Standardize: minimize, rhs >= 0, equality form. Rows and structural
    // columns are equilibrated so that the exponential-transform problems
    // at large |alpha| keep a pivotable entry in every row and column.
    std::vector<double> cmin = p.c;
    if (p.sense == Sense::Maximize)
        for (double& v : cmin) v = -v;

    std::vector<double> rowfac(static_cast<size_t>(nrows), 1.0); // sign / max-scaling per row
    std::vector<Rel> rel(static_cast<size_t>(nrows));
    for (int r = 0; r < nrows; ++r) {
        rel[static_cast<size_t>(r)] = p.rows[static_cast<size_t>(r)].rel;
        double mx = std::abs(p.rows[static_cast<size_t>(r)].rhs);
        for (double v : p.rows[static_cast<size_t>(r)].a) {
            if (!std::isfinite(v)) throw std::invalid_argument("non-finite constraint coefficient");
            mx = std::max(mx, std::abs(v));
        }
        double f = mx > 0.0 ? 1.0 / mx : 1.0;
        if (p.rows[static_cast<size_t>(r)].rhs * f < 0.0) {
            f = -f;
            if (rel[static_cast<size_t>(r)] == Rel::Le)
                rel[static_cast<size_t>(r)] = Rel::Ge;
            else if (rel[static_cast<size_t>(r)] == Rel::Ge)
                rel[static_cast<size_t>(r)] = Rel::Le;
        }
        rowfac[static_cast<size_t>(r)] = f;
    }
    std::vector<double> colfac(static_cast<size_t>(nvars), 1.0);
    for (int c = 0; c < nvars; ++c) {
        double mx = 0.0;
        for (int r = 0; r < nrows; ++r)
            mx = std::max(mx, std::abs(rowfac[static_cast<size_t>(r)] *
                                       p.rows[static_cast<size_t>(r)].a[static_cast<size_t>(c)]));
        if (mx > 0.0) colfac[static_cast<size_t>(c)] = 1.0 / mx;
    }
    auto scaled_coef = [&](int r, int c) {
        return rowfac[static_cast<size_t>(r)] * p.rows[static_cast<size_t>(r)].a[static_cast<size_t>(c)] *
               colfac[static_cast<size_t>(c)];
    };

    int nslack = 0;
    for (int r = 0; r < nrows; ++r)
        if (rel[static_cast<size_t>(r)] != Rel::Eq) ++nslack;
    int nartif = 0;
    for (int r = 0; r < nrows; ++r)
        if (rel[static_cast<size_t>(r)] != Rel::Le) ++nartif;

    Tableau t;
    t.m = nrows;
    t.nstruct = nvars;
    t.n = nvars + nslack + nartif;
    t.a.assign(static_cast<size_t>(t.m) * t.n, 0.0);
    t.rhs.assign(static_cast<size_t>(t.m), 0.0);
    t.basis.assign(static_cast<size_t>(t.m), -1);
    t.row_id.resize(static_cast<size_t>(t.m));

    const int artif_begin = nvars + nslack;
    // Slack/artificial column owned by each standardized row (-1: none).
    std::vector<int> slack_col(static_cast<size_t>(nrows), -1);
    std::vector<int> artif_col(static_cast<size_t>(nrows), -1);
    {
        int next = nvars;
        for (int r = 0; r < nrows; ++r)
            if (rel[static_cast<size_t>(r)] != Rel::Eq) slack_col[static_cast<size_t>(r)] = next++;
        for (int r = 0; r < nrows; ++r)
            if (rel[static_cast<size_t>(r)] != Rel::Le) artif_col[static_cast<size_t>(r)] = next++;
    }

    for (int r = 0; r < nrows; ++r) {
        for (int c = 0; c < nvars; ++c) t.at(r, c) = scaled_coef(r, c);
        t.rhs[static_cast<size_t>(r)] = rowfac[static_cast<size_t>(r)] * p.rows[static_cast<size_t>(r)].rhs;
        t.row_id[static_cast<size_t>(r)] = r;
        switch (rel[static_cast<size_t>(r)]) {
        case Rel::Le:
            t.at(r, slack_col[static_cast<size_t>(r)]) = 1.0;
            t.basis[static_cast<size_t>(r)] = slack_col[static_cast<size_t>(r)];
            break;
        case Rel::Ge:
            t.at(r, slack_col[static_cast<size_t>(r)]) = -1.0;
            t.at(r, artif_col[static_cast<size_t>(r)]) = 1.0;
            t.basis[static_cast<size_t>(r)] = artif_col[static_cast<size_t>(r)];
            break;
        case Rel::Eq:
            t.at(r, artif_col[static_cast<size_t>(r)]) = 1.0;
            t.basis[static_cast<size_t>(r)] = artif_col[static_cast<size_t>(r)];
            break;
        }
    }

    LpSolution sol;
    const int max_iters = 2000 + 200 * (t.m + t.n);

    // Phase 1: minimize the artificial total.
    if (nartif > 0) {
        std::vector<double> cost1(static_cast<size_t>(t.n), 0.0);
        for (int c = artif_begin; c < t.n; ++c) cost1[static_cast<size_t>(c)] = 1.0;
        std::vector<bool> banned(static_cast<size_t>(t.n), false);
        run_simplex(t, cost1, banned, sol.iterations, max_iters);
        double infeas = 0.0;
        for (int r = 0; r < t.m; ++r)
            if (t.basis[static_cast<size_t>(r)] >= artif_begin) infeas += t.rhs[static_cast<size_t>(r)];
        if (infeas > kPhase1Tol) {
            sol.status = LpStatus::Infeasible;
            return sol;
        }
        // Pivot artificials out of the basis; drop rows that turn out redundant.
        for (int r = t.m - 1; r >= 0; --r) {
            if (t.basis[static_cast<size_t>(r)] < artif_begin) continue;
            int pc = -1;
            for (int c = 0; c < artif_begin; ++c)
                if (std::abs(t.at(r, c)) > kPivotTol) {
                    pc = c;
                    break;
                }
            if (pc >= 0)
                t.pivot(r, pc);
            else
                t.drop_row(r);
        }
    }

    // Phase 2.
    std::vector<double> cost2(static_cast<size_t>(t.n), 0.0);
    for (int c = 0; c < nvars; ++c)
        cost2[static_cast<size_t>(c)] = cmin[static_cast<size_t>(c)] * colfac[static_cast<size_t>(c)];
    std::vector<bool> banned(static_cast<size_t>(t.n), false);
    for (int c = artif_begin; c < t.n; ++c) banned[static_cast<size_t>(c)] = true;
    LpStatus st = run_simplex(t, cost2, banned, sol.iterations, max_iters);
    if (st == LpStatus::Unbounded) {
        sol.status = LpStatus::Unbounded;
        return sol;
    }

    // Rebuild the scaled column of a variable in the kept-row space.
    const int m = t.m;
    auto column_entry = [&](int var, int r) -> double {
        int user = t.row_id[static_cast<size_t>(r)];
        if (var < nvars) return scaled_coef(user, var);
        if (var < artif_begin)
            return slack_col[static_cast<size_t>(user)] == var
                       ? (rel[static_cast<size_t>(user)] == Rel::Le ? 1.0 : -1.0)
                       : 0.0;
        return artif_col[static_cast<size_t>(user)] == var ? 1.0 : 0.0;
    };

    // Candidate basic solutions: the accumulated tableau values and a fresh
    // solve of the basis system. The fresh solve restores exactly-attained
    // vertices (unit weight on the evaluated firm) that pivot arithmetic
    // smears, but can itself cancel catastrophically on badly scaled bases,
    // so the candidate with the smaller residual wins.
    std::vector<double> xb;
    {
        std::vector<double> bmat(static_cast<size_t>(m) * m, 0.0);
        std::vector<double> brhs(static_cast<size_t>(m), 0.0);
        for (int r = 0; r < m; ++r) {
            for (int col = 0; col < m; ++col)
                bmat[static_cast<size_t>(r) * m + col] = column_entry(t.basis[static_cast<size_t>(col)], r);
            brhs[static_cast<size_t>(r)] =
                rowfac[static_cast<size_t>(t.row_id[static_cast<size_t>(r)])] *
                p.rows[static_cast<size_t>(t.row_id[static_cast<size_t>(r)])].rhs;
        }
        auto residual = [&](const std::vector<double>& u) {
            double worst = 0.0;
            for (int r = 0; r < m; ++r) {
                double lhs = 0.0;
                for (int col = 0; col < m; ++col)
                    lhs += bmat[static_cast<size_t>(r) * m + col] * u[static_cast<size_t>(col)];
                worst = std::max(worst, std::abs(lhs - brhs[static_cast<size_t>(r)]));
            }
            for (double v : u)
                if (!std::isfinite(v) || v < -1e-7) worst = kInf;
            return worst;
        };
        std::vector<double> refined = gauss_solve(bmat, brhs, m);
        xb = residual(refined) <= residual(t.rhs) ? std::move(refined) : t.rhs;
    }

    sol.status = LpStatus::Optimal;
    sol.x.assign(static_cast<size_t>(nvars), 0.0);
    for (int col = 0; col < m; ++col) {
        int var = t.basis[static_cast<size_t>(col)];
        if (var < nvars)
            sol.x[static_cast<size_t>(var)] =
                std::max(0.0, xb[static_cast<size_t>(col)]) * colfac[static_cast<size_t>(var)];
    }
    sol.objective = 0.0;
    for (int c = 0; c < nvars; ++c) sol.objective += p.c[static_cast<size_t>(c)] * sol.x[static_cast<size_t>(c)];

    // Duals: solve B^T y = c_B on the scaled standardized matrix, then map
    // back through the row scaling (column scaling cancels).
    {
        std::vector<double> bt(static_cast<size_t>(m) * m, 0.0);
        std::vector<double> cb(static_cast<size_t>(m), 0.0);
        for (int col = 0; col < m; ++col) {
            int var = t.basis[static_cast<size_t>(col)];
            cb[static_cast<size_t>(col)] = cost2[static_cast<size_t>(var)];
            for (int r = 0; r < m; ++r) bt[static_cast<size_t>(col) * m + r] = column_entry(var, r);
        }
        std::vector<double> y = gauss_solve(std::move(bt), std::move(cb), m);
        sol.duals.assign(static_cast<size_t>(nrows), 0.0);
        for (int r = 0; r < m; ++r) {
            int user = t.row_id[static_cast<size_t>(r)];
            double v = y[static_cast<size_t>(r)] * rowfac[static_cast<size_t>(user)];
            sol.duals[static_cast<size_t>(user)] = p.sense == Sense::Maximize ? -v : v;
        }
    }
    return sol;
}

} // namespace tropdea
