#ifndef TROPDEA_DISTANCE_HPP
#define TROPDEA_DISTANCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "tropdea/common.hpp"
#include "tropdea/dataset.hpp"
#include "tropdea/technology.hpp"

namespace tropdea {

enum class Orientation { Input, Output };

inline const char* to_string(Orientation o) { return o == Orientation::Input ? "in" : "out"; }

/// One firm's efficiency evaluation: the translation distance delta, the
/// frontier projection it certifies, and (for the LP paths) the radial
/// score and constraint multipliers.
struct ScoreRecord {
    std::string firm_id;
    int firm_index = 0;
    TechSpec tech;
    Orientation orientation = Orientation::Output;
    double delta = 0.0;
    std::optional<double> farrell_value; // lambda (input) or theta (output)
    Point benchmark;
    std::optional<std::vector<double>> duals;
    bool integral = false;
    std::vector<std::string> flags;
};

/// beta[kbar][k]  = min_i (x_{kbar,i} - x_{k,i})
/// beta_c[kbar][k] = min_j (y_{k,j} - y_{kbar,j})
struct BetaTable {
    std::vector<std::vector<double>> beta;
    std::vector<std::vector<double>> beta_c;
};

BetaTable beta_tables(const Dataset& ds);

enum class TropicalVariant { MaxPlusVRS, MaxPlusCRS, MinPlusVRS, MinPlusCRS };

/// Closed-form tropical translation distance at an observed firm. Min-plus
/// values are computed through the swap identity (evaluating the max-plus
/// forms on the negated, role-swapped dataset) and cross-checked against
/// the direct min-plus forms, which must agree exactly.
ScoreRecord distance_tropical(const Dataset& ds, int kbar, TropicalVariant variant, Orientation o);

/// Finite-alpha translation distance via the exponential-transform LP.
/// Inequalities and optimization sense flip with the sign of alpha; the
/// delta recovery formulas do not.
ScoreRecord distance_quantized_lp(const Dataset& ds, int kbar, double alpha, bool vrs, Orientation o);

/// Convex technology translation distance via a direct LP in (delta, t).
ScoreRecord distance_convex(const Dataset& ds, int kbar, bool vrs, Orientation o);

/// FDH translation distance by enumeration over dominating firms.
ScoreRecord distance_fdh(const Dataset& ds, int kbar, Orientation o);

/// Radial (proportional) efficiency: E_in = min lambda with (lambda x, y)
/// feasible, E_out = max theta with (x, theta y) feasible. family must be
/// ConvexVRS, ConvexCRS or FDH.
double farrell(const Dataset& ds, int kbar, Family family, Orientation o);

/// One record per firm. Firms are evaluated concurrently when parallel is
/// true; results are identical either way.
std::vector<ScoreRecord> score_all(const Dataset& ds, const TechSpec& tech, Orientation o,
                                   bool parallel = true);

} // namespace tropdea

#endif
