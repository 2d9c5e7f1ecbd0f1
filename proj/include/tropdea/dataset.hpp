#ifndef TROPDEA_DATASET_HPP
#define TROPDEA_DATASET_HPP

#include <string>
#include <string_view>
#include <vector>

#include "tropdea/common.hpp"

namespace tropdea {

/// One production unit: m input quantities and n output quantities.
struct Firm {
    std::string id;
    RVec x;
    RVec y;
};

/// An observed sample of production units with common dimensions.
class Dataset {
public:
    /// Validating constructor: every coordinate must be finite and >= 0.
    static Dataset validated(int m, int n, std::vector<Firm> firms);

    /// Dimension checks only. Used for derived point lists (swapped or
    /// transformed data) whose coordinates may be negative.
    static Dataset unchecked(int m, int n, std::vector<Firm> firms);

    int inputs() const { return m_; }
    int outputs() const { return n_; }
    int dim() const { return m_ + n_; }
    int size() const { return static_cast<int>(firms_.size()); }
    bool integral() const { return integral_; }
    const Firm& firm(int k) const { return firms_.at(static_cast<size_t>(k)); }
    const std::vector<Firm>& firms() const { return firms_; }

    std::string to_csv() const;

private:
    Dataset(int m, int n, std::vector<Firm> firms, bool integral)
        : m_(m), n_(n), firms_(std::move(firms)), integral_(integral) {}
    int m_;
    int n_;
    std::vector<Firm> firms_;
    bool integral_;
};

/// Parses `id,x1..xm,y1..yn` CSV with a header row. Errors carry the
/// offending 1-based row number.
Dataset parse_csv(std::string_view text, int m, int n);

/// The swapped, negated point list used by the distance duality identities:
/// firm (x, y) becomes (x' = -y, y' = -x) with the roles of the input and
/// output blocks exchanged. Applying it twice restores the dataset.
Dataset swap_negate(const Dataset& ds);

/// Elementwise e^{alpha * coordinate}. alpha must be finite and nonzero.
Dataset exp_transform(const Dataset& ds, double alpha);

/// The bundled 7-firm example dataset (m=2, n=1), available to the CLI
/// under the name "paper-example".
const Dataset& builtin_example();

} // namespace tropdea

#endif
