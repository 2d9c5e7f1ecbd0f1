#ifndef TROPDEA_COMMON_HPP
#define TROPDEA_COMMON_HPP

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropdea {

/// Coordinate vector. Entries may carry the semiring sentinels
/// (-inf in max-plus contexts, +inf in min-plus contexts).
using RVec = std::vector<double>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Raised when a floating-point computation leaves the representable
/// range or an iterative solver gives up.
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised on malformed or invalid input data. `row` is 1-based when the
/// source is tabular, 0 otherwise.
class data_error : public std::runtime_error {
public:
    data_error(const std::string& what, int row = 0)
        : std::runtime_error(row > 0 ? what + " (row " + std::to_string(row) + ")" : what),
          row_(row) {}
    int row() const { return row_; }

private:
    int row_;
};

} // namespace tropdea

#endif
