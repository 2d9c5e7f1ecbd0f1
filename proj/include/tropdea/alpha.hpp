#ifndef TROPDEA_ALPHA_HPP
#define TROPDEA_ALPHA_HPP

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tropdea/common.hpp"

namespace tropdea {

/// The deformation parameter of the exponential-mean arithmetic: a finite
/// nonzero real, +infinity (max-plus limit) or -infinity (min-plus limit).
class Alpha {
public:
    static Alpha finite(double v) {
        if (v == 0.0 || !std::isfinite(v))
            throw std::invalid_argument("alpha must be a finite nonzero real");
        return Alpha(Kind::Finite, v);
    }
    static Alpha plus_inf() { return Alpha(Kind::PlusInf, kInf); }
    static Alpha minus_inf() { return Alpha(Kind::MinusInf, -kInf); }

    /// Accepts "+inf", "inf", "-inf" or a nonzero real literal.
    static Alpha parse(std::string_view s) {
        if (s == "+inf" || s == "inf") return plus_inf();
        if (s == "-inf") return minus_inf();
        try {
            size_t pos = 0;
            double v = std::stod(std::string(s), &pos);
            if (pos != s.size()) throw std::invalid_argument("trailing characters");
            return finite(v);
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse alpha from '" + std::string(s) + "'");
        }
    }

    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_plus_inf() const { return kind_ == Kind::PlusInf; }
    bool is_minus_inf() const { return kind_ == Kind::MinusInf; }
    bool is_infinite() const { return kind_ != Kind::Finite; }

    /// Finite value; only meaningful when is_finite().
    double value() const {
        if (!is_finite()) throw std::logic_error("Alpha::value on infinite alpha");
        return value_;
    }

    /// +1 for positive / +inf, -1 for negative / -inf.
    double sign() const { return (kind_ == Kind::MinusInf || value_ < 0) ? -1.0 : 1.0; }

    /// Sentinel weight excluded from the aggregation: -inf on the plus side,
    /// +inf on the minus side.
    double excluded_sentinel() const { return sign() > 0 ? -kInf : kInf; }

    std::string str() const {
        if (is_plus_inf()) return "+inf";
        if (is_minus_inf()) return "-inf";
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", value_);
        return buf;
    }

    friend bool operator==(const Alpha& a, const Alpha& b) {
        return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
    }
    friend bool operator!=(const Alpha& a, const Alpha& b) { return !(a == b); }

private:
    enum class Kind { Finite, PlusInf, MinusInf };
    Alpha(Kind k, double v) : kind_(k), value_(v) {}
    Kind kind_;
    double value_;
};

} // namespace tropdea

#endif
