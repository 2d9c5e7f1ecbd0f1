#include "tropdea/dataset.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace tropdea {

namespace {

bool all_integral(const std::vector<Firm>& firms) {
    for (const Firm& f : firms) {
        for (double v : f.x)
            if (v != std::floor(v)) return false;
        for (double v : f.y)
            if (v != std::floor(v)) return false;
    }
    return true;
}

void check_dims(int m, int n, const std::vector<Firm>& firms) {
    if (m < 1 || n < 1) throw data_error("need at least one input and one output dimension");
    if (firms.empty()) throw data_error("dataset needs at least one firm");
    for (const Firm& f : firms)
        if (static_cast<int>(f.x.size()) != m || static_cast<int>(f.y.size()) != n)
            throw data_error("firm '" + f.id + "' does not match dataset dimensions");
}

std::string format_value(double v) {
    if (v == std::floor(v) && std::abs(v) < 1e15) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.0f", v);
        return buf;
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

Dataset Dataset::validated(int m, int n, std::vector<Firm> firms) {
    check_dims(m, n, firms);
    for (size_t k = 0; k < firms.size(); ++k) {
        auto reject = [&](double v) { return !std::isfinite(v) || v < 0.0; };
        for (double v : firms[k].x)
            if (reject(v))
                throw data_error("negative or non-finite input for firm '" + firms[k].id + "'",
                                 static_cast<int>(k) + 2);
        for (double v : firms[k].y)
            if (reject(v))
                throw data_error("negative or non-finite output for firm '" + firms[k].id + "'",
                                 static_cast<int>(k) + 2);
    }
    bool integral = all_integral(firms);
    return Dataset(m, n, std::move(firms), integral);
}

Dataset Dataset::unchecked(int m, int n, std::vector<Firm> firms) {
    check_dims(m, n, firms);
    bool integral = all_integral(firms);
    return Dataset(m, n, std::move(firms), integral);
}

std::string Dataset::to_csv() const {
    std::ostringstream os;
    os << "id";
    for (int i = 1; i <= m_; ++i) os << ",x" << i;
    for (int j = 1; j <= n_; ++j) os << ",y" << j;
    os << "\n";
    for (const Firm& f : firms_) {
        os << f.id;
        for (double v : f.x) os << "," << format_value(v);
        for (double v : f.y) os << "," << format_value(v);
        os << "\n";
    }
    return os.str();
}

Dataset parse_csv(std::string_view text, int m, int n) {
    if (m < 1 || n < 1) throw data_error("column counts must be positive");
    std::istringstream is{std::string(text)};
    std::string line;
    int row = 0;
    std::vector<Firm> firms;
    const int want = 1 + m + n;
    while (std::getline(is, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::string cur;
        for (char c : line) {
            if (c == ',') {
                fields.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        fields.push_back(cur);
        if (row == 1) {
            if (static_cast<int>(fields.size()) != want)
                throw data_error("header has " + std::to_string(fields.size()) + " fields, expected " +
                                     std::to_string(want),
                                 row);
            continue; // header
        }
        if (static_cast<int>(fields.size()) != want)
            throw data_error("expected " + std::to_string(want) + " fields, got " +
                                 std::to_string(fields.size()),
                             row);
        Firm f;
        f.id = fields[0];
        auto parse_field = [&](const std::string& s) {
            try {
                size_t pos = 0;
                double v = std::stod(s, &pos);
                if (pos != s.size()) throw std::invalid_argument("trailing characters");
                if (!std::isfinite(v)) throw std::invalid_argument("non-finite");
                if (v < 0.0) throw std::invalid_argument("negative");
                return v;
            } catch (const std::exception& e) {
                throw data_error("bad value '" + s + "': " + e.what(), row);
            }
        };
        for (int i = 0; i < m; ++i) f.x.push_back(parse_field(fields[1 + i]));
        for (int j = 0; j < n; ++j) f.y.push_back(parse_field(fields[1 + m + j]));
        firms.push_back(std::move(f));
    }
    if (firms.empty()) throw data_error("no data rows");
    return Dataset::validated(m, n, std::move(firms));
}

Dataset swap_negate(const Dataset& ds) {
    std::vector<Firm> out;
    out.reserve(static_cast<size_t>(ds.size()));
    for (const Firm& f : ds.firms()) {
        Firm g;
        g.id = f.id;
        g.x.reserve(f.y.size());
        g.y.reserve(f.x.size());
        for (double v : f.y) g.x.push_back(-v);
        for (double v : f.x) g.y.push_back(-v);
        out.push_back(std::move(g));
    }
    return Dataset::unchecked(ds.outputs(), ds.inputs(), std::move(out));
}

Dataset exp_transform(const Dataset& ds, double alpha) {
    if (alpha == 0.0 || !std::isfinite(alpha))
        throw std::invalid_argument("exp_transform requires finite nonzero alpha");
    std::vector<Firm> out;
    out.reserve(static_cast<size_t>(ds.size()));
    auto map = [&](double v) {
        double r = std::exp(alpha * v);
        if (!std::isfinite(r) || r == 0.0)
            throw numerical_error("exp_transform overflow at alpha=" + std::to_string(alpha));
        return r;
    };
    for (const Firm& f : ds.firms()) {
        Firm g;
        g.id = f.id;
        for (double v : f.x) g.x.push_back(map(v));
        for (double v : f.y) g.y.push_back(map(v));
        out.push_back(std::move(g));
    }
    return Dataset::unchecked(ds.inputs(), ds.outputs(), std::move(out));
}

const Dataset& builtin_example() {
    static const Dataset ds = Dataset::validated(
        2, 1,
        {
            {"1", {1, 3}, {2}},
            {"2", {2, 2}, {2}},
            {"3", {2, 1}, {2}},
            {"4", {1, 3}, {3}},
            {"5", {1, 4}, {2}},
            {"6", {3, 2}, {3}},
            {"7", {4, 4}, {5}},
        });
    return ds;
}

} // namespace tropdea
