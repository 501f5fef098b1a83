#include "fuzzydepth/fuzzy_number.hpp"

#include <cmath>
#include <sstream>

#include "fuzzydepth/errors.hpp"

namespace fdepth {

AlphaGrid::AlphaGrid(std::size_t level_count) : level_count_(level_count) {
    if (level_count < 2) {
        throw InvalidParameter("alpha grid needs at least 2 levels, got " +
                               std::to_string(level_count));
    }
}

std::vector<double> AlphaGrid::levels() const {
    std::vector<double> out(level_count_);
    for (std::size_t i = 0; i < level_count_; ++i) out[i] = level(i);
    return out;
}

AlphaGrid::Position AlphaGrid::locate(double alpha) const {
    const double m = static_cast<double>(intervals());
    const double x = alpha * m;
    const double nearest = std::round(x);
    if (std::abs(x - nearest) <= 1e-12 * (1.0 + m)) {
        const auto lvl = static_cast<std::size_t>(nearest);
        const std::size_t cell = lvl == intervals() ? lvl - 1 : lvl;
        return {cell, lvl == intervals() ? 1.0 : 0.0, true, lvl};
    }
    auto cell = static_cast<std::size_t>(std::floor(x));
    if (cell >= intervals()) cell = intervals() - 1;
    return {cell, x - static_cast<double>(cell), false, 0};
}

bool FuzzyNumber::approx_equal(const FuzzyNumber& other, double tol) const {
    if (!(grid_ == other.grid_)) return false;
    for (std::size_t i = 0; i < lower_.size(); ++i) {
        if (std::abs(lower_[i] - other.lower_[i]) > tol) return false;
        if (std::abs(upper_[i] - other.upper_[i]) > tol) return false;
    }
    return true;
}

FuzzyNumber validate(std::vector<double> lower, std::vector<double> upper, const AlphaGrid& grid) {
    if (lower.size() != grid.size() || upper.size() != grid.size()) {
        std::ostringstream os;
        os << "endpoint arrays have lengths " << lower.size() << " and " << upper.size()
           << ", grid has " << grid.size() << " levels";
        throw InvalidParameter(os.str());
    }
    using R = ValidationError::Reason;
    auto fail = [&](R reason, std::size_t i, const std::string& detail) {
        std::ostringstream os;
        os << to_string(reason) << " at level " << i << " (alpha=" << grid.level(i) << "): " << detail;
        throw ValidationError(reason, i, os.str());
    };
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!std::isfinite(lower[i]) || !std::isfinite(upper[i])) {
            fail(R::not_compact, i, "non-finite endpoint");
        }
    }
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (lower[i] < lower[i - 1]) fail(R::not_nested, i, "lower endpoint decreases");
        if (upper[i] > upper[i - 1]) fail(R::not_nested, i, "upper endpoint increases");
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (lower[i] > upper[i]) fail(R::empty_cut, i, "lower endpoint exceeds upper endpoint");
    }
    return FuzzyNumber(grid, std::move(lower), std::move(upper));
}

FuzzyNumber make_trapezoidal(double a, double b, double c, double d, const AlphaGrid& grid) {
    if (!(a <= b && b <= c && c <= d)) {
        std::ostringstream os;
        os << "trapezoid requires a <= b <= c <= d, got (" << a << ", " << b << ", " << c << ", "
           << d << ")";
        throw InvalidParameter(os.str());
    }
    std::vector<double> lower(grid.size());
    std::vector<double> upper(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double alpha = grid.level(i);
        lower[i] = a + alpha * (b - a);
        upper[i] = d - alpha * (d - c);
    }
    // Endpoint formulas are monotone in exact arithmetic; pin the core so the
    // last level is exactly [b, c].
    lower.back() = b;
    upper.back() = c;
    return validate(std::move(lower), std::move(upper), grid);
}

FuzzyNumber make_triangular(double a, double b, double c, const AlphaGrid& grid) {
    if (!(a <= b && b <= c)) {
        std::ostringstream os;
        os << "triangle requires a <= b <= c, got (" << a << ", " << b << ", " << c << ")";
        throw InvalidParameter(os.str());
    }
    return make_trapezoidal(a, b, b, c, grid);
}

FuzzyNumber make_crisp_point(double x, const AlphaGrid& grid) {
    return make_trapezoidal(x, x, x, x, grid);
}

FuzzyNumber make_crisp_interval(double lo, double hi, const AlphaGrid& grid) {
    return make_trapezoidal(lo, lo, hi, hi, grid);
}

double support_value(const FuzzyNumber& a, Direction u, double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw DomainError("alpha must lie in [0,1], got " + std::to_string(alpha));
    }
    const auto pos = a.grid().locate(alpha);
    if (pos.on_level) return a.support_at(u, pos.level);
    const double v0 = a.support_at(u, pos.cell);
    const double v1 = a.support_at(u, pos.cell + 1);
    return v0 + pos.offset * (v1 - v0);
}

void require_same_grid(const AlphaGrid& a, const AlphaGrid& b) {
    if (!(a == b)) {
        throw GridMismatch("alpha grids differ: " + std::to_string(a.size()) + " vs " +
                           std::to_string(b.size()) + " levels");
    }
}

FuzzyNumber blend(const FuzzyNumber& a, const FuzzyNumber& b, double lambda) {
    require_same_grid(a.grid(), b.grid());
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw InvalidParameter("blend weight must lie in [0,1], got " + std::to_string(lambda));
    }
    const std::size_t n = a.grid().size();
    std::vector<double> lower(n);
    std::vector<double> upper(n);
    for (std::size_t i = 0; i < n; ++i) {
        lower[i] = lambda * a.lower()[i] + (1.0 - lambda) * b.lower()[i];
        upper[i] = lambda * a.upper()[i] + (1.0 - lambda) * b.upper()[i];
    }
    return validate(std::move(lower), std::move(upper), a.grid());
}

FuzzyNumber translate(const FuzzyNumber& a, double shift) {
    std::vector<double> lower(a.lower().begin(), a.lower().end());
    std::vector<double> upper(a.upper().begin(), a.upper().end());
    for (auto& v : lower) v += shift;
    for (auto& v : upper) v += shift;
    return validate(std::move(lower), std::move(upper), a.grid());
}

}  // namespace fdepth
