#include "fuzzydepth/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fuzzydepth/errors.hpp"

namespace fdepth {

MetricOrder::MetricOrder(double r) : r_(r) {
    if (!(r >= 1.0) || !std::isfinite(r)) {
        throw InvalidParameter("metric order must be a finite real >= 1, got " + std::to_string(r));
    }
}

namespace {

// ∫_0^h |lin|^r over a cell where the linear function keeps one sign.
double single_sign_integral(double a, double b, double h, double r) {
    // a, b are |d0|, |d1|.
    if (r == 1.0) return 0.5 * h * (a + b);
    if (r == 2.0) return h * (a * a + a * b + b * b) / 3.0;
    const double scale = std::max(a, b);
    if (scale == 0.0) return 0.0;
    if (std::abs(b - a) <= 1e-9 * scale) {
        // Second-order expansion about the midpoint; the first-order term vanishes.
        const double m = 0.5 * (a + b);
        const double delta = 0.5 * (b - a);
        return h * std::pow(m, r) * (1.0 + r * (r - 1.0) * delta * delta / (6.0 * m * m));
    }
    return h * (std::pow(b, r + 1.0) - std::pow(a, r + 1.0)) / ((r + 1.0) * (b - a));
}

}  // namespace

double abs_power_integral(double d0, double d1, double h, double r) {
    if ((d0 >= 0.0 && d1 >= 0.0) || (d0 <= 0.0 && d1 <= 0.0)) {
        return single_sign_integral(std::abs(d0), std::abs(d1), h, r);
    }
    const double cross = h * d0 / (d0 - d1);
    return cross * std::pow(std::abs(d0), r) / (r + 1.0) +
           (h - cross) * std::pow(std::abs(d1), r) / (r + 1.0);
}

double rho(const FuzzyNumber& a, const FuzzyNumber& b, MetricOrder order) {
    require_same_grid(a.grid(), b.grid());
    const double r = order.value();
    const std::size_t cells = a.grid().intervals();
    const double h = 1.0 / static_cast<double>(cells);
    double total = 0.0;
    for (Direction u : kDirections) {
        double integral = 0.0;
        double prev = a.support_at(u, 0) - b.support_at(u, 0);
        for (std::size_t k = 0; k < cells; ++k) {
            const double next = a.support_at(u, k + 1) - b.support_at(u, k + 1);
            integral += abs_power_integral(prev, next, h, r);
            prev = next;
        }
        total += 0.5 * integral;
    }
    if (r == 1.0) return total;
    if (r == 2.0) return std::sqrt(total);
    return std::pow(total, 1.0 / r);
}

}  // namespace fdepth
