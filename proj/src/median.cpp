#include "fuzzydepth/median.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fuzzydepth/errors.hpp"
#include "fuzzydepth/metrics.hpp"

namespace fdepth {

namespace {

void check_grid(const LawProvider& laws, const AlphaGrid& grid) {
    if (const AlphaGrid* g = laws.grid()) require_same_grid(grid, *g);
}

// Grid levels merged with the backend's structural α for direction u.
std::vector<double> breakpoints(const LawProvider& laws, const AlphaGrid& grid, Direction u) {
    std::vector<double> pts = grid.levels();
    const auto extra = laws.structural_alphas(u);
    pts.insert(pts.end(), extra.begin(), extra.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

// Removes rounding-level breaches of nestedness and cut order (at most `tol`)
// so that exact medians assembled levelwise validate.
void snap(std::vector<double>& lower, std::vector<double>& upper, double tol) {
    for (std::size_t i = 1; i < lower.size(); ++i) {
        if (lower[i] < lower[i - 1] && lower[i - 1] - lower[i] <= tol) lower[i] = lower[i - 1];
        if (upper[i] > upper[i - 1] && upper[i] - upper[i - 1] <= tol) upper[i] = upper[i - 1];
    }
    for (std::size_t i = 0; i < lower.size(); ++i) {
        if (lower[i] > upper[i] && lower[i] - upper[i] <= tol) {
            const double m = 0.5 * (lower[i] + upper[i]);
            lower[i] = upper[i] = m;
        }
    }
}

double snap_tol(const std::vector<double>& lower, const std::vector<double>& upper) {
    double scale = 1.0;
    for (double v : lower) scale = std::max(scale, std::abs(v));
    for (double v : upper) scale = std::max(scale, std::abs(v));
    return kEqualityTol * scale;
}

}  // namespace

MedianBand::MedianBand(AlphaGrid grid, std::vector<Interval> plus, std::vector<Interval> minus)
    : grid_(grid), plus_(std::move(plus)), minus_(std::move(minus)) {
    if (plus_.size() != grid_.size() || minus_.size() != grid_.size()) {
        throw InvalidParameter("median band arrays must match the grid");
    }
}

MedianBand support_median_band(const LawProvider& laws, const AlphaGrid& grid) {
    check_grid(laws, grid);
    std::vector<Interval> plus(grid.size());
    std::vector<Interval> minus(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        plus[i] = laws.law(Direction::positive, grid.level(i)).median_interval();
        minus[i] = laws.law(Direction::negative, grid.level(i)).median_interval();
    }
    return MedianBand(grid, std::move(plus), std::move(minus));
}

double BandViolation::excess() const noexcept {
    return std::max({0.0, band.lo - value, value - band.hi});
}

BandCheck band_contains(const MedianBand& band, const FuzzyNumber& a, double tol) {
    require_same_grid(band.grid(), a.grid());
    BandCheck check;
    for (Direction u : kDirections) {
        for (std::size_t i = 0; i < a.grid().size(); ++i) {
            const double s = a.support_at(u, i);
            const Interval& iv = band.at(u, i);
            if (s < iv.lo - tol || s > iv.hi + tol) {
                check.contained = false;
                check.violations.push_back({u, a.grid().level(i), s, iv});
            }
        }
    }
    return check;
}

ContinuumCheck support_median_excess(const LawProvider& laws, const FuzzyNumber& a) {
    check_grid(laws, a.grid());
    ContinuumCheck worst;
    for (Direction u : kDirections) {
        for (double alpha : breakpoints(laws, a.grid(), u)) {
            const Interval iv = laws.law(u, alpha).median_interval();
            const double s = support_value(a, u, alpha);
            const double excess = std::max({0.0, iv.lo - s, s - iv.hi});
            if (excess > worst.max_excess) worst = {excess, u, alpha};
        }
    }
    return worst;
}

FuzzyNumber median_si(const LawProvider& laws, const AlphaGrid& grid) {
    const MedianBand band = support_median_band(laws, grid);
    std::vector<double> lower(grid.size());
    std::vector<double> upper(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        lower[i] = -band.at(Direction::negative, i).mid();
        upper[i] = band.at(Direction::positive, i).mid();
    }
    snap(lower, upper, snap_tol(lower, upper));
    try {
        return validate(std::move(lower), std::move(upper), grid);
    } catch (const ValidationError& e) {
        throw Error(std::string("internal error: midpoint median is not a fuzzy number: ") + e.what());
    }
}

FuzzyNumber median_gr(const LawProvider& laws, const AlphaGrid& grid) {
    const MedianBand band = support_median_band(laws, grid);
    std::vector<double> lower(grid.size());
    std::vector<double> upper(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        // Lower median of inf X_α is minus the upper median of -inf X_α.
        lower[i] = -band.at(Direction::negative, i).hi;
        upper[i] = band.at(Direction::positive, i).hi;
    }
    snap(lower, upper, snap_tol(lower, upper));
    try {
        return validate(std::move(lower), std::move(upper), grid);
    } catch (const ValidationError& e) {
        throw Error(std::string("internal error: median cuts are not a fuzzy number: ") + e.what());
    }
}

double expected_rho1(const FuzzyNumber& a, const FuzzySample& sample) {
    require_same_grid(a.grid(), sample.grid());
    double e = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        e += sample.weights()[i] * rho(a, sample.items()[i]);
    }
    return e;
}

double min_expected_rho1(const FuzzySample& sample) {
    const SampleLaws laws(sample);
    double total = 0.0;
    for (Direction u : kDirections) {
        const auto pts = breakpoints(laws, sample.grid(), u);
        for (std::size_t k = 1; k < pts.size(); ++k) {
            // Item order is fixed on (pts[k-1], pts[k]); the lower median is one
            // item's linear support function and every |lo - s_i| is linear.
            const double width = pts[k] - pts[k - 1];
            const double mid = 0.5 * (pts[k] + pts[k - 1]);
            const double lo = laws.law(u, mid).median_interval().lo;
            double dev = 0.0;
            for (std::size_t i = 0; i < sample.size(); ++i) {
                dev += sample.weights()[i] * std::abs(lo - support_value(sample.items()[i], u, mid));
            }
            total += 0.5 * width * dev;
        }
    }
    return total;
}

double tukey_depth_ceiling(const LawProvider& laws, const AlphaGrid& grid) {
    check_grid(laws, grid);
    double ceiling = 1.0;
    for (Direction u : kDirections) {
        const auto pts = breakpoints(laws, grid, u);
        for (std::size_t k = 0; k < pts.size(); ++k) {
            for (double alpha : {pts[k], k > 0 ? 0.5 * (pts[k - 1] + pts[k]) : pts[k]}) {
                const Interval iv = laws.law(u, alpha).median_interval();
                double best = 0.0;
                for (double t : {iv.lo, iv.mid(), iv.hi}) {
                    const auto m = laws.masses(u, alpha, t);
                    best = std::max(best, std::min(m.at_most(), m.at_least()));
                }
                ceiling = std::min(ceiling, best);
            }
        }
    }
    return ceiling;
}

OneMedianResult brute_force_one_median(const FuzzySample& sample, std::span<const FuzzyNumber> pool,
                                       double slack) {
    if (pool.empty()) throw InvalidParameter("candidate pool is empty");
    OneMedianResult res;
    res.objective.reserve(pool.size());
    res.minimum = std::numeric_limits<double>::infinity();
    for (const auto& c : pool) {
        res.objective.push_back(expected_rho1(c, sample));
        res.minimum = std::min(res.minimum, res.objective.back());
    }
    for (std::size_t i = 0; i < pool.size(); ++i) {
        if (res.objective[i] <= res.minimum + slack) res.minimizers.push_back(i);
    }
    return res;
}

}  // namespace fdepth
