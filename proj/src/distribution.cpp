#include "fuzzydepth/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "fuzzydepth/errors.hpp"

namespace fdepth {

namespace {

bool is_tie(double a, double b) {
    return std::abs(a - b) <= kEqualityTol * std::max(1.0, std::abs(b));
}

double clamp01(double p) { return std::clamp(p, 0.0, 1.0); }

std::vector<double> support_array(const FuzzyNumber& a, Direction u) {
    std::vector<double> out(a.grid().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.support_at(u, i);
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// ScalarCdf

ScalarCdf ScalarCdf::from_breakpoints(std::vector<Breakpoint> knots) {
    if (knots.empty()) throw InvalidParameter("cdf needs at least one breakpoint");
    auto fail = [](std::size_t i, const std::string& what) {
        std::ostringstream os;
        os << "invalid cdf breakpoint " << i << ": " << what;
        throw InvalidParameter(os.str());
    };
    for (std::size_t i = 0; i < knots.size(); ++i) {
        const auto& k = knots[i];
        if (!std::isfinite(k.x) || !std::isfinite(k.f_left) || !std::isfinite(k.f_right)) {
            fail(i, "non-finite value");
        }
        if (k.f_left < -kProbabilityTol || k.f_right > 1.0 + kProbabilityTol) {
            fail(i, "F outside [0,1]");
        }
        if (k.f_left > k.f_right + kProbabilityTol) fail(i, "F_left exceeds F_right");
        if (i > 0) {
            if (!(k.x > knots[i - 1].x)) fail(i, "x not strictly increasing");
            if (k.f_left + kProbabilityTol < knots[i - 1].f_right) fail(i, "F decreases");
        }
    }
    if (std::abs(knots.front().f_left) > kProbabilityTol) {
        fail(0, "F must start at 0 (F_left of the first breakpoint)");
    }
    if (std::abs(knots.back().f_right - 1.0) > kProbabilityTol) {
        fail(knots.size() - 1, "F must reach 1 (F_right of the last breakpoint)");
    }
    knots.front().f_left = 0.0;
    knots.back().f_right = 1.0;
    for (auto& k : knots) {
        k.f_left = clamp01(k.f_left);
        k.f_right = clamp01(std::max(k.f_left, k.f_right));
    }
    return ScalarCdf(std::move(knots));
}

ScalarCdf ScalarCdf::from_atoms(std::span<const double> values, std::span<const double> weights) {
    if (values.empty()) throw DomainError("law needs at least one atom");
    if (values.size() != weights.size()) {
        throw InvalidParameter("values and weights differ in length");
    }
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    double total = 0.0;
    for (double w : weights) {
        if (!(w > 0.0) || !std::isfinite(w)) throw InvalidParameter("atom weights must be positive");
        total += w;
    }
    for (double v : values) {
        if (!std::isfinite(v)) throw InvalidParameter("atoms must be finite");
    }
    std::vector<Breakpoint> knots;
    knots.reserve(values.size());
    double cumulative = 0.0;
    for (std::size_t idx : order) {
        const double x = values[idx];
        const double w = weights[idx] / total;
        if (!knots.empty() && is_tie(x, knots.back().x)) {
            cumulative += w;
            knots.back().f_right = cumulative;
            continue;
        }
        knots.push_back({x, cumulative, cumulative + w});
        cumulative += w;
    }
    knots.back().f_right = 1.0;
    for (auto& k : knots) {
        k.f_left = clamp01(k.f_left);
        k.f_right = clamp01(k.f_right);
    }
    return ScalarCdf(std::move(knots));
}

double ScalarCdf::cdf(double t) const {
    auto it = std::upper_bound(knots_.begin(), knots_.end(), t,
                               [](double v, const Breakpoint& k) { return v < k.x; });
    if (it == knots_.begin()) return 0.0;
    const auto j = static_cast<std::size_t>(it - knots_.begin()) - 1;
    if (t == knots_[j].x || j + 1 == knots_.size()) return knots_[j].f_right;
    const auto& a = knots_[j];
    const auto& b = knots_[j + 1];
    return a.f_right + (t - a.x) / (b.x - a.x) * (b.f_left - a.f_right);
}

double ScalarCdf::cdf_left(double t) const {
    auto it = std::lower_bound(knots_.begin(), knots_.end(), t,
                               [](const Breakpoint& k, double v) { return k.x < v; });
    if (it != knots_.end() && it->x == t) return it->f_left;
    if (it == knots_.begin()) return 0.0;
    if (it == knots_.end()) return 1.0;
    const auto& a = *(it - 1);
    const auto& b = *it;
    return a.f_right + (t - a.x) / (b.x - a.x) * (b.f_left - a.f_right);
}

double ScalarCdf::lower_median() const {
    constexpr double half = 0.5 - kProbabilityTol;
    for (std::size_t i = 0; i < knots_.size(); ++i) {
        if (i > 0 && knots_[i].f_left >= half) {
            // F reaches 1/2 inside the linear piece (x_{i-1}, x_i].
            const auto& a = knots_[i - 1];
            const auto& b = knots_[i];
            const double rise = b.f_left - a.f_right;
            if (rise <= 0.0) return b.x;
            const double t = a.x + (0.5 - a.f_right) / rise * (b.x - a.x);
            return std::clamp(t, a.x, b.x);
        }
        if (knots_[i].f_right >= half) return knots_[i].x;
    }
    return knots_.back().x;
}

Interval ScalarCdf::median_interval() const {
    const double lo = lower_median();
    const double hi = -reflected().lower_median();
    // The two sides are computed along different rounding paths; a unique
    // median can come out with hi a few ulps below lo.
    if (hi < lo) {
        const double m = 0.5 * (lo + hi);
        return {m, m};
    }
    return {lo, hi};
}

double ScalarCdf::mad() const {
    const double m = median_mid();
    // Law of |X - m|: G(d) = F(m + d) - F((m - d)-), G(d-) = F((m + d)-) - F(m - d).
    std::vector<double> ds{0.0};
    for (const auto& k : knots_) {
        const double d = std::abs(k.x - m);
        if (d > 0.0) ds.push_back(d);
    }
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    std::vector<Breakpoint> folded;
    folded.reserve(ds.size());
    // m ± d is recomputed in floating point; snap it back onto the knot it came
    // from so atoms are not missed by an ulp.
    auto snap = [this](double t) {
        auto it = std::lower_bound(knots_.begin(), knots_.end(), t,
                                   [](const Breakpoint& k, double v) { return k.x < v; });
        const double tol = kEqualityTol * std::max(1.0, std::abs(t));
        if (it != knots_.end() && it->x - t <= tol) return it->x;
        if (it != knots_.begin() && t - (it - 1)->x <= tol) return (it - 1)->x;
        return t;
    };
    for (double d : ds) {
        const double hi = snap(m + d);
        const double lo = snap(m - d);
        double g_right = clamp01(cdf(hi) - cdf_left(lo));
        double g_left = d == 0.0 ? 0.0 : clamp01(cdf_left(hi) - cdf(lo));
        if (!folded.empty()) g_left = std::max(g_left, folded.back().f_right);
        g_right = std::max(g_right, g_left);
        folded.push_back({d, g_left, g_right});
    }
    folded.back().f_right = 1.0;
    return ScalarCdf(std::move(folded)).median_mid();
}

ScalarCdf ScalarCdf::reflected() const {
    std::vector<Breakpoint> out;
    out.reserve(knots_.size());
    for (auto it = knots_.rbegin(); it != knots_.rend(); ++it) {
        out.push_back({-it->x, clamp01(1.0 - it->f_right), clamp01(1.0 - it->f_left)});
    }
    out.front().f_left = 0.0;
    out.back().f_right = 1.0;
    return ScalarCdf(std::move(out));
}

bool ScalarCdf::continuous() const {
    return std::all_of(knots_.begin(), knots_.end(), [](const Breakpoint& k) {
        return k.f_right - k.f_left <= kProbabilityTol;
    });
}

bool ScalarCdf::degenerate() const {
    return std::any_of(knots_.begin(), knots_.end(), [](const Breakpoint& k) {
        return k.f_right - k.f_left >= 1.0 - kProbabilityTol;
    });
}

Interval weighted_median_interval(std::span<const double> values, std::span<const double> weights) {
    return ScalarCdf::from_atoms(values, weights).median_interval();
}

double median_mid(std::span<const double> values, std::span<const double> weights) {
    return weighted_median_interval(values, weights).mid();
}

double weighted_mad(std::span<const double> values, std::span<const double> weights) {
    const double m = median_mid(values, weights);
    std::vector<double> dev(values.size());
    std::transform(values.begin(), values.end(), dev.begin(),
                   [m](double v) { return std::abs(v - m); });
    return median_mid(dev, weights);
}

// ---------------------------------------------------------------------------
// FuzzySample

FuzzySample::FuzzySample(std::vector<FuzzyNumber> items, std::vector<double> weights)
    : items_(std::move(items)), weights_(std::move(weights)) {
    if (items_.empty()) throw InvalidParameter("sample needs at least one item");
    if (weights_.size() != items_.size()) {
        throw InvalidParameter("sample has " + std::to_string(items_.size()) + " items but " +
                               std::to_string(weights_.size()) + " weights");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (!(weights_[i] > 0.0) || !std::isfinite(weights_[i])) {
            throw InvalidParameter("weight of item " + std::to_string(i) + " must be positive");
        }
        total += weights_[i];
    }
    if (std::abs(total - 1.0) > kEqualityTol) {
        std::ostringstream os;
        os.precision(17);
        os << "weights must sum to 1, got " << total;
        throw InvalidParameter(os.str());
    }
    for (const auto& item : items_) require_same_grid(items_.front().grid(), item.grid());
}

FuzzySample::FuzzySample(std::vector<FuzzyNumber> items)
    : FuzzySample(items, std::vector<double>(items.size(), items.empty() ? 0.0 : 1.0 / static_cast<double>(items.size()))) {}

// ---------------------------------------------------------------------------
// Backends

void append_cell_crossings(std::span<const double> f, std::span<const double> g,
                           std::vector<double>& out) {
    const std::size_t cells = f.size() - 1;
    const double m = static_cast<double>(cells);
    for (std::size_t k = 0; k < cells; ++k) {
        const double d0 = f[k] - g[k];
        const double d1 = f[k + 1] - g[k + 1];
        if ((d0 > 0.0 && d1 < 0.0) || (d0 < 0.0 && d1 > 0.0)) {
            const double t = d0 / (d0 - d1);
            if (t > 0.0 && t < 1.0) out.push_back((static_cast<double>(k) + t) / m);
        }
    }
}

SampleLaws::SampleLaws(FuzzySample sample) : sample_(std::move(sample)) {
    const auto items = sample_.items();
    degenerate_ = std::all_of(items.begin(), items.end(),
                              [&](const FuzzyNumber& a) { return a.approx_equal(items.front()); });
    range_ = {items.front().lower()[0], items.front().upper()[0]};
    for (const auto& a : items) {
        range_.lo = std::min(range_.lo, a.lower()[0]);
        range_.hi = std::max(range_.hi, a.upper()[0]);
    }
    for (Direction u : kDirections) {
        std::vector<std::vector<double>> arrays;
        arrays.reserve(items.size());
        for (const auto& a : items) arrays.push_back(support_array(a, u));
        std::vector<double> cross;
        for (std::size_t i = 0; i < arrays.size(); ++i) {
            for (std::size_t j = i + 1; j < arrays.size(); ++j) {
                append_cell_crossings(arrays[i], arrays[j], cross);
            }
        }
        std::sort(cross.begin(), cross.end());
        cross.erase(std::unique(cross.begin(), cross.end()), cross.end());
        (u == Direction::positive ? structural_plus_ : structural_minus_) = std::move(cross);
    }
}

LawView SampleLaws::law(Direction u, double alpha) const { return law_of(sample_, u, alpha); }

Masses SampleLaws::masses(Direction u, double alpha, double t) const {
    Masses m{0.0, 0.0, 0.0};
    const auto items = sample_.items();
    const auto weights = sample_.weights();
    for (std::size_t i = 0; i < items.size(); ++i) {
        const double x = support_value(items[i], u, alpha);
        if (is_tie(x, t)) {
            m.at += weights[i];
        } else if (x < t) {
            m.below += weights[i];
        } else {
            m.above += weights[i];
        }
    }
    return m;
}

std::vector<double> SampleLaws::crossing_alphas(const FuzzyNumber& a, Direction u) const {
    require_same_grid(a.grid(), sample_.grid());
    const auto sa = support_array(a, u);
    std::vector<double> out;
    for (const auto& item : sample_.items()) append_cell_crossings(sa, support_array(item, u), out);
    return out;
}

std::vector<double> SampleLaws::structural_alphas(Direction u) const {
    return u == Direction::positive ? structural_plus_ : structural_minus_;
}

CrispLaws::CrispLaws(ScalarCdf cdf) : cdf_(std::move(cdf)), reflected_(cdf_.reflected()) {}

LawView CrispLaws::law(Direction u, double alpha) const {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("alpha must lie in [0,1]");
    return u == Direction::positive ? cdf_ : reflected_;
}

Masses CrispLaws::masses(Direction u, double alpha, double t) const {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("alpha must lie in [0,1]");
    const ScalarCdf& law = u == Direction::positive ? cdf_ : reflected_;
    const double left = law.cdf_left(t);
    const double full = law.cdf(t);
    return {left, std::max(0.0, full - left), std::max(0.0, 1.0 - full)};
}

std::vector<double> CrispLaws::crossing_alphas(const FuzzyNumber& a, Direction u) const {
    const auto sa = support_array(a, u);
    std::vector<double> out;
    std::vector<double> level(sa.size());
    for (const auto& k : cdf_.breakpoints()) {
        std::fill(level.begin(), level.end(), sign(u) * k.x);
        append_cell_crossings(sa, level, out);
    }
    return out;
}

LawView law_of(const FuzzySample& sample, Direction u, double alpha) {
    std::vector<double> atoms(sample.size());
    for (std::size_t i = 0; i < sample.size(); ++i) {
        atoms[i] = support_value(sample.items()[i], u, alpha);
    }
    return ScalarCdf::from_atoms(atoms, sample.weights());
}

LawView law_of_crisp(const ScalarCdf& cdf, Direction u, double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("alpha must lie in [0,1]");
    return u == Direction::positive ? cdf : cdf.reflected();
}

}  // namespace fdepth
