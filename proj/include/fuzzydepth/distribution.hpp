#pragma once

#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "fuzzydepth/fuzzy_number.hpp"

namespace fdepth {

/// Closed real interval [lo, hi].
struct Interval {
    double lo;
    double hi;
    double mid() const noexcept { return 0.5 * (lo + hi); }
    double width() const noexcept { return hi - lo; }
};

/// CDF knot: F(x-) = f_left, F(x) = f_right. A positive jump is a point mass.
struct Breakpoint {
    double x;
    double f_left;
    double f_right;
};

/// Univariate law with a piecewise-linear CDF that may jump at breakpoints.
///
/// Between consecutive breakpoints F is linear from `f_right` of the left knot
/// to `f_left` of the right knot. F = 0 below the first knot and F = 1 from the
/// last knot on. A finitely supported discrete law is the special case where
/// each knot's `f_left` equals the previous knot's `f_right`.
class ScalarCdf {
public:
    /// Validates: strictly increasing x, 0 <= F <= 1, nondecreasing values,
    /// first f_left == 0, last f_right == 1.
    static ScalarCdf from_breakpoints(std::vector<Breakpoint> knots);

    /// Discrete law with atoms `values` and masses `weights`. Weights must be
    /// positive; they are renormalised to sum to 1. Atoms closer than 1e-12 are
    /// merged.
    static ScalarCdf from_atoms(std::span<const double> values, std::span<const double> weights);

    std::span<const Breakpoint> breakpoints() const noexcept { return knots_; }

    /// P(X <= t).
    double cdf(double t) const;
    /// P(X < t).
    double cdf_left(double t) const;
    /// P(X = t).
    double point_mass(double t) const { return cdf(t) - cdf_left(t); }

    /// [inf{t : F(t) >= 1/2}, sup{t : P(X >= t) >= 1/2}].
    Interval median_interval() const;
    double median_mid() const { return median_interval().mid(); }
    /// Midpoint median of |X - median_mid()|.
    double mad() const;

    /// Law of -X.
    ScalarCdf reflected() const;

    /// True when the law has no point masses.
    bool continuous() const;
    /// True when the law is a single atom.
    bool degenerate() const;

    double support_min() const { return knots_.front().x; }
    double support_max() const { return knots_.back().x; }

private:
    explicit ScalarCdf(std::vector<Breakpoint> knots) : knots_(std::move(knots)) {}
    double lower_median() const;

    std::vector<Breakpoint> knots_;
};

/// Read-only view of the law of s_X(u, α).
using LawView = ScalarCdf;

/// Tolerance on probabilities when comparing cumulative mass with 1/2.
inline constexpr double kProbabilityTol = 1e-12;

Interval weighted_median_interval(std::span<const double> values, std::span<const double> weights);
double median_mid(std::span<const double> values, std::span<const double> weights);
double weighted_mad(std::span<const double> values, std::span<const double> weights);

/// Weighted finite collection of fuzzy numbers on one grid: the empirical
/// fuzzy random variable.
class FuzzySample {
public:
    /// Weights must be positive and sum to 1 within 1e-12.
    FuzzySample(std::vector<FuzzyNumber> items, std::vector<double> weights);
    /// Equal weights.
    explicit FuzzySample(std::vector<FuzzyNumber> items);

    const AlphaGrid& grid() const noexcept { return items_.front().grid(); }
    std::span<const FuzzyNumber> items() const noexcept { return items_; }
    std::span<const double> weights() const noexcept { return weights_; }
    std::size_t size() const noexcept { return items_.size(); }

private:
    std::vector<FuzzyNumber> items_;
    std::vector<double> weights_;
};

/// Probability split of a law around a point t.
struct Masses {
    double below;
    double at;
    double above;
    double at_most() const noexcept { return below + at; }
    double at_least() const noexcept { return above + at; }
};

/// Backend for a fuzzy random variable, seen through the univariate laws of
/// its support function at each (u, α).
class LawProvider {
public:
    virtual ~LawProvider() = default;

    virtual LawView law(Direction u, double alpha) const = 0;
    virtual Masses masses(Direction u, double alpha, double t) const = 0;

    /// α in (0,1) where s_A(u, ·) meets a point at which the law of s_X(u, α)
    /// changes mass (a sample item, or a CDF knot of the crisp law).
    virtual std::vector<double> crossing_alphas(const FuzzyNumber& a, Direction u) const = 0;

    /// α in (0,1) where the order structure of s_X(u, ·) itself changes.
    /// Between consecutive structural α and grid levels, every median-interval
    /// endpoint is linear in α.
    virtual std::vector<double> structural_alphas(Direction u) const = 0;

    /// Grid the backend's realisations live on, or nullptr when any grid is
    /// accepted (crisp analytic laws).
    virtual const AlphaGrid* grid() const noexcept = 0;

    /// Almost surely a single fuzzy number.
    virtual bool degenerate() const = 0;
    /// Every s_X(u, α) is a continuous random variable.
    virtual bool continuous() const = 0;
    /// Smallest interval holding every cut of every realisation.
    virtual Interval value_range() const = 0;

    /// Fuzzy realisations, when the backend has them.
    virtual const FuzzySample* sample() const noexcept { return nullptr; }
};

/// Empirical backend over a FuzzySample.
class SampleLaws final : public LawProvider {
public:
    explicit SampleLaws(FuzzySample sample);

    LawView law(Direction u, double alpha) const override;
    Masses masses(Direction u, double alpha, double t) const override;
    std::vector<double> crossing_alphas(const FuzzyNumber& a, Direction u) const override;
    std::vector<double> structural_alphas(Direction u) const override;
    const AlphaGrid* grid() const noexcept override { return &sample_.grid(); }
    bool degenerate() const override { return degenerate_; }
    bool continuous() const override { return false; }
    Interval value_range() const override { return range_; }
    const FuzzySample* sample() const noexcept override { return &sample_; }

private:
    FuzzySample sample_;
    bool degenerate_;
    Interval range_;
    std::vector<double> structural_plus_;
    std::vector<double> structural_minus_;
};

/// Analytic backend for a crisp random variable X, i.e. X = I_{X}: the law
/// of s_X(u, α) = uX does not depend on α.
class CrispLaws final : public LawProvider {
public:
    explicit CrispLaws(ScalarCdf cdf);

    const ScalarCdf& cdf() const noexcept { return cdf_; }

    LawView law(Direction u, double alpha) const override;
    Masses masses(Direction u, double alpha, double t) const override;
    std::vector<double> crossing_alphas(const FuzzyNumber& a, Direction u) const override;
    std::vector<double> structural_alphas(Direction) const override { return {}; }
    const AlphaGrid* grid() const noexcept override { return nullptr; }
    bool degenerate() const override { return cdf_.degenerate(); }
    bool continuous() const override { return cdf_.continuous(); }
    Interval value_range() const override { return {cdf_.support_min(), cdf_.support_max()}; }

private:
    ScalarCdf cdf_;
    ScalarCdf reflected_;
};

/// Discrete law of s_X(u, α) for a sample: atoms s_{item_i}(u, α) with the
/// sample weights, ties merged.
LawView law_of(const FuzzySample& sample, Direction u, double alpha);

/// Law of uX for the crisp variable with CDF `cdf`.
LawView law_of_crisp(const ScalarCdf& cdf, Direction u, double alpha);

/// α in (0,1) where two functions that are linear on each grid cell cross,
/// given their values at the grid levels. Crossings at grid levels are not
/// reported.
void append_cell_crossings(std::span<const double> f, std::span<const double> g,
                           std::vector<double>& out);

}  // namespace fdepth
