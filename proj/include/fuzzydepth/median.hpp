#pragma once

#include <span>
#include <vector>

#include "fuzzydepth/distribution.hpp"
#include "fuzzydepth/fuzzy_number.hpp"

namespace fdepth {

/// Med(s_X(u, α)) for both directions at every grid level.
class MedianBand {
public:
    MedianBand(AlphaGrid grid, std::vector<Interval> plus, std::vector<Interval> minus);

    const AlphaGrid& grid() const noexcept { return grid_; }
    const Interval& at(Direction u, std::size_t level) const {
        return u == Direction::positive ? plus_[level] : minus_[level];
    }

private:
    AlphaGrid grid_;
    std::vector<Interval> plus_;
    std::vector<Interval> minus_;
};

/// Median intervals of s_X(u, α_i) on `grid`. For sample backends `grid` must
/// be the sample grid.
MedianBand support_median_band(const LawProvider& laws, const AlphaGrid& grid);

struct BandViolation {
    Direction u;
    double alpha;
    double value;
    Interval band;
    /// Distance of `value` outside `band`.
    double excess() const noexcept;
};

struct BandCheck {
    bool contained = true;
    std::vector<BandViolation> violations;
};

/// s_A(u, α_i) ∈ [lo - tol, hi + tol] at every grid level and direction.
BandCheck band_contains(const MedianBand& band, const FuzzyNumber& a, double tol = kEqualityTol);

/// Largest distance of s_A(u, α) outside Med(s_X(u, α)) over the continuum
/// α ∈ [0,1]. Exact: between grid levels and structural α both sides are
/// linear, so the worst case sits on one of those points. Returns 0 for a
/// support median.
struct ContinuumCheck {
    double max_excess = 0.0;
    Direction u = Direction::positive;
    double alpha = 0.0;
};
ContinuumCheck support_median_excess(const LawProvider& laws, const FuzzyNumber& a);

/// med_Si: s(u, α) = midpoint median of s_X(u, α) at every grid level.
FuzzyNumber median_si(const LawProvider& laws, const AlphaGrid& grid);

/// med_Gr: α-cuts [lower median of inf X_α, upper median of sup X_α].
FuzzyNumber median_gr(const LawProvider& laws, const AlphaGrid& grid);

/// E[ρ_1(A, X)] for a sample.
double expected_rho1(const FuzzyNumber& a, const FuzzySample& sample);

/// inf over all of F_c(R) of E[ρ_1(U, X)], computed exactly as the integral of
/// the pointwise minimum of E|t - s_X(u, α)| (attained at any median).
double min_expected_rho1(const FuzzySample& sample);

/// inf over (u, α) of the largest halfspace depth any real t reaches for the
/// law of s_X(u, α); the supremum of D_FT over F_c(R).
double tukey_depth_ceiling(const LawProvider& laws, const AlphaGrid& grid);

struct OneMedianResult {
    /// Indices into the pool whose objective is within `slack` of the minimum.
    std::vector<std::size_t> minimizers;
    double minimum = 0.0;
    std::vector<double> objective;
};

/// Exhaustive minimisation of E[ρ_1(U, X)] over a candidate pool.
OneMedianResult brute_force_one_median(const FuzzySample& sample, std::span<const FuzzyNumber> pool,
                                       double slack = 1e-9);

}  // namespace fdepth
