#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace fdepth {

/// Tolerance used for equality of grid arrays and for tie detection.
inline constexpr double kEqualityTol = 1e-12;

/// Direction u on the unit sphere S^0 = {-1, +1}.
enum class Direction : int { negative = -1, positive = 1 };

inline constexpr std::array<Direction, 2> kDirections{Direction::positive, Direction::negative};

constexpr double sign(Direction u) noexcept { return static_cast<int>(u) > 0 ? 1.0 : -1.0; }

/// Uniform grid of α levels i/M, i = 0..M.
class AlphaGrid {
public:
    /// `level_count` is M + 1 and must be at least 2.
    explicit AlphaGrid(std::size_t level_count);

    std::size_t size() const noexcept { return level_count_; }
    std::size_t intervals() const noexcept { return level_count_ - 1; }
    double level(std::size_t i) const noexcept {
        return static_cast<double>(i) / static_cast<double>(intervals());
    }
    std::vector<double> levels() const;

    /// Cell index k and fractional offset t in [0,1] with α = (k + t)/M.
    /// Snaps to an exact grid level (t == 0, or k == M-1 with t == 1) when α is
    /// within rounding of one.
    struct Position {
        std::size_t cell;
        double offset;
        bool on_level;
        std::size_t level;
    };
    Position locate(double alpha) const;

    friend bool operator==(const AlphaGrid&, const AlphaGrid&) = default;

private:
    std::size_t level_count_;
};

/// Fuzzy number with compact convex α-cuts, stored as cut endpoints on an
/// α-grid and interpolated linearly in α between levels.
///
/// Invariants (enforced by `validate`): all values finite, `lower`
/// nondecreasing, `upper` nonincreasing, `lower[i] <= upper[i]`.
class FuzzyNumber {
public:
    const AlphaGrid& grid() const noexcept { return grid_; }
    std::span<const double> lower() const noexcept { return lower_; }
    std::span<const double> upper() const noexcept { return upper_; }

    /// s_A(u, α) at grid level i; exact copy of the stored endpoint.
    double support_at(Direction u, std::size_t i) const noexcept {
        return u == Direction::positive ? upper_[i] : -lower_[i];
    }

    /// Componentwise equality of both arrays within `tol`.
    bool approx_equal(const FuzzyNumber& other, double tol = kEqualityTol) const;

    friend FuzzyNumber validate(std::vector<double> lower, std::vector<double> upper,
                                const AlphaGrid& grid);

private:
    FuzzyNumber(AlphaGrid grid, std::vector<double> lower, std::vector<double> upper)
        : grid_(grid), lower_(std::move(lower)), upper_(std::move(upper)) {}

    AlphaGrid grid_;
    std::vector<double> lower_;
    std::vector<double> upper_;
};

/// Builds a FuzzyNumber from raw endpoint arrays, throwing ValidationError
/// ("not compact", "not nested", "empty cut") or InvalidParameter on a length
/// mismatch.
FuzzyNumber validate(std::vector<double> lower, std::vector<double> upper, const AlphaGrid& grid);

FuzzyNumber make_triangular(double a, double b, double c, const AlphaGrid& grid);
FuzzyNumber make_trapezoidal(double a, double b, double c, double d, const AlphaGrid& grid);
FuzzyNumber make_crisp_point(double x, const AlphaGrid& grid);
FuzzyNumber make_crisp_interval(double lo, double hi, const AlphaGrid& grid);

/// s_A(u, α) for α in [0,1], piecewise-linear between grid levels. Throws
/// DomainError outside [0,1].
double support_value(const FuzzyNumber& a, Direction u, double alpha);

/// Levelwise convex combination λ·A + (1-λ)·B.
FuzzyNumber blend(const FuzzyNumber& a, const FuzzyNumber& b, double lambda);

/// Adds the crisp constant `shift` to every cut.
FuzzyNumber translate(const FuzzyNumber& a, double shift);

void require_same_grid(const AlphaGrid& a, const AlphaGrid& b);

}  // namespace fdepth
