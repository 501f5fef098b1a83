#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fuzzydepth/distribution.hpp"
#include "fuzzydepth/fuzzy_number.hpp"

namespace fdepth::testing {

inline std::string fixture(const std::string& name) { return std::string(FUZZYDEPTH_TEST_DATA) + "/" + name; }

// Random trapezoid T(a,b,c,d). With `lattice`, corners are integers and
// spreads lie in {0,1,2}: any two such support functions cross at α in
// {0, 1/2, 1}, so on an even grid every kink of the median band is a level.
inline FuzzyNumber random_trapezoid(std::mt19937_64& rng, const AlphaGrid& grid, bool lattice = false) {
    std::uniform_real_distribution<double> pos(0.0, 10.0);
    std::uniform_real_distribution<double> spread(0.0, 3.0);
    std::uniform_int_distribution<int> ipos(0, 10);
    std::uniform_int_distribution<int> ispread(0, 2);
    if (lattice) {
        const double b = ipos(rng);
        const double c = b + ispread(rng);
        return make_trapezoidal(b - ispread(rng), b, c, c + ispread(rng), grid);
    }
    const double b = pos(rng);
    const double c = b + spread(rng);
    return make_trapezoidal(b - spread(rng), b, c, c + spread(rng), grid);
}

inline FuzzySample random_sample(std::mt19937_64& rng, const AlphaGrid& grid, std::size_t min_items,
                                 std::size_t max_items, bool lattice = false) {
    std::uniform_int_distribution<std::size_t> count(min_items, max_items);
    const std::size_t n = count(rng);
    std::vector<FuzzyNumber> items;
    for (std::size_t i = 0; i < n; ++i) items.push_back(random_trapezoid(rng, grid, lattice));
    return FuzzySample(std::move(items));
}

// Random fuzzy number with arbitrary (non-linear) endpoint arrays.
inline FuzzyNumber random_grid_number(std::mt19937_64& rng, const AlphaGrid& grid) {
    std::uniform_real_distribution<double> step(0.0, 0.3);
    std::uniform_real_distribution<double> centre(-5.0, 5.0);
    std::vector<double> lower(grid.size());
    std::vector<double> upper(grid.size());
    const std::size_t top = grid.size() - 1;
    lower[top] = centre(rng);
    upper[top] = lower[top] + step(rng);
    for (std::size_t k = top; k-- > 0;) {
        lower[k] = lower[k + 1] - step(rng);
        upper[k] = upper[k + 1] + step(rng);
    }
    return validate(std::move(lower), std::move(upper), grid);
}

// Left Riemann-type midpoint rule for ∫_0^1 |s_A - s_B|^r over both directions.
inline double rho_riemann(const FuzzyNumber& a, const FuzzyNumber& b, double r, std::size_t points) {
    double total = 0.0;
    for (Direction u : kDirections) {
        double sum = 0.0;
        for (std::size_t k = 0; k < points; ++k) {
            const double alpha = (static_cast<double>(k) + 0.5) / static_cast<double>(points);
            sum += std::pow(std::abs(support_value(a, u, alpha) - support_value(b, u, alpha)), r);
        }
        total += 0.5 * sum / static_cast<double>(points);
    }
    return std::pow(total, 1.0 / r);
}

}  // namespace fdepth::testing
