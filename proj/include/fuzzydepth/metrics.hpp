#pragma once

#include "fuzzydepth/fuzzy_number.hpp"

namespace fdepth {

/// Order r >= 1 of the L^r-type support-function metric.
class MetricOrder {
public:
    explicit MetricOrder(double r = 1.0);
    double value() const noexcept { return r_; }

private:
    double r_;
};

/// ∫_0^h |d0 + (d1 - d0) s / h|^r ds, split at the sign change of the linear
/// integrand and integrated in closed form.
double abs_power_integral(double d0, double d1, double h, double r);

/// ρ_r(A,B) = ( ½ Σ_u ∫_0^1 |s_A(u,α) - s_B(u,α)|^r dα )^{1/r}, with the two
/// directions of S^0 weighted ½ each. Exact for piecewise-linear support
/// functions.
double rho(const FuzzyNumber& a, const FuzzyNumber& b, MetricOrder r = MetricOrder{1.0});

}  // namespace fdepth
