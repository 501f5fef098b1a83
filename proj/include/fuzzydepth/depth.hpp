#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fuzzydepth/distribution.hpp"
#include "fuzzydepth/fuzzy_number.hpp"
#include "fuzzydepth/metrics.hpp"

namespace fdepth {

enum class DepthMethod { l1, tukey, projection, modified_simplicial, fuzzy_simplicial };

/// CLI spelling: l1, tukey, projection, msimplicial, fsimplicial.
std::string_view to_string(DepthMethod m) noexcept;
std::optional<DepthMethod> parse_depth_method(std::string_view name) noexcept;

/// Depth value with the (u, α) attaining the defining inf/sup, when one exists.
struct DepthReport {
    double value = 0.0;
    DepthMethod method = DepthMethod::l1;
    std::optional<Direction> witness_u;
    std::optional<double> witness_alpha;
};

/// Sorted α values in [0,1]: the grid levels of `a` plus every crossing of
/// s_A(u, ·) with the backend's mass points. Between consecutive entries the
/// relative order of s_A(u, α) and the law's mass points is constant.
std::vector<double> critical_alpha_set(const FuzzyNumber& a, const LawProvider& laws, Direction u);

/// D_r(A; X) = 1 / (1 + E[ρ_r(A, X)]).
DepthReport depth_l1(const FuzzyNumber& a, const FuzzySample& sample, MetricOrder r = MetricOrder{1.0});

/// inf over (u, α) of min(P(s_X <= s_A), P(s_X >= s_A)).
DepthReport depth_tukey(const FuzzyNumber& a, const LawProvider& laws);

/// 1 / (1 + O(A; X)), O = sup |s_A - med| / MAD. Conventions: 0/0 -> 0,
/// x/0 -> +inf. Throws DegenerateDistribution when X is a.s. constant.
DepthReport depth_projection(const FuzzyNumber& a, const LawProvider& laws);

enum class SimplicialVariant { modified, fuzzy };

/// Modified (average over u) or fuzzy (min over u) simplicial depth, with the
/// integrand 1 - (1 - F)^2 - (F - P(s_X = s_A))^2 integrated over α.
DepthReport depth_simplicial(const FuzzyNumber& a, const LawProvider& laws, SimplicialVariant variant);

/// Per-direction integral ∫_0^1 P(s_A(u,α) ∈ [min, max] of two copies) dα.
double simplicial_integral(const FuzzyNumber& a, const LawProvider& laws, Direction u);

/// Dispatch by method. `l1` requires a backend with fuzzy realisations.
DepthReport depth(const FuzzyNumber& a, const LawProvider& laws, DepthMethod method,
                  MetricOrder r = MetricOrder{1.0});

/// Evaluates every query, possibly concurrently; results keep query order.
/// `threads == 0` picks the hardware concurrency.
std::vector<DepthReport> depth_batch(std::span<const FuzzyNumber> queries, const LawProvider& laws,
                                     DepthMethod method, MetricOrder r = MetricOrder{1.0},
                                     unsigned threads = 0);

}  // namespace fdepth
