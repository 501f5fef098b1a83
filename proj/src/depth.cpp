#include "fuzzydepth/depth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fuzzydepth/errors.hpp"
#include "fuzzydepth/parallel.hpp"

namespace fdepth {

std::string_view to_string(DepthMethod m) noexcept {
    switch (m) {
        case DepthMethod::l1: return "l1";
        case DepthMethod::tukey: return "tukey";
        case DepthMethod::projection: return "projection";
        case DepthMethod::modified_simplicial: return "msimplicial";
        case DepthMethod::fuzzy_simplicial: return "fsimplicial";
    }
    return "unknown";
}

std::optional<DepthMethod> parse_depth_method(std::string_view name) noexcept {
    for (auto m : {DepthMethod::l1, DepthMethod::tukey, DepthMethod::projection,
                   DepthMethod::modified_simplicial, DepthMethod::fuzzy_simplicial}) {
        if (to_string(m) == name) return m;
    }
    return std::nullopt;
}

namespace {

void check_grid(const FuzzyNumber& a, const LawProvider& laws) {
    if (const AlphaGrid* g = laws.grid()) require_same_grid(a.grid(), *g);
}

// Critical set plus the midpoint of every gap.
std::vector<double> probe_alphas(const std::vector<double>& critical) {
    std::vector<double> out;
    out.reserve(2 * critical.size());
    for (std::size_t i = 0; i < critical.size(); ++i) {
        if (i > 0) out.push_back(0.5 * (critical[i - 1] + critical[i]));
        out.push_back(critical[i]);
    }
    return out;
}

}  // namespace

std::vector<double> critical_alpha_set(const FuzzyNumber& a, const LawProvider& laws, Direction u) {
    check_grid(a, laws);
    std::vector<double> out = a.grid().levels();
    const auto cross = laws.crossing_alphas(a, u);
    out.insert(out.end(), cross.begin(), cross.end());
    std::sort(out.begin(), out.end());
    std::vector<double> unique;
    unique.reserve(out.size());
    for (double v : out) {
        v = std::clamp(v, 0.0, 1.0);
        if (unique.empty() || v - unique.back() > 1e-15) unique.push_back(v);
    }
    unique.back() = 1.0;
    return unique;
}

DepthReport depth_l1(const FuzzyNumber& a, const FuzzySample& sample, MetricOrder r) {
    require_same_grid(a.grid(), sample.grid());
    double expected = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        expected += sample.weights()[i] * rho(a, sample.items()[i], r);
    }
    DepthReport rep;
    rep.method = DepthMethod::l1;
    rep.value = std::isfinite(expected) ? 1.0 / (1.0 + expected) : 0.0;
    return rep;
}

DepthReport depth_tukey(const FuzzyNumber& a, const LawProvider& laws) {
    DepthReport rep;
    rep.method = DepthMethod::tukey;
    rep.value = std::numeric_limits<double>::infinity();
    for (Direction u : kDirections) {
        for (double alpha : probe_alphas(critical_alpha_set(a, laws, u))) {
            const auto m = laws.masses(u, alpha, support_value(a, u, alpha));
            const double v = std::min(m.at_most(), m.at_least());
            if (v < rep.value) {
                rep.value = v;
                rep.witness_u = u;
                rep.witness_alpha = alpha;
            }
        }
    }
    rep.value = std::clamp(rep.value, 0.0, 1.0);
    return rep;
}

DepthReport depth_projection(const FuzzyNumber& a, const LawProvider& laws) {
    if (laws.degenerate()) {
        throw DegenerateDistribution("projection depth needs a non-degenerate distribution");
    }
    DepthReport rep;
    rep.method = DepthMethod::projection;
    double outlyingness = -1.0;
    for (Direction u : kDirections) {
        for (double alpha : probe_alphas(critical_alpha_set(a, laws, u))) {
            const LawView law = laws.law(u, alpha);
            const double med = law.median_mid();
            const double mad = law.mad();
            const double diff = std::abs(support_value(a, u, alpha) - med);
            const double scale = kEqualityTol * std::max(1.0, std::abs(med));
            double ratio;
            if (mad > scale) {
                ratio = diff / mad;
            } else {
                ratio = diff > scale ? std::numeric_limits<double>::infinity() : 0.0;
            }
            if (ratio > outlyingness) {
                outlyingness = ratio;
                rep.witness_u = u;
                rep.witness_alpha = alpha;
            }
        }
    }
    rep.value = std::isinf(outlyingness) ? 0.0 : 1.0 / (1.0 + outlyingness);
    return rep;
}

double simplicial_integral(const FuzzyNumber& a, const LawProvider& laws, Direction u) {
    // Between critical α the integrand is constant (discrete laws) or a
    // quadratic in α (piecewise-linear CDF composed with a linear s_A), so
    // two-point Gauss-Legendre is exact on each piece.
    static const double node = 0.5 / std::sqrt(3.0);
    auto integrand = [&](double alpha) {
        const auto m = laws.masses(u, alpha, support_value(a, u, alpha));
        const double f = m.at_most();
        const double below = f - m.at;
        return 1.0 - (1.0 - f) * (1.0 - f) - below * below;
    };
    const auto crit = critical_alpha_set(a, laws, u);
    double total = 0.0;
    for (std::size_t i = 1; i < crit.size(); ++i) {
        const double lo = crit[i - 1];
        const double hi = crit[i];
        const double w = hi - lo;
        if (w <= 0.0) continue;
        const double mid = 0.5 * (lo + hi);
        total += 0.5 * w * (integrand(mid - node * w) + integrand(mid + node * w));
    }
    return std::clamp(total, 0.0, 1.0);
}

DepthReport depth_simplicial(const FuzzyNumber& a, const LawProvider& laws, SimplicialVariant variant) {
    const double plus = simplicial_integral(a, laws, Direction::positive);
    const double minus = simplicial_integral(a, laws, Direction::negative);
    DepthReport rep;
    if (variant == SimplicialVariant::modified) {
        rep.method = DepthMethod::modified_simplicial;
        rep.value = 0.5 * (plus + minus);
    } else {
        rep.method = DepthMethod::fuzzy_simplicial;
        rep.value = std::min(plus, minus);
        rep.witness_u = minus < plus ? Direction::negative : Direction::positive;
    }
    return rep;
}

DepthReport depth(const FuzzyNumber& a, const LawProvider& laws, DepthMethod method, MetricOrder r) {
    switch (method) {
        case DepthMethod::l1: {
            const FuzzySample* sample = laws.sample();
            if (sample == nullptr) {
                throw InvalidParameter("l1 depth needs a sample backend with fuzzy realisations");
            }
            return depth_l1(a, *sample, r);
        }
        case DepthMethod::tukey: return depth_tukey(a, laws);
        case DepthMethod::projection: return depth_projection(a, laws);
        case DepthMethod::modified_simplicial:
            return depth_simplicial(a, laws, SimplicialVariant::modified);
        case DepthMethod::fuzzy_simplicial:
            return depth_simplicial(a, laws, SimplicialVariant::fuzzy);
    }
    throw InvalidParameter("unknown depth method");
}

std::vector<DepthReport> depth_batch(std::span<const FuzzyNumber> queries, const LawProvider& laws,
                                     DepthMethod method, MetricOrder r, unsigned threads) {
    std::vector<DepthReport> out(queries.size());
    parallel_for(
        queries.size(), [&](std::size_t i) { out[i] = depth(queries[i], laws, method, r); }, threads);
    return out;
}

}  // namespace fdepth
