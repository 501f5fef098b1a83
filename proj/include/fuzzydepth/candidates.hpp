#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "fuzzydepth/distribution.hpp"
#include "fuzzydepth/median.hpp"

namespace fdepth {

enum class CandidateOrigin {
    sinova,
    grzegorzewski,
    band_corner,
    in_band,
    band_blend,
    envelope,
    crisp_point,
    pushed_out,
    pushed_in,
    translated,
};

std::string_view to_string(CandidateOrigin o) noexcept;

enum class Membership { member, outside, ambiguous };

struct Candidate {
    FuzzyNumber number;
    CandidateOrigin origin;
    /// Largest distance outside the support-median band over α ∈ [0,1].
    double excess;
    Membership membership;
};

/// Seeded source of test candidates for median and depth comparisons.
///
/// Members satisfy `excess <= member_tol`; outsiders have
/// `excess >= outside_margin`, which is 1e-3 of the data range. Anything in
/// between is `ambiguous` and left out of pools.
class CandidateGenerator {
public:
    CandidateGenerator(const LawProvider& laws, const AlphaGrid& grid, std::uint64_t seed);

    const MedianBand& band() const noexcept { return band_; }
    double data_range() const noexcept { return range_; }
    double member_tol() const noexcept { return member_tol_; }
    double outside_margin() const noexcept { return outside_margin_; }

    Candidate classify(FuzzyNumber a, CandidateOrigin origin) const;

    /// med_Si, med_Gr and the valid combinations of band endpoints.
    std::vector<Candidate> deterministic() const;

    /// One random candidate; kinds rotate with the call count.
    Candidate next();

    /// Deterministic candidates followed by `budget` random draws, with
    /// ambiguous ones dropped.
    std::vector<Candidate> pool(std::size_t budget);

private:
    FuzzyNumber random_in_band();
    FuzzyNumber random_envelope();
    FuzzyNumber pushed(bool outward);
    double uniform(double lo, double hi);

    const LawProvider& laws_;
    AlphaGrid grid_;
    MedianBand band_;
    Interval values_;
    double range_;
    double member_tol_;
    double outside_margin_;
    std::mt19937_64 rng_;
    std::size_t calls_ = 0;
};

/// Result of the brute-force 1-median search over a generated pool.
struct OneMedianSearch {
    std::vector<Candidate> pool;
    OneMedianResult result;
};

OneMedianSearch brute_force_one_median(const FuzzySample& sample, CandidateGenerator& generator,
                                       std::size_t budget, double slack = 1e-9);

}  // namespace fdepth
