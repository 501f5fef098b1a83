#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzydepth/distribution.hpp"
#include "fuzzydepth/fuzzy_number.hpp"

namespace fdepth {

enum class PropertyStatus { pass, fail, skipped, documented_exception };

std::string_view to_string(PropertyStatus s) noexcept;

struct PropertyResult {
    std::string name;
    /// The statement being checked, in words.
    std::string statement;
    PropertyStatus status = PropertyStatus::pass;
    std::string detail;
    std::optional<FuzzyNumber> counterexample;
};

struct CertificationReport {
    std::string backend;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::size_t members = 0;
    std::size_t outside = 0;
    std::size_t discarded = 0;
    std::vector<PropertyResult> properties;

    /// True when no property failed.
    bool passed() const;
    const PropertyResult* find(std::string_view name) const;
};

/// Numerically certifies the median/depth equivalences on a seeded candidate
/// pool of `trials` random draws plus the deterministic band candidates.
///
/// Properties (names as reported):
///   named_medians_in_band          med_Si and med_Gr lie in the median band
///   one_median_is_support_median   members reach inf E[ρ_1]; outsiders exceed it
///   tukey_median_is_support_median members share the top D_FT; outsiders fall below
///   projection_median_is_sinova    med_Si is the unique D_FP maximiser (value 1)
///   unique_median_collapse         with unique medians: band = {med_Si} = {med_Gr}
///   simplicial_median_is_support_median
///                                  continuous laws: the median maximises D_mS, D_FS;
///                                  laws with atoms: reports a better-scoring point
///                                  as a documented exception
///   cuts_within_grzegorzewski      every member's cuts sit inside med_Gr's cuts
///
/// `grid` is required for backends without their own grid. Candidate
/// evaluation may run on `threads` workers; the report does not depend on it.
CertificationReport certify_theorems(const LawProvider& laws, std::size_t trials, std::uint64_t seed,
                                     const AlphaGrid* grid = nullptr, unsigned threads = 0);

}  // namespace fdepth
