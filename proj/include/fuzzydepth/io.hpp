#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fuzzydepth/certify.hpp"
#include "fuzzydepth/depth.hpp"
#include "fuzzydepth/distribution.hpp"
#include "fuzzydepth/errors.hpp"
#include "fuzzydepth/median.hpp"

namespace fdepth::io {

/// Malformed or invalid input document.
class InputError : public Error {
public:
    using Error::Error;
};

inline constexpr std::size_t kDefaultAlphaLevels = 101;

/// Parsed dataset document: fuzzy numbers on one grid, with weights that are
/// uniform when the document gives none.
struct Dataset {
    AlphaGrid grid{kDefaultAlphaLevels};
    std::vector<FuzzyNumber> items;
    std::vector<double> weights;

    FuzzySample sample() const { return FuzzySample(items, weights); }
};

/// Grid size: `alpha_levels_override`, else the document's `alpha_levels`,
/// else 101.
Dataset parse_dataset(const nlohmann::json& doc, std::optional<std::size_t> alpha_levels_override = {});
Dataset load_dataset(const std::filesystem::path& path,
                     std::optional<std::size_t> alpha_levels_override = {});

ScalarCdf parse_cdf(const nlohmann::json& doc);
ScalarCdf load_cdf(const std::filesystem::path& path);

/// {"kind": "grid", "lower": [...], "upper": [...]}
nlohmann::json to_json(const FuzzyNumber& a);
/// Dataset document holding the given numbers as grid items.
nlohmann::json dataset_document(const std::vector<FuzzyNumber>& items);

nlohmann::json to_json(const DepthReport& r, std::size_t index);
nlohmann::json to_json(const CertificationReport& r);

/// 17 significant digits.
std::string format_double(double v);

/// CSV with header alpha,u_plus_lo,u_plus_hi,u_minus_lo,u_minus_hi.
std::string band_csv(const MedianBand& band);
nlohmann::json band_json(const MedianBand& band);

/// Writes `content` next to `path` and renames it into place.
void write_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace fdepth::io
