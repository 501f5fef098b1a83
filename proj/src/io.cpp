#include "fuzzydepth/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace fdepth::io {

using nlohmann::json;

namespace {

json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw InputError(path.string() + ": malformed JSON: " + e.what());
    }
}

std::vector<double> numbers(const json& v, const std::string& where) {
    if (!v.is_array()) throw InputError(where + " must be an array of numbers");
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& x : v) {
        if (!x.is_number()) throw InputError(where + " must contain only numbers");
        out.push_back(x.get<double>());
    }
    return out;
}

std::vector<double> parameters(const json& item, std::size_t count, const std::string& where) {
    if (!item.contains("parameters")) throw InputError(where + ": missing \"parameters\"");
    auto p = numbers(item.at("parameters"), where + ".parameters");
    if (p.size() != count) {
        throw InputError(where + ": expected " + std::to_string(count) + " parameters, got " +
                         std::to_string(p.size()));
    }
    return p;
}

FuzzyNumber parse_item(const json& item, const AlphaGrid& grid, const std::string& where) {
    if (!item.is_object() || !item.contains("kind") || !item.at("kind").is_string()) {
        throw InputError(where + ": item needs a string \"kind\"");
    }
    const std::string kind = item.at("kind").get<std::string>();
    const std::string label = where + " (" + kind + ")";
    try {
        if (kind == "triangular") {
            const auto p = parameters(item, 3, label);
            return make_triangular(p[0], p[1], p[2], grid);
        }
        if (kind == "trapezoidal") {
            const auto p = parameters(item, 4, label);
            return make_trapezoidal(p[0], p[1], p[2], p[3], grid);
        }
        if (kind == "crisp_point") {
            const auto p = parameters(item, 1, label);
            return make_crisp_point(p[0], grid);
        }
        if (kind == "crisp_interval") {
            const auto p = parameters(item, 2, label);
            return make_crisp_interval(p[0], p[1], grid);
        }
        if (kind == "grid") {
            if (!item.contains("lower") || !item.contains("upper")) {
                throw InputError(label + ": grid item needs \"lower\" and \"upper\"");
            }
            return validate(numbers(item.at("lower"), label + ".lower"),
                            numbers(item.at("upper"), label + ".upper"), grid);
        }
    } catch (const InputError&) {
        throw;
    } catch (const Error& e) {
        throw InputError(label + ": " + e.what());
    }
    throw InputError(label + ": unknown kind");
}

}  // namespace

Dataset parse_dataset(const json& doc, std::optional<std::size_t> alpha_levels_override) {
    if (!doc.is_object()) throw InputError("dataset must be a JSON object");
    std::size_t levels = kDefaultAlphaLevels;
    if (alpha_levels_override) {
        levels = *alpha_levels_override;
    } else if (doc.contains("alpha_levels")) {
        const auto& v = doc.at("alpha_levels");
        if (!v.is_number_integer() || v.get<long long>() < 2) {
            throw InputError("alpha_levels must be an integer >= 2");
        }
        levels = v.get<std::size_t>();
    }
    if (levels < 2) throw InputError("alpha_levels must be an integer >= 2");
    if (!doc.contains("items") || !doc.at("items").is_array() || doc.at("items").empty()) {
        throw InputError("dataset needs a non-empty \"items\" array");
    }
    Dataset ds;
    ds.grid = AlphaGrid(levels);
    const auto& items = doc.at("items");
    std::size_t weighted = 0;
    for (std::size_t i = 0; i < items.size(); ++i) {
        const std::string where = "item " + std::to_string(i);
        ds.items.push_back(parse_item(items[i], ds.grid, where));
        if (items[i].contains("weight")) {
            const auto& w = items[i].at("weight");
            if (!w.is_number() || !(w.get<double>() > 0.0)) {
                throw InputError(where + ": weight must be a positive number");
            }
            ds.weights.push_back(w.get<double>());
            ++weighted;
        }
    }
    if (weighted == 0) {
        ds.weights.assign(ds.items.size(), 1.0 / static_cast<double>(ds.items.size()));
    } else if (weighted != ds.items.size()) {
        throw InputError("either every item or no item may carry a weight");
    } else {
        double total = 0.0;
        for (double w : ds.weights) total += w;
        if (std::abs(total - 1.0) > kEqualityTol) {
            throw InputError("item weights sum to " + format_double(total) + ", expected 1");
        }
    }
    return ds;
}

Dataset load_dataset(const std::filesystem::path& path, std::optional<std::size_t> alpha_levels_override) {
    try {
        return parse_dataset(read_json(path), alpha_levels_override);
    } catch (const InputError& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

ScalarCdf parse_cdf(const json& doc) {
    if (!doc.is_object() || doc.value("kind", std::string{}) != "piecewise_linear_cdf") {
        throw InputError("cdf document needs \"kind\": \"piecewise_linear_cdf\"");
    }
    if (!doc.contains("breakpoints") || !doc.at("breakpoints").is_array()) {
        throw InputError("cdf document needs a \"breakpoints\" array");
    }
    std::vector<Breakpoint> knots;
    for (const auto& b : doc.at("breakpoints")) {
        if (!b.is_object() || !b.contains("x") || !b.contains("F_left") || !b.contains("F_right")) {
            throw InputError("each breakpoint needs x, F_left and F_right");
        }
        knots.push_back({b.at("x").get<double>(), b.at("F_left").get<double>(), b.at("F_right").get<double>()});
    }
    try {
        return ScalarCdf::from_breakpoints(std::move(knots));
    } catch (const Error& e) {
        throw InputError(e.what());
    }
}

ScalarCdf load_cdf(const std::filesystem::path& path) {
    try {
        return parse_cdf(read_json(path));
    } catch (const InputError& e) {
        throw InputError(path.string() + ": " + e.what());
    } catch (const json::exception& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

json to_json(const FuzzyNumber& a) {
    return json{{"kind", "grid"},
                {"lower", std::vector<double>(a.lower().begin(), a.lower().end())},
                {"upper", std::vector<double>(a.upper().begin(), a.upper().end())}};
}

json dataset_document(const std::vector<FuzzyNumber>& items) {
    json doc;
    doc["alpha_levels"] = items.empty() ? kDefaultAlphaLevels : items.front().grid().size();
    doc["items"] = json::array();
    for (const auto& a : items) doc["items"].push_back(to_json(a));
    return doc;
}

json to_json(const DepthReport& r, std::size_t index) {
    json j{{"index", index}, {"method", std::string(to_string(r.method))}, {"depth", r.value}};
    j["witness_u"] = r.witness_u ? json(static_cast<int>(*r.witness_u)) : json(nullptr);
    j["witness_alpha"] = r.witness_alpha ? json(*r.witness_alpha) : json(nullptr);
    return j;
}

json to_json(const CertificationReport& r) {
    json j{{"backend", r.backend},
           {"trials", r.trials},
           {"seed", r.seed},
           {"passed", r.passed()},
           {"pool", {{"members", r.members}, {"outside", r.outside}, {"discarded", r.discarded}}}};
    j["properties"] = json::array();
    for (const auto& p : r.properties) {
        json e{{"name", p.name},
               {"statement", p.statement},
               {"status", std::string(to_string(p.status))},
               {"detail", p.detail}};
        e["counterexample"] = p.counterexample ? to_json(*p.counterexample) : json(nullptr);
        j["properties"].push_back(std::move(e));
    }
    return j;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string band_csv(const MedianBand& band) {
    std::ostringstream os;
    os << "alpha,u_plus_lo,u_plus_hi,u_minus_lo,u_minus_hi\n";
    for (std::size_t i = 0; i < band.grid().size(); ++i) {
        const Interval& p = band.at(Direction::positive, i);
        const Interval& m = band.at(Direction::negative, i);
        os << format_double(band.grid().level(i)) << ',' << format_double(p.lo) << ','
           << format_double(p.hi) << ',' << format_double(m.lo) << ',' << format_double(m.hi) << '\n';
    }
    return os.str();
}

json band_json(const MedianBand& band) {
    json rows = json::array();
    for (std::size_t i = 0; i < band.grid().size(); ++i) {
        const Interval& p = band.at(Direction::positive, i);
        const Interval& m = band.at(Direction::negative, i);
        rows.push_back({{"alpha", band.grid().level(i)},
                        {"u_plus_lo", p.lo},
                        {"u_plus_hi", p.hi},
                        {"u_minus_lo", m.lo},
                        {"u_minus_hi", m.hi}});
    }
    return json{{"alpha_levels", band.grid().size()}, {"band", rows}};
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
    auto tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw InputError("cannot write " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw InputError("failed writing " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw InputError("cannot move output into place at " + path.string() + ": " + ec.message());
    }
}

}  // namespace fdepth::io
