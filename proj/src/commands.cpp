#include "fuzzydepth/commands.hpp"

#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "fuzzydepth/certify.hpp"
#include "fuzzydepth/depth.hpp"
#include "fuzzydepth/io.hpp"
#include "fuzzydepth/median.hpp"

namespace fdepth::cli {

using nlohmann::json;

namespace {

struct Backend {
    std::unique_ptr<LawProvider> laws;
    AlphaGrid grid{io::kDefaultAlphaLevels};
};

Backend open_backend(const Source& src) {
    if (src.data.has_value() == src.cdf.has_value()) {
        throw io::InputError("exactly one of --data and --cdf is required");
    }
    Backend b;
    if (src.data) {
        const io::Dataset ds = io::load_dataset(*src.data, src.alpha_levels);
        b.grid = ds.grid;
        try {
            b.laws = std::make_unique<SampleLaws>(ds.sample());
        } catch (const Error& e) {
            throw io::InputError(*src.data + ": " + e.what());
        }
    } else {
        b.laws = std::make_unique<CrispLaws>(io::load_cdf(*src.cdf));
        if (src.alpha_levels) b.grid = AlphaGrid(*src.alpha_levels);
    }
    return b;
}

void emit(const std::optional<std::string>& out, const std::string& content, std::ostream& stdout_) {
    if (out) {
        io::write_atomic(*out, content);
    } else {
        stdout_ << content;
    }
}

std::string optional_field(bool has, const std::string& v) { return has ? v : std::string{}; }

template <class Fn>
int guarded(std::ostream& err, Fn&& fn) {
    try {
        return fn();
    } catch (const DegenerateDistribution& e) {
        err << "error: " << e.what() << '\n';
        return precondition_error;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const io::InputError& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const GridMismatch& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const InvalidParameter& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return precondition_error;
    }
}

}  // namespace

int cmd_depth(const DepthArgs& args, std::ostream& stdout_, std::ostream& err) {
    return guarded(err, [&]() -> int {
        const auto method = parse_depth_method(args.method);
        if (!method) throw io::InputError("unknown depth method '" + args.method + "'");
        if (args.format != "json" && args.format != "csv") {
            throw io::InputError("unknown format '" + args.format + "'");
        }
        Backend backend = open_backend(args.source);
        if (*method == DepthMethod::l1 && backend.laws->sample() == nullptr) {
            err << "error: l1 depth needs a --data sample with fuzzy realisations\n";
            return precondition_error;
        }
        if (args.r && *method != DepthMethod::l1) {
            throw io::InputError("--r only applies to the l1 method");
        }
        const MetricOrder r{args.r.value_or(1.0)};
        const std::optional<std::size_t> levels =
            args.source.alpha_levels ? args.source.alpha_levels
                                     : (backend.laws->grid() ? std::optional<std::size_t>(backend.grid.size())
                                                             : std::nullopt);
        const io::Dataset queries = io::load_dataset(args.query, levels);
        if (const AlphaGrid* g = backend.laws->grid(); g != nullptr && !(queries.grid == *g)) {
            throw io::InputError("query grid has " + std::to_string(queries.grid.size()) +
                                 " levels but the data has " + std::to_string(g->size()));
        }
        const auto reports = depth_batch(queries.items, *backend.laws, *method, r, args.threads);
        std::string content;
        if (args.format == "json") {
            json doc{{"method", std::string(to_string(*method))}, {"results", json::array()}};
            for (std::size_t i = 0; i < reports.size(); ++i) doc["results"].push_back(io::to_json(reports[i], i));
            content = doc.dump(2) + "\n";
        } else {
            std::ostringstream os;
            os << "index,method,depth,witness_u,witness_alpha\n";
            for (std::size_t i = 0; i < reports.size(); ++i) {
                const auto& rep = reports[i];
                os << i << ',' << to_string(rep.method) << ',' << io::format_double(rep.value) << ','
                   << optional_field(rep.witness_u.has_value(),
                                     rep.witness_u ? std::to_string(static_cast<int>(*rep.witness_u)) : "")
                   << ','
                   << optional_field(rep.witness_alpha.has_value(),
                                     rep.witness_alpha ? io::format_double(*rep.witness_alpha) : "")
                   << '\n';
            }
            content = os.str();
        }
        emit(args.out, content, stdout_);
        return ok;
    });
}

int cmd_median(const MedianArgs& args, std::ostream& stdout_, std::ostream& err) {
    return guarded(err, [&]() -> int {
        if (args.format != "json" && args.format != "csv") {
            throw io::InputError("unknown format '" + args.format + "'");
        }
        Backend backend = open_backend(args.source);
        std::string content;
        if (args.method == "band") {
            const MedianBand band = support_median_band(*backend.laws, backend.grid);
            content = args.format == "csv" ? io::band_csv(band) : io::band_json(band).dump(2) + "\n";
        } else if (args.method == "si" || args.method == "gr") {
            const FuzzyNumber m = args.method == "si" ? median_si(*backend.laws, backend.grid)
                                                      : median_gr(*backend.laws, backend.grid);
            if (args.format == "json") {
                content = io::dataset_document({m}).dump(2) + "\n";
            } else {
                std::ostringstream os;
                os << "alpha,lower,upper\n";
                for (std::size_t i = 0; i < m.grid().size(); ++i) {
                    os << io::format_double(m.grid().level(i)) << ',' << io::format_double(m.lower()[i]) << ','
                       << io::format_double(m.upper()[i]) << '\n';
                }
                content = os.str();
            }
        } else {
            throw io::InputError("unknown median method '" + args.method + "' (band, si, gr)");
        }
        emit(args.out, content, stdout_);
        return ok;
    });
}

int cmd_verify(const VerifyArgs& args, std::ostream& stdout_, std::ostream& err) {
    return guarded(err, [&]() -> int {
        if (args.trials < 1) throw io::InputError("--trials must be at least 1");
        Backend backend = open_backend(args.source);
        const CertificationReport report =
            certify_theorems(*backend.laws, args.trials, args.seed, &backend.grid, args.threads);
        emit(args.out, io::to_json(report).dump(2) + "\n", stdout_);
        for (const auto& p : report.properties) {
            err << to_string(p.status) << "  " << p.name << ": " << p.detail << '\n';
        }
        return report.passed() ? ok : property_failure;
    });
}

int run(int argc, const char* const* argv, std::ostream& stdout_, std::ostream& err) {
    CLI::App app{"Depth functions and medians for fuzzy-number data"};
    app.require_subcommand(1);

    auto add_source = [](CLI::App* sub, Source& src) {
        sub->add_option("--data", src.data, "Dataset document (JSON)");
        sub->add_option("--cdf", src.cdf, "Piecewise-linear CDF document (JSON)");
        sub->add_option("--alpha-levels", src.alpha_levels, "Number of alpha levels (M + 1)")
            ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 24));
    };

    DepthArgs depth_args;
    auto* depth = app.add_subcommand("depth", "Depth of each query fuzzy number");
    add_source(depth, depth_args.source);
    depth->add_option("--query", depth_args.query, "Query document (dataset format)")->required();
    depth->add_option("--method", depth_args.method, "l1, tukey, projection, msimplicial, fsimplicial")
        ->required();
    depth->add_option("--r", depth_args.r, "Metric order for l1 (r >= 1)");
    depth->add_option("--out", depth_args.out, "Output path (stdout when omitted)");
    depth->add_option("--format", depth_args.format, "json or csv");
    depth->add_option("--threads", depth_args.threads, "Worker threads (0 = all cores)");

    MedianArgs median_args;
    auto* median = app.add_subcommand("median", "Median band or named medians");
    add_source(median, median_args.source);
    median->add_option("--method", median_args.method, "band, si or gr");
    median->add_option("--out", median_args.out, "Output path (stdout when omitted)");
    median->add_option("--format", median_args.format, "json or csv");

    MedianArgs band_args;
    band_args.format = "csv";
    auto* band = app.add_subcommand("band", "Median band as CSV (median --method band)");
    add_source(band, band_args.source);
    band->add_option("--out", band_args.out, "Output path (stdout when omitted)");
    band->add_option("--format", band_args.format, "csv or json");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Certify the median/depth equivalences");
    add_source(verify, verify_args.source);
    verify->add_option("--trials", verify_args.trials, "Random candidates to test");
    verify->add_option("--seed", verify_args.seed, "Random seed");
    verify->add_option("--out", verify_args.out, "Report path (stdout when omitted)");
    verify->add_option("--threads", verify_args.threads, "Worker threads (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        stdout_ << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }

    if (depth->parsed()) return cmd_depth(depth_args, stdout_, err);
    if (median->parsed()) return cmd_median(median_args, stdout_, err);
    if (band->parsed()) {
        band_args.method = "band";
        return cmd_median(band_args, stdout_, err);
    }
    return cmd_verify(verify_args, stdout_, err);
}

}  // namespace fdepth::cli
