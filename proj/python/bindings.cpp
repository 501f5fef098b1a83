#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "fuzzydepth/certify.hpp"
#include "fuzzydepth/depth.hpp"
#include "fuzzydepth/distribution.hpp"
#include "fuzzydepth/errors.hpp"
#include "fuzzydepth/fuzzy_number.hpp"
#include "fuzzydepth/median.hpp"
#include "fuzzydepth/metrics.hpp"

namespace py = pybind11;
using namespace fdepth;

namespace {

Direction direction(int u) {
    if (u == 1) return Direction::positive;
    if (u == -1) return Direction::negative;
    throw InvalidParameter("direction must be +1 or -1");
}

DepthMethod method(const std::string& name) {
    const auto m = parse_depth_method(name);
    if (!m) throw InvalidParameter("unknown depth method '" + name + "'");
    return *m;
}

py::dict report_dict(const DepthReport& r) {
    py::dict d;
    d["value"] = r.value;
    d["method"] = std::string(to_string(r.method));
    d["witness_u"] = r.witness_u ? py::object(py::int_(static_cast<int>(*r.witness_u))) : py::none();
    d["witness_alpha"] = r.witness_alpha ? py::object(py::float_(*r.witness_alpha)) : py::none();
    return d;
}

py::list band_rows(const MedianBand& band) {
    py::list rows;
    for (std::size_t i = 0; i < band.grid().size(); ++i) {
        const auto& p = band.at(Direction::positive, i);
        const auto& m = band.at(Direction::negative, i);
        py::dict row;
        row["alpha"] = band.grid().level(i);
        row["u_plus"] = py::make_tuple(p.lo, p.hi);
        row["u_minus"] = py::make_tuple(m.lo, m.hi);
        rows.append(row);
    }
    return rows;
}

py::dict certification_dict(const CertificationReport& r) {
    py::dict d;
    d["backend"] = r.backend;
    d["trials"] = r.trials;
    d["seed"] = r.seed;
    d["passed"] = r.passed();
    d["members"] = r.members;
    d["outside"] = r.outside;
    d["discarded"] = r.discarded;
    py::list props;
    for (const auto& p : r.properties) {
        py::dict e;
        e["name"] = p.name;
        e["statement"] = p.statement;
        e["status"] = std::string(to_string(p.status));
        e["detail"] = p.detail;
        e["counterexample"] = p.counterexample ? py::cast(*p.counterexample) : py::none();
        props.append(e);
    }
    d["properties"] = props;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Depth functions and medians for fuzzy-number data";

    py::register_exception<Error>(m, "FuzzyDepthError", PyExc_ValueError);

    py::class_<AlphaGrid>(m, "AlphaGrid")
        .def(py::init<std::size_t>(), py::arg("levels"))
        .def_property_readonly("size", &AlphaGrid::size)
        .def("levels", &AlphaGrid::levels)
        .def("__eq__", [](const AlphaGrid& a, const AlphaGrid& b) { return a == b; })
        .def("__repr__", [](const AlphaGrid& g) { return "AlphaGrid(" + std::to_string(g.size()) + ")"; });

    py::class_<FuzzyNumber>(m, "FuzzyNumber")
        .def_static(
            "from_arrays",
            [](std::vector<double> lower, std::vector<double> upper) {
                const AlphaGrid grid(lower.size());
                return validate(std::move(lower), std::move(upper), grid);
            },
            py::arg("lower"), py::arg("upper"))
        .def_static("triangular", &make_triangular, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("grid"))
        .def_static("trapezoidal", &make_trapezoidal, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"),
                    py::arg("grid"))
        .def_static("crisp_point", &make_crisp_point, py::arg("x"), py::arg("grid"))
        .def_static("crisp_interval", &make_crisp_interval, py::arg("lo"), py::arg("hi"), py::arg("grid"))
        .def_property_readonly("grid", &FuzzyNumber::grid)
        .def_property_readonly("lower",
                               [](const FuzzyNumber& a) { return std::vector<double>(a.lower().begin(), a.lower().end()); })
        .def_property_readonly("upper",
                               [](const FuzzyNumber& a) { return std::vector<double>(a.upper().begin(), a.upper().end()); })
        .def(
            "support", [](const FuzzyNumber& a, int u, double alpha) { return support_value(a, direction(u), alpha); },
            py::arg("u"), py::arg("alpha"))
        .def("approx_equal", &FuzzyNumber::approx_equal, py::arg("other"), py::arg("tol") = kEqualityTol);

    m.def("blend", &blend, py::arg("a"), py::arg("b"), py::arg("lam"));
    m.def("translate", &translate, py::arg("a"), py::arg("shift"));
    m.def(
        "rho", [](const FuzzyNumber& a, const FuzzyNumber& b, double r) { return rho(a, b, MetricOrder{r}); },
        py::arg("a"), py::arg("b"), py::arg("r") = 1.0);

    py::class_<LawProvider, std::shared_ptr<LawProvider>>(m, "Laws")
        .def_property_readonly("degenerate", &LawProvider::degenerate)
        .def_property_readonly("continuous", &LawProvider::continuous)
        .def(
            "median_interval",
            [](const LawProvider& l, int u, double alpha) {
                const auto iv = l.law(direction(u), alpha).median_interval();
                return py::make_tuple(iv.lo, iv.hi);
            },
            py::arg("u"), py::arg("alpha"));

    py::class_<SampleLaws, LawProvider, std::shared_ptr<SampleLaws>>(m, "Sample")
        .def(py::init([](std::vector<FuzzyNumber> items, std::optional<std::vector<double>> weights) {
                 if (weights) return std::make_shared<SampleLaws>(FuzzySample(std::move(items), std::move(*weights)));
                 return std::make_shared<SampleLaws>(FuzzySample(std::move(items)));
             }),
             py::arg("items"), py::arg("weights") = py::none())
        .def_property_readonly("grid", [](const SampleLaws& s) { return *s.grid(); })
        .def_property_readonly("items", [](const SampleLaws& s) {
            const auto items = s.sample()->items();
            return std::vector<FuzzyNumber>(items.begin(), items.end());
        });

    py::class_<CrispLaws, LawProvider, std::shared_ptr<CrispLaws>>(m, "CrispCdf")
        .def(py::init([](const std::vector<std::tuple<double, double, double>>& knots) {
                 std::vector<Breakpoint> bps;
                 for (const auto& [x, fl, fr] : knots) bps.push_back({x, fl, fr});
                 return std::make_shared<CrispLaws>(ScalarCdf::from_breakpoints(std::move(bps)));
             }),
             py::arg("breakpoints"), "Breakpoints as (x, F_left, F_right) triples.");

    m.def(
        "depth",
        [](const FuzzyNumber& a, const LawProvider& laws, const std::string& name, double r) {
            return report_dict(depth(a, laws, method(name), MetricOrder{r}));
        },
        py::arg("a"), py::arg("laws"), py::arg("method"), py::arg("r") = 1.0);
    m.def(
        "depth_batch",
        [](const std::vector<FuzzyNumber>& queries, const LawProvider& laws, const std::string& name, double r,
           unsigned threads) {
            std::vector<DepthReport> reports;
            {
                py::gil_scoped_release release;
                reports = depth_batch(queries, laws, method(name), MetricOrder{r}, threads);
            }
            py::list out;
            for (const auto& rep : reports) out.append(report_dict(rep));
            return out;
        },
        py::arg("queries"), py::arg("laws"), py::arg("method"), py::arg("r") = 1.0, py::arg("threads") = 0);

    m.def(
        "median_band", [](const LawProvider& laws, const AlphaGrid& grid) { return band_rows(support_median_band(laws, grid)); },
        py::arg("laws"), py::arg("grid"));
    m.def(
        "band_contains",
        [](const LawProvider& laws, const FuzzyNumber& a, double tol) {
            return band_contains(support_median_band(laws, a.grid()), a, tol).contained;
        },
        py::arg("laws"), py::arg("a"), py::arg("tol") = kEqualityTol);
    m.def("median_si", &median_si, py::arg("laws"), py::arg("grid"));
    m.def("median_gr", &median_gr, py::arg("laws"), py::arg("grid"));
    m.def(
        "verify",
        [](const LawProvider& laws, std::size_t trials, std::uint64_t seed, std::optional<AlphaGrid> grid,
           unsigned threads) {
            CertificationReport r;
            {
                py::gil_scoped_release release;
                r = certify_theorems(laws, trials, seed, grid ? &*grid : nullptr, threads);
            }
            return certification_dict(r);
        },
        py::arg("laws"), py::arg("trials") = 200, py::arg("seed") = 7, py::arg("grid") = py::none(),
        py::arg("threads") = 0);
}
