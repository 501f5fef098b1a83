// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fuzzydepth/candidates.hpp"
#include "fuzzydepth/certify.hpp"
#include "fuzzydepth/depth.hpp"
#include "fuzzydepth/median.hpp"
#include "fuzzydepth/metrics.hpp"
#include "support.hpp"

using namespace fdepth;

namespace {

constexpr double kBandTol = 1e-12;
constexpr double kDepthTol = 1e-12;
constexpr double kReferenceValueTol = 1e-9;
constexpr double kObjectiveSlack = 1e-9;
constexpr double kSpreadTol = 1e-12;
constexpr double kStrictMargin = 1e-10;
constexpr double kMonotoneTol = 1e-10;
constexpr double kSimplicialMargin = 1e-6;
constexpr double kRiemannTol = 1e-8;
constexpr double kMetricTol = 1e-12;

constexpr std::size_t kSeededSamples = 100;
constexpr std::size_t kGridLevels = 51;  // M = 50
constexpr std::size_t kMinPool = 500;
constexpr std::size_t kPoolBudget = 520;
constexpr double kOracleSeconds = 60.0;
constexpr double kFixtureSeconds = 1.0;
constexpr std::size_t kRiemannPoints = 100000;

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

bool band_is(const MedianBand& band, const std::function<Interval(Direction, double)>& expected) {
    for (Direction u : kDirections) {
        for (std::size_t i = 0; i < band.grid().size(); ++i) {
            const Interval want = expected(u, band.grid().level(i));
            const Interval got = band.at(u, i);
            if (std::abs(got.lo - want.lo) > kBandTol || std::abs(got.hi - want.hi) > kBandTol) return false;
        }
    }
    return true;
}

// Pool for one seeded sample, with the membership split used by several criteria.
struct SampleCase {
    FuzzySample sample;
    std::vector<Candidate> pool;
};

std::vector<SampleCase> seeded_cases() {
    const AlphaGrid grid(kGridLevels);
    std::vector<SampleCase> cases;
    cases.reserve(kSeededSamples);
    for (std::size_t k = 0; k < kSeededSamples; ++k) {
        std::mt19937_64 rng(1000 + k);
        auto sample = testing::random_sample(rng, grid, 3, 7, true);
        const SampleLaws laws(sample);
        CandidateGenerator gen(laws, grid, 5000 + k);
        cases.push_back({sample, gen.pool(kPoolBudget)});
    }
    return cases;
}

Outcome criterion1() {
    Outcome o;
    const auto t0 = Clock::now();
    const AlphaGrid g(101);
    const SampleLaws laws(FuzzySample({make_triangular(1, 2, 3, g), make_crisp_point(4, g), make_crisp_point(5, g),
                                       make_triangular(6, 6, 7, g)}));
    const auto band = support_median_band(laws, g);
    const double elapsed = seconds_since(t0);
    if (!band_is(band, [](Direction u, double) {
            return u == Direction::positive ? Interval{4, 5} : Interval{-5, -4};
        })) {
        o.fail("band differs from [4,5] / [-5,-4]");
    }
    if (elapsed >= kFixtureSeconds) o.fail("took " + fmt(elapsed) + " s");
    o.detail = o.pass ? "band [4,5] and [-5,-4] at all 101 levels in " + fmt(elapsed) + " s" : o.detail;
    return o;
}

Outcome criterion2() {
    Outcome o;
    const AlphaGrid g(101);
    const SampleLaws laws(FuzzySample({make_triangular(1, 2, 3, g), make_triangular(4, 4, 5, g),
                                       make_triangular(6, 7, 8, g), make_crisp_point(9, g)}));
    const auto band = support_median_band(laws, g);
    if (!band_is(band, [](Direction u, double a) {
            return u == Direction::positive ? Interval{5 - a, 8 - a} : Interval{-6 - a, -4};
        })) {
        o.fail("band differs from [5-a, 8-a] / [-6-a, -4]");
    }
    if (o.pass) o.detail = "band [5-a, 8-a] and [-6-a, -4] at all 101 levels";
    return o;
}

Outcome criterion3() {
    Outcome o;
    const AlphaGrid g(101);
    const SampleLaws laws(FuzzySample({make_crisp_point(1, g), make_crisp_point(3, g)}, {0.5, 0.5}));
    const auto i2 = make_crisp_point(2, g);
    const auto t = make_triangular(1, 2, 3, g);
    const double d_i2 = depth_projection(i2, laws).value;
    const double d_t = depth_projection(t, laws).value;
    if (std::abs(d_i2 - 1.0) > kDepthTol) o.fail("D_FP(I2) = " + fmt(d_i2));
    if (std::abs(d_t - 0.5) > kDepthTol) o.fail("D_FP(T(1,2,3)) = " + fmt(d_t));
    const auto band = support_median_band(laws, g);
    if (!band_contains(band, i2, kBandTol).contained) o.fail("I2 not in band");
    if (!band_contains(band, t, kBandTol).contained) o.fail("T(1,2,3) not in band");
    if (o.pass) o.detail = "D_FP(I2)=" + fmt(d_i2) + ", D_FP(T(1,2,3))=" + fmt(d_t) + ", both in band";
    return o;
}

Outcome criterion4() {
    Outcome o;
    const AlphaGrid g(101);
    const CrispLaws laws(ScalarCdf::from_breakpoints({{0, 0, 0}, {2, 0.29, 0.49}, {53, 1, 1}}));
    const double d3 = depth_simplicial(make_crisp_point(3, g), laws, SimplicialVariant::fuzzy).value;
    const double d2 = depth_simplicial(make_crisp_point(2, g), laws, SimplicialVariant::fuzzy).value;
    if (std::abs(d3 - 0.5) > kReferenceValueTol) o.fail("D_FS(I3) = " + fmt(d3));
    if (std::abs(d2 - 0.6558) > kReferenceValueTol) o.fail("D_FS(I2) = " + fmt(d2));
    const auto report = certify_theorems(laws, 100, 7, &g);
    const auto* p = report.find("simplicial_median_is_support_median");
    if (p == nullptr || p->status != PropertyStatus::documented_exception) {
        o.fail("verify does not report the support/simplicial median mismatch");
    }
    if (!report.passed()) o.fail("verify reports a failing property");
    if (o.pass) o.detail = "D_FS(I3)=" + fmt(d3) + ", D_FS(I2)=" + fmt(d2) + ", verify flags Med_s != Med(D_FS)";
    return o;
}

Outcome criterion5() {
    Outcome o;
    const AlphaGrid g(101);
    const SampleLaws laws(FuzzySample({make_crisp_point(0, g), make_crisp_point(2, g)}));
    if (!median_si(laws, g).approx_equal(make_crisp_point(1, g), kBandTol)) o.fail("median_si != I1");
    if (!median_gr(laws, g).approx_equal(make_crisp_interval(0, 2, g), kBandTol)) o.fail("median_gr != I[0,2]");
    if (o.pass) o.detail = "median_si = I1, median_gr = I[0,2]";
    return o;
}

Outcome criterion6(const std::vector<SampleCase>& cases, double build_seconds) {
    Outcome o;
    const auto t0 = Clock::now();
    std::size_t smallest_pool = static_cast<std::size_t>(-1);
    std::size_t members_total = 0;
    for (std::size_t k = 0; k < cases.size(); ++k) {
        const auto& c = cases[k];
        smallest_pool = std::min(smallest_pool, c.pool.size());
        std::vector<FuzzyNumber> numbers;
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < c.pool.size(); ++i) {
            numbers.push_back(c.pool[i].number);
            if (c.pool[i].membership == Membership::member) members.push_back(i);
        }
        members_total += members.size();
        const auto res = brute_force_one_median(c.sample, numbers, kObjectiveSlack);
        if (res.minimizers != members) {
            o.fail("sample " + std::to_string(k) + ": " + std::to_string(res.minimizers.size()) +
                   " minimisers vs " + std::to_string(members.size()) + " band members");
        }
    }
    const double elapsed = build_seconds + seconds_since(t0);
    if (smallest_pool < kMinPool) o.fail("smallest pool has " + std::to_string(smallest_pool) + " candidates");
    if (elapsed > kOracleSeconds) o.fail("took " + fmt(elapsed) + " s");
    if (o.pass) {
        o.detail = std::to_string(cases.size()) + " samples, pools >= " + std::to_string(smallest_pool) + ", " +
                   std::to_string(members_total) + " members, " + fmt(elapsed) + " s";
    }
    return o;
}

Outcome criterion7(const std::vector<SampleCase>& cases) {
    Outcome o;
    double worst_spread = 0.0;
    double worst_margin = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < cases.size(); ++k) {
        const SampleLaws laws(cases[k].sample);
        double lo = 1.0, hi = 0.0, best_out = -1.0;
        for (const auto& c : cases[k].pool) {
            const double d = depth_tukey(c.number, laws).value;
            if (c.membership == Membership::member) {
                lo = std::min(lo, d);
                hi = std::max(hi, d);
            } else {
                best_out = std::max(best_out, d);
            }
        }
        if (hi < lo) {
            o.fail("sample " + std::to_string(k) + " has no band members");
            continue;
        }
        worst_spread = std::max(worst_spread, hi - lo);
        if (best_out >= 0.0) worst_margin = std::min(worst_margin, lo - best_out);
        if (hi - lo > kSpreadTol) o.fail("sample " + std::to_string(k) + ": member D_FT spread " + fmt(hi - lo));
        if (best_out >= 0.0 && lo - best_out < kStrictMargin) {
            o.fail("sample " + std::to_string(k) + ": outsider within " + fmt(lo - best_out) + " of members");
        }
    }
    if (o.pass) o.detail = "max member spread " + fmt(worst_spread) + ", min margin " + fmt(worst_margin);
    return o;
}

Outcome criterion8(const std::vector<SampleCase>& cases) {
    Outcome o;
    const AlphaGrid grid(kGridLevels);
    std::size_t checked = 0;
    for (std::size_t k = 0; k < cases.size(); ++k) {
        std::vector<const FuzzyNumber*> members;
        for (const auto& c : cases[k].pool) {
            if (c.membership == Membership::member) members.push_back(&c.number);
        }
        if (members.empty()) {
            o.fail("sample " + std::to_string(k) + " has no band members");
            continue;
        }
        std::mt19937_64 rng(9000 + k);
        const FuzzyNumber& a = *members[rng() % members.size()];
        const auto v = testing::random_trapezoid(rng, grid);
        const double da = depth_l1(a, cases[k].sample).value;
        const double dv = depth_l1(v, cases[k].sample).value;
        for (double lambda : {0.25, 0.5, 0.75}) {
            const double du = depth_l1(blend(a, v, lambda), cases[k].sample).value;
            if (da < du - kMonotoneTol || du < dv - kMonotoneTol) {
                o.fail("sample " + std::to_string(k) + ", lambda " + fmt(lambda) + ": D1 " + fmt(da) + ", " +
                       fmt(du) + ", " + fmt(dv));
            }
            ++checked;
        }
    }
    if (o.pass) o.detail = std::to_string(checked) + " (A, U, V) triples ordered";
    return o;
}

Outcome criterion9() {
    Outcome o;
    const AlphaGrid g(101);
    const std::vector<std::vector<Breakpoint>> laws_knots{
        {{0, 0, 0}, {1, 0.2, 0.2}, {4, 0.9, 0.9}, {6, 1, 1}},
        {{-3, 0, 0}, {3, 1, 1}},
        {{0, 0, 0}, {1, 0.45, 0.45}, {2, 0.55, 0.55}, {10, 1, 1}},
    };
    double worst_margin = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < laws_knots.size(); ++k) {
        const CrispLaws laws(ScalarCdf::from_breakpoints(laws_knots[k]));
        const auto iv = laws.cdf().median_interval();
        if (iv.width() > kBandTol || !laws.continuous()) {
            o.fail("law " + std::to_string(k) + " is not a continuous law with a unique median");
            continue;
        }
        const double m = iv.mid();
        const double delta = 0.1 * (laws.cdf().support_max() - laws.cdf().support_min());
        for (auto variant : {SimplicialVariant::modified, SimplicialVariant::fuzzy}) {
            const double top = depth_simplicial(make_crisp_point(m, g), laws, variant).value;
            for (double shift : {-delta, delta}) {
                const double off = depth_simplicial(make_crisp_point(m + shift, g), laws, variant).value;
                worst_margin = std::min(worst_margin, top - off);
                if (top - off < kSimplicialMargin) {
                    o.fail("law " + std::to_string(k) + ": I_(m" + (shift < 0 ? "-" : "+") + "d) within " +
                           fmt(top - off) + " of I_m");
                }
            }
        }
        // I_m is a maximiser over the certification pool as well.
        const auto report = certify_theorems(laws, 100, 11 + k, &g);
        const auto* p = report.find("simplicial_median_is_support_median");
        if (p == nullptr || p->status != PropertyStatus::pass) {
            o.fail("law " + std::to_string(k) + ": " + (p ? p->detail : std::string("property missing")));
        }
    }
    if (o.pass) o.detail = "3 continuous laws, min margin " + fmt(worst_margin);
    return o;
}

Outcome criterion10() {
    Outcome o;
    const AlphaGrid grid(kGridLevels);
    std::size_t checks = 0;
    for (std::size_t k = 0; k < kSeededSamples; ++k) {
        std::mt19937_64 rng(20000 + k);
        const auto a = testing::random_grid_number(rng, grid);
        const auto b = testing::random_grid_number(rng, grid);
        const auto c = testing::random_grid_number(rng, grid);
        for (double r : {1.0, 2.0}) {
            const MetricOrder m{r};
            const double ab = rho(a, b, m), ba = rho(b, a, m), ac = rho(a, c, m), bc = rho(b, c, m);
            if (ab != ba) o.fail("asymmetric rho");
            if (rho(a, a, m) != 0.0 || !(ab > 0.0)) o.fail("identity of indiscernibles");
            if (ac > ab + bc + kMetricTol) o.fail("triangle inequality");
            const double oracle = testing::rho_riemann(a, b, r, kRiemannPoints);
            if (std::abs(ab - oracle) > kRiemannTol) o.fail("Riemann oracle off by " + fmt(std::abs(ab - oracle)));
            ++checks;
        }

        const auto sample = testing::random_sample(rng, grid, 3, 7);
        const SampleLaws laws(sample);
        const auto band = support_median_band(laws, grid);
        const auto si = median_si(laws, grid);
        const auto gr = median_gr(laws, grid);
        if (!band_contains(band, si, kBandTol).contained) o.fail("sample " + std::to_string(k) + ": med_Si off band");
        if (!band_contains(band, gr, kBandTol).contained) o.fail("sample " + std::to_string(k) + ": med_Gr off band");
        CandidateGenerator gen(laws, grid, 30000 + k);
        for (const auto& cand : gen.pool(40)) {
            if (cand.membership != Membership::member) continue;
            for (std::size_t i = 0; i < grid.size(); ++i) {
                if (cand.number.lower()[i] < gr.lower()[i] - kBandTol ||
                    cand.number.upper()[i] > gr.upper()[i] + kBandTol) {
                    o.fail("sample " + std::to_string(k) + ": support median cut leaves med_Gr cut");
                }
            }
            ++checks;
        }
    }
    if (o.pass) o.detail = std::to_string(kSeededSamples) + " seeded samples, " + std::to_string(checks) + " checks";
    return o;
}

}  // namespace

int main() {
    int failures = 0;
    auto report = [&](int id, const char* title, const Outcome& o) {
        std::printf("%s  criterion %d  %s: %s\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str());
        std::fflush(stdout);
        if (!o.pass) ++failures;
    };
    report(1, "flat four-item band", criterion1());
    report(2, "sloped four-item band", criterion2());
    report(3, "projection depth vs 1-medians", criterion3());
    report(4, "simplicial depth on a law with an atom", criterion4());
    report(5, "crisp two-point medians", criterion5());
    const auto t0 = Clock::now();
    const auto cases = seeded_cases();
    const double build_seconds = seconds_since(t0);
    report(6, "1-medians are the band members", criterion6(cases, build_seconds));
    report(7, "Tukey argmax invariance", criterion7(cases));
    report(8, "L1 depth monotone along segments", criterion8(cases));
    report(9, "simplicial medians under continuous laws", criterion9());
    report(10, "metric and median property suites", criterion10());
    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
