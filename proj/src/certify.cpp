#include "fuzzydepth/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "fuzzydepth/candidates.hpp"
#include "fuzzydepth/depth.hpp"
#include "fuzzydepth/errors.hpp"
#include "fuzzydepth/median.hpp"
#include "fuzzydepth/parallel.hpp"

namespace fdepth {

std::string_view to_string(PropertyStatus s) noexcept {
    switch (s) {
        case PropertyStatus::pass: return "pass";
        case PropertyStatus::fail: return "fail";
        case PropertyStatus::skipped: return "skipped";
        case PropertyStatus::documented_exception: return "documented_exception";
    }
    return "unknown";
}

bool CertificationReport::passed() const {
    return std::none_of(properties.begin(), properties.end(),
                        [](const PropertyResult& p) { return p.status == PropertyStatus::fail; });
}

const PropertyResult* CertificationReport::find(std::string_view name) const {
    for (const auto& p : properties) {
        if (p.name == name) return &p;
    }
    return nullptr;
}

namespace {

constexpr double kStrictMargin = 1e-10;
constexpr double kObjectiveSlack = 1e-9;

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

double max_abs_diff(const FuzzyNumber& a, const FuzzyNumber& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.grid().size(); ++i) {
        d = std::max({d, std::abs(a.lower()[i] - b.lower()[i]), std::abs(a.upper()[i] - b.upper()[i])});
    }
    return d;
}

// α probes where piecewise-linear band quantities can bend: grid levels,
// structural crossings and the midpoints between them.
std::vector<double> band_probes(const LawProvider& laws, const AlphaGrid& grid, Direction u) {
    std::vector<double> pts = grid.levels();
    const auto extra = laws.structural_alphas(u);
    pts.insert(pts.end(), extra.begin(), extra.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<double> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i > 0) out.push_back(0.5 * (pts[i - 1] + pts[i]));
        out.push_back(pts[i]);
    }
    return out;
}

struct Context {
    const LawProvider& laws;
    const AlphaGrid& grid;
    const std::vector<Candidate>& pool;
    double scale;
    unsigned threads;
};

template <class Fn>
std::vector<double> evaluate(const Context& ctx, Fn&& fn) {
    std::vector<double> out(ctx.pool.size());
    parallel_for(ctx.pool.size(), [&](std::size_t i) { out[i] = fn(ctx.pool[i].number); }, ctx.threads);
    return out;
}

PropertyResult named_medians_in_band(const Context& ctx, const FuzzyNumber& si, const FuzzyNumber& gr) {
    PropertyResult p{"named_medians_in_band", "med_Si and med_Gr are support medians", {}, {}, {}};
    const MedianBand band = support_median_band(ctx.laws, ctx.grid);
    const double tol = kEqualityTol * ctx.scale;
    for (const auto* m : {&si, &gr}) {
        const BandCheck check = band_contains(band, *m, tol);
        if (!check.contained) {
            const auto& v = check.violations.front();
            p.status = PropertyStatus::fail;
            p.detail = std::string(m == &si ? "med_Si" : "med_Gr") + " leaves the band at alpha=" +
                       fmt(v.alpha) + " by " + fmt(v.excess());
            p.counterexample = *m;
            return p;
        }
    }
    p.detail = "both medians inside the band at every grid level";
    return p;
}

PropertyResult one_median(const Context& ctx) {
    PropertyResult p{"one_median_is_support_median",
                     "argmin E[rho_1(U,X)] over F_c(R) equals the support-median set",
                     {},
                     {},
                     {}};
    const FuzzySample* sample = ctx.laws.sample();
    if (sample == nullptr) {
        p.status = PropertyStatus::skipped;
        p.detail = "skipped: backend has no fuzzy realisations";
        return p;
    }
    const double infimum = min_expected_rho1(*sample);
    const auto objective = evaluate(ctx, [&](const FuzzyNumber& a) { return expected_rho1(a, *sample); });
    std::size_t members = 0;
    for (std::size_t i = 0; i < ctx.pool.size(); ++i) {
        const auto& c = ctx.pool[i];
        if (c.membership == Membership::member) {
            ++members;
            if (std::abs(objective[i] - infimum) > kObjectiveSlack) {
                p.status = PropertyStatus::fail;
                p.detail = "support median (" + std::string(to_string(c.origin)) + ") has E[rho_1]=" +
                           fmt(objective[i]) + " but the infimum is " + fmt(infimum);
                p.counterexample = c.number;
                return p;
            }
        } else if (!(objective[i] - infimum > kStrictMargin)) {
            p.status = PropertyStatus::fail;
            p.detail = "candidate outside the band (" + std::string(to_string(c.origin)) +
                       ", excess " + fmt(c.excess) + ") has E[rho_1]=" + fmt(objective[i]) +
                       " not above the infimum " + fmt(infimum);
            p.counterexample = c.number;
            return p;
        }
    }
    if (members > 0) {
        // Pool minimisers must coincide with the members.
        const double pool_min = *std::min_element(objective.begin(), objective.end());
        for (std::size_t i = 0; i < ctx.pool.size(); ++i) {
            const bool minimizer = objective[i] <= pool_min + kObjectiveSlack;
            if (minimizer != (ctx.pool[i].membership == Membership::member)) {
                p.status = PropertyStatus::fail;
                p.detail = "brute-force minimiser set differs from the band members at candidate " +
                           std::to_string(i);
                p.counterexample = ctx.pool[i].number;
                return p;
            }
        }
    }
    p.detail = std::to_string(members) + " members at the infimum " + fmt(infimum) + ", " +
               std::to_string(ctx.pool.size() - members) + " outsiders strictly above";
    return p;
}

PropertyResult tukey_median(const Context& ctx) {
    PropertyResult p{"tukey_median_is_support_median",
                     "argmax D_FT equals the support-median set",
                     {},
                     {},
                     {}};
    const double ceiling = tukey_depth_ceiling(ctx.laws, ctx.grid);
    const auto depth = evaluate(ctx, [&](const FuzzyNumber& a) { return depth_tukey(a, ctx.laws).value; });
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    double best_outside = -1.0;
    for (std::size_t i = 0; i < ctx.pool.size(); ++i) {
        const auto& c = ctx.pool[i];
        if (c.membership == Membership::member) {
            lo = std::min(lo, depth[i]);
            hi = std::max(hi, depth[i]);
            if (std::abs(depth[i] - ceiling) > kEqualityTol) {
                p.status = PropertyStatus::fail;
                p.detail = "support median has D_FT=" + fmt(depth[i]) + " below the maximum " + fmt(ceiling);
                p.counterexample = c.number;
                return p;
            }
        } else {
            best_outside = std::max(best_outside, depth[i]);
            if (!(depth[i] < ceiling - kStrictMargin)) {
                p.status = PropertyStatus::fail;
                p.detail = "candidate outside the band (" + std::string(to_string(c.origin)) +
                           ") reaches D_FT=" + fmt(depth[i]) + " against maximum " + fmt(ceiling);
                p.counterexample = c.number;
                return p;
            }
        }
    }
    std::ostringstream os;
    os.precision(17);
    os << "max D_FT " << ceiling;
    if (hi >= lo) os << ", member spread " << (hi - lo);
    if (best_outside >= 0.0) os << ", best outsider " << best_outside;
    p.detail = os.str();
    return p;
}

// Largest gap between med_Si and the exact midpoint median over α ∈ [0,1].
double sinova_bend(const Context& ctx, const FuzzyNumber& si) {
    double gap = 0.0;
    for (Direction u : kDirections) {
        for (double alpha : band_probes(ctx.laws, ctx.grid, u)) {
            gap = std::max(gap, std::abs(support_value(si, u, alpha) - ctx.laws.law(u, alpha).median_mid()));
        }
    }
    return gap;
}

PropertyResult projection_median(const Context& ctx, const FuzzyNumber& si) {
    PropertyResult p{"projection_median_is_sinova", "med_Si is the unique maximiser of D_FP", {}, {}, {}};
    if (ctx.laws.degenerate()) {
        p.status = PropertyStatus::skipped;
        p.detail = "skipped: degenerate distribution";
        return p;
    }
    const double bend = sinova_bend(ctx, si);
    if (bend > 1e-10 * ctx.scale) {
        p.status = PropertyStatus::skipped;
        p.detail = "skipped: the midpoint median bends between grid levels (gap " + fmt(bend) +
                   "), so med_Si is not representable on this grid";
        return p;
    }
    const double top = depth_projection(si, ctx.laws).value;
    if (top < 1.0 - kEqualityTol) {
        p.status = PropertyStatus::fail;
        p.detail = "D_FP(med_Si)=" + fmt(top) + " < 1";
        p.counterexample = si;
        return p;
    }
    const auto depth = evaluate(ctx, [&](const FuzzyNumber& a) { return depth_projection(a, ctx.laws).value; });
    std::size_t distinct = 0;
    for (std::size_t i = 0; i < ctx.pool.size(); ++i) {
        if (max_abs_diff(ctx.pool[i].number, si) <= 1e-6 * ctx.scale) continue;
        ++distinct;
        if (!(depth[i] < 1.0 - kStrictMargin)) {
            p.status = PropertyStatus::fail;
            p.detail = "candidate distinct from med_Si reaches D_FP=" + fmt(depth[i]);
            p.counterexample = ctx.pool[i].number;
            return p;
        }
    }
    p.detail = "D_FP(med_Si)=1; " + std::to_string(distinct) + " distinct candidates score below 1";
    return p;
}

PropertyResult unique_median(const Context& ctx, const FuzzyNumber& si, const FuzzyNumber& gr) {
    PropertyResult p{"unique_median_collapse",
                     "with unique pointwise medians the support medians reduce to med_Si = med_Gr",
                     {},
                     {},
                     {}};
    if (ctx.laws.degenerate()) {
        p.status = PropertyStatus::skipped;
        p.detail = "skipped: degenerate distribution";
        return p;
    }
    for (Direction u : kDirections) {
        for (double alpha : band_probes(ctx.laws, ctx.grid, u)) {
            const Interval iv = ctx.laws.law(u, alpha).median_interval();
            if (iv.width() > kEqualityTol * ctx.scale) {
                p.status = PropertyStatus::skipped;
                p.detail = "skipped: median of s_X(" + std::string(u == Direction::positive ? "+1" : "-1") +
                           ", " + fmt(alpha) + ") is the interval [" + fmt(iv.lo) + ", " + fmt(iv.hi) + "]";
                return p;
            }
        }
    }
    if (!si.approx_equal(gr, kEqualityTol * ctx.scale)) {
        p.status = PropertyStatus::fail;
        p.detail = "med_Si and med_Gr differ although every median is unique";
        p.counterexample = gr;
        return p;
    }
    for (const auto& c : ctx.pool) {
        if (c.membership == Membership::member && max_abs_diff(c.number, si) > 1e-9 * ctx.scale) {
            p.status = PropertyStatus::fail;
            p.detail = "support median distinct from med_Si";
            p.counterexample = c.number;
            return p;
        }
    }
    if (sinova_bend(ctx, si) <= 1e-10 * ctx.scale && depth_projection(si, ctx.laws).value < 1.0 - kEqualityTol) {
        p.status = PropertyStatus::fail;
        p.detail = "med_Si does not reach D_FP = 1";
        p.counterexample = si;
        return p;
    }
    p.detail = "medians unique everywhere; med_Si = med_Gr and no other support median in the pool";
    return p;
}

PropertyResult simplicial_median(const Context& ctx, const FuzzyNumber& si) {
    PropertyResult p{"simplicial_median_is_support_median",
                     "for continuous laws the support median maximises D_mS and D_FS",
                     {},
                     {},
                     {}};
    if (ctx.laws.sample() != nullptr) {
        p.status = PropertyStatus::skipped;
        p.detail = "skipped: empirical laws are discrete";
        return p;
    }
    const Interval range = ctx.laws.value_range();
    const double ms_top = depth_simplicial(si, ctx.laws, SimplicialVariant::modified).value;
    const double fs_top = depth_simplicial(si, ctx.laws, SimplicialVariant::fuzzy).value;
    if (!ctx.laws.continuous()) {
        // Atoms: scan crisp points for one that beats the support median.
        std::vector<double> xs;
        const auto* crisp = dynamic_cast<const CrispLaws*>(&ctx.laws);
        if (crisp != nullptr) {
            for (const auto& k : crisp->cdf().breakpoints()) xs.push_back(k.x);
        }
        for (int i = 0; i <= 1000; ++i) xs.push_back(range.lo + (range.hi - range.lo) * i / 1000.0);
        double best = fs_top;
        std::optional<FuzzyNumber> winner;
        for (double x : xs) {
            FuzzyNumber c = make_crisp_point(x, ctx.grid);
            const double v = depth_simplicial(c, ctx.laws, SimplicialVariant::fuzzy).value;
            if (v > best + kStrictMargin) {
                best = v;
                winner = std::move(c);
            }
        }
        if (winner) {
            p.status = PropertyStatus::documented_exception;
            p.detail = "law has atoms: a crisp point reaches D_FS=" + fmt(best) +
                       " above the support median's " + fmt(fs_top) +
                       ", so the D_FS medians differ from the support medians";
            p.counterexample = std::move(winner);
        } else {
            p.detail = "law has atoms but no scanned point beats the support median (D_FS=" + fmt(fs_top) + ")";
        }
        return p;
    }
    const auto ms = evaluate(ctx, [&](const FuzzyNumber& a) {
        return depth_simplicial(a, ctx.laws, SimplicialVariant::modified).value;
    });
    const auto fs = evaluate(ctx, [&](const FuzzyNumber& a) {
        return depth_simplicial(a, ctx.laws, SimplicialVariant::fuzzy).value;
    });
    for (std::size_t i = 0; i < ctx.pool.size(); ++i) {
        const auto& c = ctx.pool[i];
        const bool member = c.membership == Membership::member;
        const bool ok = member ? (std::abs(ms[i] - ms_top) <= kEqualityTol && std::abs(fs[i] - fs_top) <= kEqualityTol)
                               : (ms[i] < ms_top && fs[i] < fs_top);
        if (!ok) {
            p.status = PropertyStatus::fail;
            p.detail = std::string(member ? "support median" : "outsider") + " scores D_mS=" + fmt(ms[i]) +
                       ", D_FS=" + fmt(fs[i]) + " against " + fmt(ms_top) + ", " + fmt(fs_top);
            p.counterexample = c.number;
            return p;
        }
    }
    const double m = si.upper()[0];
    const double delta = 0.1 * range.width();
    for (double x : {m - delta, m + delta}) {
        const FuzzyNumber c = make_crisp_point(x, ctx.grid);
        const double vm = depth_simplicial(c, ctx.laws, SimplicialVariant::modified).value;
        const double vf = depth_simplicial(c, ctx.laws, SimplicialVariant::fuzzy).value;
        if (!(vm < ms_top - 1e-6 && vf < fs_top - 1e-6)) {
            p.status = PropertyStatus::fail;
            p.detail = "perturbed median at " + fmt(x) + " is not strictly shallower";
            p.counterexample = c;
            return p;
        }
    }
    p.detail = "support median reaches D_mS=" + fmt(ms_top) + ", D_FS=" + fmt(fs_top) +
               "; every outsider and the +/-10% perturbations score less";
    return p;
}

PropertyResult cuts_within_gr(const Context& ctx, const FuzzyNumber& gr) {
    PropertyResult p{"cuts_within_grzegorzewski",
                     "every support median has alpha-cuts inside those of med_Gr",
                     {},
                     {},
                     {}};
    const double tol = kEqualityTol * ctx.scale;
    std::size_t checked = 0;
    for (const auto& c : ctx.pool) {
        if (c.membership != Membership::member) continue;
        ++checked;
        for (std::size_t i = 0; i < ctx.grid.size(); ++i) {
            if (c.number.lower()[i] < gr.lower()[i] - tol || c.number.upper()[i] > gr.upper()[i] + tol) {
                p.status = PropertyStatus::fail;
                p.detail = "support median's cut at alpha=" + fmt(ctx.grid.level(i)) + " leaves med_Gr's cut";
                p.counterexample = c.number;
                return p;
            }
        }
    }
    p.detail = std::to_string(checked) + " support medians checked";
    return p;
}

}  // namespace

CertificationReport certify_theorems(const LawProvider& laws, std::size_t trials, std::uint64_t seed,
                                     const AlphaGrid* grid, unsigned threads) {
    if (trials < 1) throw InvalidParameter("trials must be at least 1");
    const AlphaGrid* g = laws.grid() != nullptr ? laws.grid() : grid;
    if (g == nullptr) throw InvalidParameter("an alpha grid is required for this backend");
    if (grid != nullptr && laws.grid() != nullptr) require_same_grid(*grid, *laws.grid());

    CertificationReport report;
    report.backend = laws.sample() != nullptr ? "sample" : "crisp_cdf";
    report.trials = trials;
    report.seed = seed;

    CandidateGenerator gen(laws, *g, seed);
    auto deterministic = gen.deterministic();
    std::vector<Candidate> pool;
    for (auto& c : deterministic) {
        if (c.membership == Membership::ambiguous) {
            ++report.discarded;
        } else {
            pool.push_back(std::move(c));
        }
    }
    for (std::size_t i = 0; i < trials; ++i) {
        Candidate c = gen.next();
        if (c.membership == Membership::ambiguous) {
            ++report.discarded;
        } else {
            pool.push_back(std::move(c));
        }
    }
    for (const auto& c : pool) {
        (c.membership == Membership::member ? report.members : report.outside) += 1;
    }

    const Interval range = laws.value_range();
    const double scale = std::max({1.0, std::abs(range.lo), std::abs(range.hi)});
    const Context ctx{laws, *g, pool, scale, threads};
    const FuzzyNumber si = median_si(laws, *g);
    const FuzzyNumber gr = median_gr(laws, *g);

    report.properties.push_back(named_medians_in_band(ctx, si, gr));
    report.properties.push_back(one_median(ctx));
    report.properties.push_back(tukey_median(ctx));
    report.properties.push_back(projection_median(ctx, si));
    report.properties.push_back(unique_median(ctx, si, gr));
    report.properties.push_back(simplicial_median(ctx, si));
    report.properties.push_back(cuts_within_gr(ctx, gr));
    return report;
}

}  // namespace fdepth
