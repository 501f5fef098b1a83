#include "fuzzydepth/candidates.hpp"

#include <algorithm>

#include "fuzzydepth/errors.hpp"

namespace fdepth {

std::string_view to_string(CandidateOrigin o) noexcept {
    switch (o) {
        case CandidateOrigin::sinova: return "sinova";
        case CandidateOrigin::grzegorzewski: return "grzegorzewski";
        case CandidateOrigin::band_corner: return "band_corner";
        case CandidateOrigin::in_band: return "in_band";
        case CandidateOrigin::band_blend: return "band_blend";
        case CandidateOrigin::envelope: return "envelope";
        case CandidateOrigin::crisp_point: return "crisp_point";
        case CandidateOrigin::pushed_out: return "pushed_out";
        case CandidateOrigin::pushed_in: return "pushed_in";
        case CandidateOrigin::translated: return "translated";
    }
    return "unknown";
}

namespace {

// Makes a nondecreasing `lower` and nonincreasing `upper` into a valid number
// by meeting at the core midpoint when the cores cross.
FuzzyNumber assemble(std::vector<double> lower, std::vector<double> upper, const AlphaGrid& grid) {
    if (lower.back() > upper.back()) {
        const double c = 0.5 * (lower.back() + upper.back());
        for (auto& v : lower) v = std::min(v, c);
        for (auto& v : upper) v = std::max(v, c);
    }
    return validate(std::move(lower), std::move(upper), grid);
}

}  // namespace

CandidateGenerator::CandidateGenerator(const LawProvider& laws, const AlphaGrid& grid, std::uint64_t seed)
    : laws_(laws),
      grid_(grid),
      band_(support_median_band(laws, grid)),
      values_(laws.value_range()),
      range_(std::max(values_.width(), 0.0)),
      member_tol_(1e-10 * std::max(1.0, range_)),
      outside_margin_(1e-3 * (range_ > 0.0 ? range_ : 1.0)),
      rng_(seed) {
    const double pad = 0.1 * (range_ > 0.0 ? range_ : 1.0);
    values_ = {values_.lo - pad, values_.hi + pad};
}

double CandidateGenerator::uniform(double lo, double hi) {
    if (!(hi > lo)) return lo;
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

Candidate CandidateGenerator::classify(FuzzyNumber a, CandidateOrigin origin) const {
    const double excess = support_median_excess(laws_, a).max_excess;
    Membership m = Membership::ambiguous;
    if (excess <= member_tol_) {
        m = Membership::member;
    } else if (excess >= outside_margin_) {
        m = Membership::outside;
    }
    return {std::move(a), origin, excess, m};
}

std::vector<Candidate> CandidateGenerator::deterministic() const {
    std::vector<Candidate> out;
    out.push_back(classify(median_si(laws_, grid_), CandidateOrigin::sinova));
    out.push_back(classify(median_gr(laws_, grid_), CandidateOrigin::grzegorzewski));
    const std::size_t n = grid_.size();
    for (int up = 0; up < 3; ++up) {
        for (int lo = 0; lo < 3; ++lo) {
            std::vector<double> lower(n);
            std::vector<double> upper(n);
            for (std::size_t i = 0; i < n; ++i) {
                const Interval& p = band_.at(Direction::positive, i);
                const Interval& m = band_.at(Direction::negative, i);
                upper[i] = up == 0 ? p.lo : (up == 1 ? p.mid() : p.hi);
                lower[i] = lo == 0 ? -m.hi : (lo == 1 ? -m.mid() : -m.lo);
            }
            out.push_back(classify(assemble(std::move(lower), std::move(upper), grid_),
                                   CandidateOrigin::band_corner));
        }
    }
    return out;
}

FuzzyNumber CandidateGenerator::random_in_band() {
    const std::size_t n = grid_.size();
    std::vector<double> lower(n);
    std::vector<double> upper(n);
    if (uniform(0.0, 1.0) < 0.5) {
        // Fixed relative position inside each band interval.
        const double tu = uniform(0.0, 1.0);
        const double tl = uniform(0.0, 1.0);
        for (std::size_t i = 0; i < n; ++i) {
            const Interval& p = band_.at(Direction::positive, i);
            const Interval& m = band_.at(Direction::negative, i);
            upper[i] = p.lo + tu * p.width();
            lower[i] = -(m.lo + tl * m.width());
        }
    } else {
        // Running min/max of independent draws keeps the endpoints monotone
        // and inside the band at every level.
        for (std::size_t i = 0; i < n; ++i) {
            const Interval& p = band_.at(Direction::positive, i);
            const Interval& m = band_.at(Direction::negative, i);
            const double du = uniform(p.lo, p.hi);
            const double dl = uniform(-m.hi, -m.lo);
            upper[i] = i == 0 ? du : std::min(upper[i - 1], du);
            lower[i] = i == 0 ? dl : std::max(lower[i - 1], dl);
        }
    }
    return assemble(std::move(lower), std::move(upper), grid_);
}

FuzzyNumber CandidateGenerator::random_envelope() {
    const std::size_t n = grid_.size();
    double p = uniform(values_.lo, values_.hi);
    double q = uniform(values_.lo, values_.hi);
    if (p > q) std::swap(p, q);
    const double l0 = uniform(values_.lo, p);
    const double u0 = uniform(q, values_.hi);
    std::vector<double> gl(n);
    std::vector<double> gu(n);
    for (std::size_t i = 0; i < n; ++i) {
        gl[i] = uniform(0.0, 1.0);
        gu[i] = uniform(0.0, 1.0);
    }
    std::sort(gl.begin(), gl.end());
    std::sort(gu.begin(), gu.end());
    gl.front() = gu.front() = 0.0;
    gl.back() = gu.back() = 1.0;
    std::vector<double> lower(n);
    std::vector<double> upper(n);
    for (std::size_t i = 0; i < n; ++i) {
        lower[i] = l0 + (p - l0) * gl[i];
        upper[i] = u0 - (u0 - q) * gu[i];
    }
    return assemble(std::move(lower), std::move(upper), grid_);
}

FuzzyNumber CandidateGenerator::pushed(bool outward) {
    const FuzzyNumber base = random_in_band();
    std::vector<double> lower(base.lower().begin(), base.lower().end());
    std::vector<double> upper(base.upper().begin(), base.upper().end());
    const std::size_t n = grid_.size();
    const auto k = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
    const double delta = uniform(2.0, 300.0) * outside_margin_;
    const bool plus_side = uniform(0.0, 1.0) < 0.5;
    if (outward) {
        // Raise s(u, ·) above the band on the levels up to k.
        for (std::size_t i = 0; i <= k; ++i) {
            if (plus_side) {
                upper[i] = band_.at(Direction::positive, i).hi + delta;
            } else {
                lower[i] = -(band_.at(Direction::negative, i).hi + delta);
            }
        }
        for (std::size_t i = 1; i < n; ++i) {
            upper[i] = std::min(upper[i], upper[i - 1]);
            lower[i] = std::max(lower[i], lower[i - 1]);
        }
    } else {
        // Drop s(u, ·) below the band on the levels from k on.
        for (std::size_t i = k; i < n; ++i) {
            if (plus_side) {
                upper[i] = band_.at(Direction::positive, i).lo - delta;
            } else {
                lower[i] = -(band_.at(Direction::negative, i).lo - delta);
            }
        }
    }
    return assemble(std::move(lower), std::move(upper), grid_);
}

Candidate CandidateGenerator::next() {
    const std::size_t kind = calls_++ % 8;
    switch (kind) {
        case 0:
        case 7: return classify(random_in_band(), CandidateOrigin::in_band);
        case 1: {
            const FuzzyNumber a = random_in_band();
            const FuzzyNumber b = random_in_band();
            return classify(blend(a, b, uniform(0.0, 1.0)), CandidateOrigin::band_blend);
        }
        case 2: return classify(random_envelope(), CandidateOrigin::envelope);
        case 3: return classify(pushed(true), CandidateOrigin::pushed_out);
        case 4: return classify(pushed(false), CandidateOrigin::pushed_in);
        case 5: {
            const double delta = uniform(2.0, 300.0) * outside_margin_;
            const double s = uniform(0.0, 1.0) < 0.5 ? -delta : delta;
            return classify(translate(random_in_band(), s), CandidateOrigin::translated);
        }
        default:
            return classify(make_crisp_point(uniform(values_.lo, values_.hi), grid_),
                            CandidateOrigin::crisp_point);
    }
}

std::vector<Candidate> CandidateGenerator::pool(std::size_t budget) {
    std::vector<Candidate> out;
    for (auto& c : deterministic()) {
        if (c.membership != Membership::ambiguous) out.push_back(std::move(c));
    }
    for (std::size_t i = 0; i < budget; ++i) {
        Candidate c = next();
        if (c.membership != Membership::ambiguous) out.push_back(std::move(c));
    }
    return out;
}

OneMedianSearch brute_force_one_median(const FuzzySample& sample, CandidateGenerator& generator,
                                       std::size_t budget, double slack) {
    if (budget < 1) throw InvalidParameter("brute-force budget must be at least 1");
    OneMedianSearch search;
    search.pool = generator.pool(budget);
    std::vector<FuzzyNumber> numbers;
    numbers.reserve(search.pool.size());
    for (const auto& c : search.pool) numbers.push_back(c.number);
    search.result = brute_force_one_median(sample, numbers, slack);
    return search;
}

}  // namespace fdepth
