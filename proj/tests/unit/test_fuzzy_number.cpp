#include <doctest.h>

#include <limits>
#include <random>

#include "fuzzydepth/errors.hpp"
#include "fuzzydepth/fuzzy_number.hpp"
#include "fuzzydepth/metrics.hpp"
#include "support.hpp"

using namespace fdepth;

TEST_CASE("alpha grid levels and location") {
    const AlphaGrid g(101);
    CHECK(g.intervals() == 100);
    CHECK(g.level(0) == 0.0);
    CHECK(g.level(100) == 1.0);
    CHECK(g.level(37) == doctest::Approx(0.37));
    const auto p = g.locate(0.375);
    CHECK(p.cell == 37);
    CHECK(p.offset == doctest::Approx(0.5));
    CHECK_FALSE(p.on_level);
    const auto q = g.locate(0.37);
    CHECK(q.on_level);
    CHECK(q.level == 37);
    CHECK(g.locate(1.0).on_level);
    CHECK(g.locate(1.0).level == 100);
    CHECK_THROWS_AS(AlphaGrid(1), InvalidParameter);
}

TEST_CASE("constructors produce the expected support functions") {
    const AlphaGrid g(11);
    const auto t = make_triangular(1, 2, 3, g);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double a = g.level(i);
        CHECK(t.support_at(Direction::positive, i) == doctest::Approx(3 - a).epsilon(1e-15));
        CHECK(t.support_at(Direction::negative, i) == doctest::Approx(-1 - a).epsilon(1e-15));
    }
    const auto tr = make_trapezoidal(0, 1, 4, 6, g);
    CHECK(tr.lower().back() == 1.0);
    CHECK(tr.upper().back() == 4.0);
    CHECK(tr.upper().front() == 6.0);
    const auto p = make_crisp_point(4, g);
    const auto iv = make_crisp_interval(-1, 2, g);
    for (std::size_t i = 0; i < g.size(); ++i) {
        CHECK(p.lower()[i] == 4.0);
        CHECK(p.upper()[i] == 4.0);
        CHECK(iv.lower()[i] == -1.0);
        CHECK(iv.upper()[i] == 2.0);
    }
    CHECK_THROWS_AS(make_triangular(3, 2, 1, g), Error);
    CHECK_THROWS_AS(make_crisp_interval(2, 1, g), Error);
}

TEST_CASE("validate rejects malformed arrays with a reason and level") {
    const AlphaGrid g(3);
    SUBCASE("not nested") {
        try {
            validate({0, -1, 0}, {2, 2, 1}, g);
            FAIL("expected ValidationError");
        } catch (const ValidationError& e) {
            CHECK(e.reason() == ValidationError::Reason::not_nested);
            CHECK(e.level() == 1);
        }
    }
    SUBCASE("empty cut") {
        try {
            validate({0, 1, 2}, {3, 2, 1.5}, g);
            FAIL("expected ValidationError");
        } catch (const ValidationError& e) {
            CHECK(e.reason() == ValidationError::Reason::empty_cut);
            CHECK(e.level() == 2);
        }
    }
    SUBCASE("not compact") {
        try {
            validate({0, 0, 0}, {1, std::numeric_limits<double>::infinity(), 1}, g);
            FAIL("expected ValidationError");
        } catch (const ValidationError& e) {
            CHECK(e.reason() == ValidationError::Reason::not_compact);
        }
    }
    CHECK_THROWS_AS(validate({0, 0}, {1, 1, 1}, g), InvalidParameter);
}

TEST_CASE("support_value interpolates and reproduces grid values") {
    const AlphaGrid g(5);
    std::mt19937_64 rng(3);
    const auto a = testing::random_grid_number(rng, g);
    for (Direction u : kDirections) {
        for (std::size_t i = 0; i < g.size(); ++i) {
            CHECK(support_value(a, u, g.level(i)) == a.support_at(u, i));
        }
        const double mid = 0.5 * (a.support_at(u, 1) + a.support_at(u, 2));
        CHECK(support_value(a, u, 0.5 * (g.level(1) + g.level(2))) == doctest::Approx(mid).epsilon(1e-14));
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
        CHECK(a.support_at(Direction::positive, i) >= -a.support_at(Direction::negative, i));
    }
    CHECK_THROWS_AS(support_value(a, Direction::positive, 1.5), DomainError);
    CHECK_THROWS_AS(support_value(a, Direction::positive, -0.1), DomainError);
}

TEST_CASE("blend examples") {
    const AlphaGrid g(101);
    const auto t = make_triangular(1, 2, 3, g);
    const auto i2 = make_crisp_point(2, g);
    CHECK(blend(t, i2, 1.0).approx_equal(t));
    CHECK(blend(make_crisp_point(0, g), i2, 0.5).approx_equal(make_crisp_point(1, g)));
    const auto c = blend(t, i2, 0.5);
    for (std::size_t i = 0; i < g.size(); ++i) {
        CHECK(c.upper()[i] == doctest::Approx(2.5 - g.level(i) / 2).epsilon(1e-14));
    }
    CHECK_THROWS_AS(blend(t, make_crisp_point(2, AlphaGrid(11)), 0.5), GridMismatch);
    CHECK_THROWS_AS(blend(t, i2, 1.5), InvalidParameter);
}

TEST_CASE("blend composes along a segment and realises triangle equality") {
    const AlphaGrid g(41);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int k = 0; k < 50; ++k) {
        const auto a = testing::random_grid_number(rng, g);
        const auto b = testing::random_grid_number(rng, g);
        const double lambda = unit(rng);
        const double mu = unit(rng);
        // Weight on the first argument multiplies when blending towards a fixed B.
        CHECK(blend(blend(a, b, mu), b, lambda).approx_equal(blend(a, b, lambda * mu), 1e-12));
        const auto c = blend(a, b, lambda);
        CHECK(std::abs(rho(a, b) - rho(a, c) - rho(c, b)) <= 1e-12);
    }
}

TEST_CASE("translate shifts every cut") {
    const AlphaGrid g(11);
    const auto t = translate(make_triangular(1, 2, 3, g), 2.5);
    CHECK(t.approx_equal(make_triangular(3.5, 4.5, 5.5, g)));
}
