#include <doctest.h>

#include <cmath>
#include <numbers>

#include "grsum/error.hpp"
#include "grsum/series.hpp"

using namespace grsum;

TEST_CASE("zeta") {
    CHECK(std::abs(zeta(2.0) - std::numbers::pi * std::numbers::pi / 6.0) < 1e-10);
    CHECK(std::abs(zeta(4.0) - std::pow(std::numbers::pi, 4) / 90.0) < 1e-10);
    CHECK(std::abs(zeta(3.0) - 1.2020569031595942) < 1e-10);
    CHECK_THROWS_AS(zeta(1.0), InvalidArgument);
}

TEST_CASE("c_series") {
    const auto one = c_series(1, 2.0, 100000);
    REQUIRE(one.target.has_value());
    CHECK(std::abs(*one.target - 6.0 / (std::numbers::pi * std::numbers::pi)) < 1e-12);
    CHECK(one.abs_error < 1e-3);
    CHECK(one.terms_used == 100000);
    const auto six = c_series(6, 2.0, 100000);
    CHECK(std::abs(*six.target - 12.0 / (6.0 * zeta(2.0))) < 1e-12);
    CHECK(six.abs_error < 1e-3);
    const auto cube = c_series(1, 3.0, 10000);
    CHECK(std::abs(*cube.target - 1.0 / zeta(3.0)) < 1e-12);
    CHECK(cube.abs_error < 1e-6);
    // error shrinks with N once past the first few terms
    double last = c_series(1, 2.0, 100).abs_error;
    for (std::uint64_t n : {1000, 10000, 100000}) {
        const double e = c_series(1, 2.0, n).abs_error;
        CHECK(e <= last);
        last = e;
    }
}

TEST_CASE("g decomposition") {
    const auto m1 = g_decomposition(3, 2.0, 1, 300);
    const auto c = c_series(3, 2.0, 300);
    CHECK(m1.parts.size() == 1);
    CHECK(m1.term_mismatches.empty());
    CHECK(std::abs(m1.total.partial_sum - c.partial_sum) < 1e-12);
    for (std::int64_t m : {2, 3}) {
        const auto g = g_decomposition(m == 2 ? 1 : 2, 2.0, m, 400);
        CHECK(g.parts.size() == static_cast<std::size_t>(m));
        CHECK(g.term_mismatches.empty());
        CHECK(g.total.abs_error < 1e-3);
    }
}

TEST_CASE("f_alpha_s") {
    const auto s1 = f_alpha_s(1, 2.0, 1, 5000);
    CHECK(std::abs(s1.result.partial_sum - 1.0 / zeta(3.0)) < 1e-6);
    for (auto [s, t] : {std::pair<std::int64_t, std::int64_t>{2, 0}, {3, 1}}) {
        const auto f = f_alpha_s(t, 2.0, s, 5000);
        CHECK(f.result.abs_error < 1e-3);
    }
    CHECK_THROWS_AS(f_alpha_s(0, 1.0, 2, 100), InvalidArgument);
}

TEST_CASE("CSV rendering") {
    CHECK(series_csv_header() == "series,n,r_or_alpha,s,t,N,partial_sum,target,abs_error");
    TruncatedSeriesResult r;
    r.partial_sum = 0.5;
    r.terms_used = 10;
    CHECK(series_csv_row("c", 1, 2.0, std::nullopt, std::nullopt, r) == "c,1,2,,,10,0.5,,0");
}
