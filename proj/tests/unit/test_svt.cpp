#include <doctest.h>

#include <json.hpp>

#include "grsum/brute_force.hpp"
#include "grsum/error.hpp"
#include "grsum/grs.hpp"
#include "grsum/svt.hpp"
#include "helpers.hpp"

using namespace grsum;

TEST_CASE("enumerate_svt examples") {
    CHECK(enumerate_svt({4, 9, 5, 0}) == SvtCounts{2, 0});
    CHECK(enumerate_svt({4, 9, 2, 0}) == SvtCounts{0, 1});
    CHECK(enumerate_svt({0, 5, 0, 0}) == SvtCounts{1, 0});
    CHECK(enumerate_svt({5, 9, 0, 0}) == SvtCounts{2, 2});
    CHECK(enumerate_svt({4, 9, -4, 0}) == enumerate_svt({4, 9, 5, 0}));
    CHECK_THROWS_AS(enumerate_svt({31, 9, 0, 0}), CapacityError);
    CHECK_THROWS_AS(enumerate_svt({4, 0, 0, 0}), InvalidArgument);
}

TEST_CASE("enumerate_svt does not depend on worker count") {
    for (std::int64_t n : {7, 13, 18}) {
        for (std::int64_t t : {0, 3, 11}) {
            const SvtCounts one = enumerate_svt({n, 2 * n + 1, t, 0}, 1);
            CHECK(enumerate_svt({n, 2 * n + 1, t, 0}, 4) == one);
            CHECK(enumerate_svt({n, 2 * n + 1, t, 0}, 7) == one);
        }
    }
}

TEST_CASE("eta") {
    const std::vector<long> eta9{2, 2, 1, 2, 2, 2, 2, 2, 1};
    for (std::int64_t t = 0; t < 9; ++t) {
        CHECK(eta(9, t, 5) == eta9[static_cast<std::size_t>(t)]);
    }
    CHECK(eta(7, 0, 1) == 1);
    CHECK(eta(7, 3, 1) == 0);
    for (std::int64_t k = 1; k <= 20; ++k) {
        for (std::int64_t s = 1; s <= 12; ++s) {
            Integer total = 0;
            for (std::int64_t t = 0; t < k; ++t) {
                total += eta(k, t, s);
            }
            CHECK(total == Integer(1L << (s - 1)));
        }
    }
    CHECK(eta_recurrences_check(9, 8).passed());
    CHECK(eta_recurrences_check(15, 10).passed());
    CHECK_THROWS_AS(eta_recurrences_check(2, 4), InvalidArgument);
}

TEST_CASE("difference and sum against brute force") {
    for (std::int64_t n = 0; n <= 10; ++n) {
        for (std::int64_t k = 1; k <= 2 * n + 3; ++k) {
            for (std::int64_t t = 0; t < k; ++t) {
                const SvtCounts c = enumerate_svt({n, k, t, 0});
                const Integer even(static_cast<unsigned long>(c.size0));
                const Integer odd(static_cast<unsigned long>(c.size1));
                CHECK(even + odd == eta(k, t, n + 1));
                CHECK(even - odd == parity_difference(k, t, n));
                if (n + 1 <= k) {
                    CHECK(Rational(Integer(even - odd)) == sigma(k, SumKind::direct, t, n + 1));
                }
            }
        }
    }
}

TEST_CASE("closed-form total") {
    CHECK(svt_total_closed_form(4, 0) == 2);
    CHECK(svt_total_closed_form(4, 8) == 1);
    CHECK(svt_total_closed_form(4, 2) == 1);
    for (std::int64_t s = 1; s <= 16; ++s) {
        for (std::int64_t t = 0; t < 2 * s + 1; ++t) {
            CHECK(svt_total_closed_form(s, t) == eta(2 * s + 1, t, s + 1));
        }
    }
    // printed (3d+1) translate is not integral at d = 3
    CHECK_FALSE(svt_total_closed_form_printed(4, 0).has_value());
}

TEST_CASE("quadratic formula") {
    CHECK(sigma_quadratic(4, 5) == Rational(2));
    CHECK(sigma_quadratic(4, 2) == Rational(-1));
    CHECK(sigma_quadratic(4, 0) == Rational(0));
    for (std::int64_t s : {3, 4, 7, 8, 11, 12, 15, 16}) {
        for (std::int64_t t = 0; t < 2 * s + 1; ++t) {
            CHECK(sigma_quadratic(s, t) == sigma(2 * s + 1, SumKind::direct, t, s + 1));
        }
    }
    CHECK_THROWS_AS(sigma_quadratic(5, 0), InvalidArgument);
}

TEST_CASE("svt_size") {
    CHECK(svt_size(4, 0, 5, 0) == enumerate_svt({4, 9, 5, 0}).size0);
    CHECK(svt_size(4, 0, 5, 0) == 2);
    CHECK(svt_size(4, 0, 2, 1) == 1);
    CHECK(svt_size(4, 1, 0, 0) == enumerate_svt({5, 9, 0, 0}).size0);
    for (std::int64_t s : {4, 7, 8}) {
        for (std::int64_t delta = -3; delta <= 3; ++delta) {
            for (std::int64_t t = 0; t < 2 * s + 1; ++t) {
                const SvtCounts c = enumerate_svt({s + delta, 2 * s + 1, t, 0});
                CHECK(svt_size(s, delta, t, 0) == c.size0);
                CHECK(svt_size(s, delta, t, 1) == c.size1);
                CHECK(svt_size(s, delta, t, 0) >= 0);
            }
        }
    }
    CHECK_THROWS_AS(svt_size(4, 4, 0, 0), InvalidArgument);
    CHECK_THROWS_AS(svt_size(4, 0, 0, 2), InvalidArgument);
    CHECK_THROWS_AS(svt_size(2, -3, 0, 0), InvalidArgument);
}

TEST_CASE("crosschecked size report") {
    const SvtSizeReport rep = svt_size_crosschecked(4, 0, 2, 1);
    CHECK(rep.size == 1);
    CHECK(rep.methods_agree());
    REQUIRE(rep.brute_force.has_value());
    REQUIRE(rep.closed_form_total.has_value());
    const auto j = nlohmann::json::parse(rep.to_json());
    CHECK(j["size"] == 1);
    CHECK(j["k"] == 9);
    CHECK(j["methods"]["brute_force"] == 1);

    const SvtSizeReport off = svt_size_crosschecked(4, 1, 0, 0);
    CHECK(off.methods_agree());
    CHECK_FALSE(off.closed_form_total.has_value());

    // beyond the brute-force limit only the exact routes run
    const SvtSizeReport big = svt_size_crosschecked(40, 0, 3, 0);
    CHECK_FALSE(big.brute_force.has_value());
    CHECK(big.methods_agree());
}
