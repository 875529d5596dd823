#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "grsum/error.hpp"
#include "grsum/numtheory.hpp"

using namespace grsum;

TEST_CASE("divisors, moebius, phi") {
    CHECK(divisors(1) == std::vector<std::int64_t>{1});
    CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(9) == std::vector<std::int64_t>{1, 3, 9});
    CHECK(moebius(1) == 1);
    CHECK(moebius(6) == 1);
    CHECK(moebius(12) == 0);
    CHECK(moebius(30) == -1);
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(6) == 2);
    CHECK(euler_phi(9) == 6);
    CHECK_THROWS_AS(divisors(0), InvalidArgument);
    CHECK_THROWS_AS(moebius(-3), InvalidArgument);
}

TEST_CASE("ramanujan_c examples") {
    const std::vector<std::int64_t> row6{2, 1, -1, -2, -1, 1};
    for (int t = 0; t < 6; ++t) {
        CHECK(ramanujan_c(6, t) == row6[static_cast<std::size_t>(t)]);
    }
    CHECK(ramanujan_c(9, 0) == 6);
    CHECK(ramanujan_c(9, 3) == -3);
    CHECK(ramanujan_c(1, 17) == 1);
    CHECK(gcd_mod(7, 0) == 7);
}

TEST_CASE("ramanujan_c properties") {
    for (std::int64_t k = 1; k <= 60; ++k) {
        std::int64_t row_sum = 0;
        for (std::int64_t t = -2 * k; t < 2 * k; ++t) {
            CHECK(ramanujan_c(k, t) == ramanujan_c(k, mod_floor(t, k)));
            CHECK(ramanujan_c(k, t) == ramanujan_c(k, k - t));
        }
        for (std::int64_t t = 0; t < k; ++t) {
            row_sum += ramanujan_c(k, t);
        }
        if (k >= 2) {
            CHECK(row_sum == 0);
        }
    }
    for (std::int64_t k = 1; k <= 200; ++k) {
        CHECK(ramanujan_c(k, 0) == euler_phi(k));
    }
    // Root-of-unity definition, summed directly.
    for (std::int64_t k = 1; k <= 40; ++k) {
        for (std::int64_t t = 0; t < k; ++t) {
            double sum = 0.0;
            for (std::int64_t j = 1; j <= k; ++j) {
                if (std::gcd(j, k) == 1) {
                    sum += std::cos(2.0 * std::numbers::pi * static_cast<double>(j * t) / static_cast<double>(k));
                }
            }
            CHECK(std::abs(sum - static_cast<double>(ramanujan_c(k, t))) < 1e-9);
        }
    }
}

TEST_CASE("divisor_sigma and binary_weight") {
    CHECK(divisor_sigma(1, 6) == 12);
    CHECK(divisor_sigma(0, 12) == 6);
    CHECK(divisor_sigma(2, 4) == 21);
    CHECK(binary_weight(0) == 0);
    CHECK(binary_weight(3) == 2);
    CHECK(binary_weight(5) == 2);
}

TEST_CASE("factorization helpers") {
    CHECK(factorize(360) == std::vector<std::pair<std::int64_t, int>>{{2, 3}, {3, 2}, {5, 1}});
    CHECK(smallest_prime_factor(91) == 7);
    CHECK(smallest_prime_factor(97) == 97);
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK(mod_floor(-1, 6) == 5);
}
