#include <doctest.h>

#include <thread>

#include "grsum/brute_force.hpp"
#include "grsum/error.hpp"
#include "grsum/grs.hpp"
#include "grsum/numtheory.hpp"
#include "helpers.hpp"

using namespace grsum;

namespace {

// k = 6, rows s = 1..6.
const std::vector<std::vector<const char*>> table6_direct{
    {"1", "0", "0", "0", "0", "0"},   {"1", "-1", "0", "0", "0", "0"},   {"1", "-1", "-1", "1", "0", "0"},
    {"0", "-1", "-1", "0", "1", "1"}, {"1", "-1", "-2", "-1", "1", "2"}, {"2", "1", "-1", "-2", "-1", "1"},
};
const std::vector<std::vector<const char*>> table6_coprime{
    {"1/3", "1/6", "-1/6", "-1/3", "-1/6", "1/6"}, {"1/6", "-1/6", "-1/3", "-1/6", "1/6", "1/3"},
    {"0", "-1/2", "-1/2", "0", "1/2", "1/2"},      {"0", "-1", "-1", "0", "1", "1"},
    {"1", "-1", "-2", "-1", "1", "2"},             {"2", "1", "-1", "-2", "-1", "1"},
};

void check_table6(SumKind kind, const std::vector<std::vector<const char*>>& expected) {
    const SigmaTable table = sigma_table_forward(6, kind);
    for (std::int64_t s = 1; s <= 6; ++s) {
        for (std::int64_t t = 0; t < 6; ++t) {
            CHECK(table.at(s, t) == R(expected[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(t)]));
        }
    }
}

} // namespace

TEST_CASE("k = 6 tables") {
    check_table6(SumKind::direct, table6_direct);
    check_table6(SumKind::coprime, table6_coprime);
    CHECK(sigma(6, SumKind::direct, 2, 5) == Rational(-2));
    CHECK(sigma(6, SumKind::coprime, 3, 2) == R("-1/6"));
    CHECK(sigma(6, SumKind::coprime, 0, 3) == Rational(0));
    CHECK(sigma(6, SumKind::coprime, 9, 3) == sigma(6, SumKind::coprime, 3, 3));
    CHECK_THROWS_AS(sigma(6, SumKind::direct, 0, 7), InvalidArgument);
    CHECK(sigma_or_zero(6, SumKind::coprime, 0, 7) == Rational(0));
}

TEST_CASE("backward recurrence examples") {
    CHECK(sigma_backward(6, SumKind::coprime, 2, 4) == Rational(-1));
    CHECK(sigma_backward(6, SumKind::direct, 0, 5) == Rational(1));
    CHECK(sigma_backward(9, SumKind::direct, 5, 4) == remainder_poly(9, 4, 0).coeff(5));
    // s = 3 divides k = 6: needs the primitive cube-root correction.
    CHECK(sigma_backward(6, SumKind::direct, 3, 3) == Rational(1));
    CHECK_THROWS_AS(sigma_backward(6, SumKind::direct, 0, 6), InvalidArgument);
}

TEST_CASE("Ramanujan-sum convolution examples") {
    CHECK(sigma_via_c_convolution(6, 0, 2) == R("1/6"));
    CHECK(sigma_via_c_convolution(6, 1, 3) == R("-1/2"));
    for (std::int64_t t = 0; t < 10; ++t) {
        CHECK(sigma_via_c_convolution(10, t, 1) == Rational(Integer(ramanujan_c(10, t)), Integer(10)));
        CHECK(sigma_via_binary_weight(10, t, 3) == sigma(10, SumKind::coprime, t, 3));
    }
    CHECK_THROWS_AS(sigma_via_binary_weight(10, 0, 4), InvalidArgument);
}

TEST_CASE("Dirichlet convolution") {
    const auto [up, down] = dirichlet_updown(6, 0, 3);
    CHECK(up == Rational(1));
    CHECK(down == Rational(0));
    for (std::int64_t s = 2; s <= 7; ++s) {
        for (std::int64_t t = 0; t < 7; ++t) {
            const auto [u, d] = dirichlet_updown(7, t, s);
            CHECK(u == sigma(7, SumKind::direct, t, s));
            CHECK(d == sigma(7, SumKind::coprime, t, s));
        }
    }
}

TEST_CASE("prime closed form") {
    CHECK(prime_closed_form(5, 1) == Rational(-2));
    CHECK(prime_closed_form(5, 5) == Rational(2));
    CHECK(sigma(5, SumKind::direct, 0, 4) == Rational(2));
    CHECK(prime_closed_form(3, 2) == Rational(0));
    CHECK_THROWS_AS(prime_closed_form(9, 1), InvalidArgument);
    CHECK_THROWS_AS(prime_closed_form(2, 1), InvalidArgument);
}

TEST_CASE("subdivisor decomposition") {
    CHECK(sigma(12, SumKind::direct, 3, 6) == Rational(-1));
    CHECK(sigma(12, SumKind::direct, 9, 6) == Rational(-1));
    CHECK(subdivisor_decomposition(12, 6, 3) == std::pair<Rational, Rational>{Rational(-2), Rational(0)});
    CHECK(subdivisor_decomposition(6, 1, 0) == std::pair<Rational, Rational>{Rational(1), Rational(0)});
    CHECK(subdivisor_decomposition(20, 4, 2) == std::pair<Rational, Rational>{Rational(-2), Rational(0)});
    CHECK(subdivisor_decomposition(6, 6, 1).second == Rational(1));
    CHECK_THROWS_AS(subdivisor_decomposition(12, 5, 0), InvalidArgument);
}

TEST_CASE("integrality threshold") {
    CHECK(integrality_threshold(6) == 4);
    CHECK(integrality_threshold(9) == 4);
    CHECK(integrality_threshold(12) == 7);
    for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
        CHECK(integrality_threshold(p) == 2);
    }
    for (std::int64_t k = 2; k <= 30; ++k) {
        const std::int64_t p = smallest_prime_factor(k);
        CHECK(integrality_threshold(k) == k / p + 1);
        for (std::int64_t s = 1; s <= k; ++s) {
            for (std::int64_t t = 0; t < k; ++t) {
                // b = 1 denominators divide k
                CHECK((Integer(k) % sigma(k, SumKind::coprime, t, s).denominator()) == 0);
            }
        }
    }
    CHECK(sigma(6, SumKind::coprime, 0, 3) != sigma(6, SumKind::direct, 0, 3));
}

TEST_CASE("signed subset oracle agrees with table") {
    for (std::int64_t k = 1; k <= 14; ++k) {
        for (std::int64_t s = 1; s <= k; ++s) {
            const auto row = brute::signed_subset_row(k, s);
            const auto exact = direct_row(k, s);
            for (std::int64_t t = 0; t < k; ++t) {
                CHECK(sigma(k, SumKind::direct, t, s) == Rational(static_cast<long>(row[static_cast<std::size_t>(t)])));
                CHECK(exact[static_cast<std::size_t>(t)] == row[static_cast<std::size_t>(t)]);
            }
        }
    }
}

TEST_CASE("two-copy partition oracle agrees with k sigma^(1)") {
    for (std::int64_t k = 1; k <= 8; ++k) {
        for (std::int64_t s = 1; s <= k; ++s) {
            const auto counts = brute::signed_partition_row(k, s);
            for (std::int64_t t = 0; t < k; ++t) {
                CHECK(Rational(static_cast<long>(k)) * sigma(k, SumKind::coprime, t, s) ==
                      Rational(static_cast<long>(counts[static_cast<std::size_t>(t)])));
            }
        }
    }
}

TEST_CASE("row s = k is the Ramanujan row for both b") {
    for (std::int64_t k = 1; k <= 30; ++k) {
        for (SumKind kind : {SumKind::direct, SumKind::coprime}) {
            for (std::int64_t t = 0; t < k; ++t) {
                CHECK(sigma(k, kind, t, k) == Rational(static_cast<long>(ramanujan_c(k, t))));
            }
        }
    }
}

TEST_CASE("concurrent cache access returns one table") {
    std::vector<std::shared_ptr<const SigmaTable>> seen(8);
    {
        std::vector<std::jthread> pool;
        for (std::size_t i = 0; i < seen.size(); ++i) {
            pool.emplace_back([&seen, i] { seen[i] = cached_table(37, SumKind::coprime); });
        }
    }
    for (const auto& p : seen) {
        CHECK(p.get() == seen.front().get());
    }
}
