#include <doctest.h>

#include <random>

#include "grsum/error.hpp"
#include "grsum/numtheory.hpp"
#include "helpers.hpp"

using namespace grsum;

TEST_CASE("restricted and parity products") {
    CHECK(restricted_qproduct(0) == DensePoly::one());
    const DensePoly q4 = restricted_qproduct(4);
    CHECK(std::vector<Rational>(q4.coeffs().begin(), q4.coeffs().end()) == Rs({1, -1, -1, 0, 0, 2, 0, 0, -1, -1, 1}));
    CHECK(restricted_qproduct(5).eval_at_one().is_zero());
    const DensePoly p4 = parity_product(4);
    CHECK(std::vector<Rational>(p4.coeffs().begin(), p4.coeffs().end()) == Rs({1, 1, 1, 2, 2, 2, 2, 2, 1, 1, 1}));
    for (unsigned m = 0; m <= 10; ++m) {
        CHECK(parity_product(m).eval_at_one() == Rational(1L << m));
    }
}

TEST_CASE("cyclic_reduce worked examples") {
    const DensePoly q5 = restricted_qproduct(5);
    CHECK(as_vector(cyclic_reduce(q5, 12)) == Rs({1, 0, 0, -1, 0, 1, 1, 1, -1, -1, -1, 0}));
    CHECK(as_vector(cyclic_reduce(q5, 6)) == Rs({2, 1, -1, -2, -1, 1}));
    const DensePoly low = DensePoly::from_integers(std::vector<long long>{3, 0, -2});
    CHECK(as_vector(cyclic_reduce(low, 5)) == Rs({3, 0, -2, 0, 0}));
    CHECK_THROWS_AS(cyclic_reduce(q5, 0), InvalidArgument);
}

TEST_CASE("remainder_poly examples") {
    CHECK(as_vector(remainder_poly(12, 6, 0)) == Rs({1, 0, 0, -1, 0, 1, 1, 1, -1, -1, -1, 0}));
    CHECK(as_vector(remainder_poly(6, 1, 1)) ==
          std::vector<Rational>{R("1/3"), R("1/6"), R("-1/6"), R("-1/3"), R("-1/6"), R("1/6")});
    CHECK(as_vector(remainder_poly(6, 1, 0)) == Rs({1, 0, 0, 0, 0, 0}));
    const CyclicPoly r = remainder_poly(12, 6, 0);
    CHECK(coeff(r, 3) == Rational(-1));
    CHECK(coeff(r, 9) == Rational(-1));
    CHECK(coeff(r, 12) == coeff(r, 0));
    CHECK(coeff(r, -3) == coeff(r, 9));
    CHECK_THROWS_AS(remainder_poly(6, 7, 0), InvalidArgument);
    CHECK_THROWS_AS(remainder_poly(6, 0, 0), InvalidArgument);
}

TEST_CASE("remainder_poly properties") {
    for (std::size_t k = 1; k <= 24; ++k) {
        for (std::size_t s = 1; s <= k; ++s) {
            Rational sum;
            const CyclicPoly r = remainder_poly(k, s, 0);
            for (const Rational& c : r.coeffs()) {
                sum += c;
            }
            CHECK(sum == Rational(s == 1 ? 1 : 0));
        }
    }
    for (std::size_t k = 2; k <= 40; ++k) {
        const CyclicPoly r = remainder_poly(k, k, 0);
        for (std::int64_t t = 0; t < static_cast<std::int64_t>(k); ++t) {
            CHECK(r.coeff(t) == Rational(static_cast<long>(ramanujan_c(static_cast<std::int64_t>(k), t))));
        }
    }
    for (std::size_t k = 1; k <= 12; ++k) {
        for (std::size_t s = 1; s <= k; ++s) {
            CHECK(remainder_poly(k, s, 2) == remainder_poly(k, s, 1));
            CHECK(remainder_poly(k, s, 3) == remainder_poly(k, s, 1));
        }
    }
}

TEST_CASE("reduction is a ring homomorphism") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t k = 1 + static_cast<std::size_t>(trial % 24);
        std::vector<Rational> a(1 + static_cast<std::size_t>(trial % 37));
        std::vector<Rational> b(1 + static_cast<std::size_t>((trial * 7) % 29));
        for (auto& x : a) {
            x = Rational(coef(rng));
        }
        for (auto& x : b) {
            x = Rational(Integer(coef(rng)), Integer(3));
        }
        const DensePoly pa(a);
        const DensePoly pb(b);
        CHECK(cyclic_reduce(pa * pb, k) == cyclic_reduce(pa, k) * cyclic_reduce(pb, k));
    }
}

TEST_CASE("cyclic products match reduced dense products") {
    for (unsigned m = 0; m <= 12; ++m) {
        for (std::size_t k = 1; k <= 15; ++k) {
            CHECK(cyclic_qproduct(m, k) == cyclic_reduce(restricted_qproduct(m), k));
            CHECK(cyclic_parity_product(m, k) == cyclic_reduce(parity_product(m), k));
        }
    }
}

TEST_CASE("CyclicPoly JSON round trip") {
    const CyclicPoly r = remainder_poly(6, 2, 1);
    const std::string json = to_json(r);
    CHECK(json.find("\"den\":\"6\"") != std::string::npos);
    CHECK(cyclic_poly_from_json(json) == r);

    const CyclicPoly big(std::vector<Rational>{R("-98765432109876543210/3"), R("0")});
    CHECK(cyclic_poly_from_json(to_json(big)) == big);

    CHECK_THROWS_AS(cyclic_poly_from_json("{\"k\":2,\"coeffs\":[{\"num\":\"1\",\"den\":\"1\"}]}"), InvalidArgument);
    CHECK_THROWS_AS(cyclic_poly_from_json("not json"), InvalidArgument);
    CHECK_THROWS_AS(cyclic_poly_from_json("{\"k\":1,\"coeffs\":[{\"num\":\"1\",\"den\":\"0\"}]}"), InvalidArgument);
}
