#include "grsum/numtheory.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "grsum/error.hpp"

namespace grsum {

namespace {

void require_positive(std::int64_t k, const char* what) {
    if (k < 1) {
        throw InvalidArgument(std::string(what) + ": argument must be >= 1, got " + std::to_string(k));
    }
}

} // namespace

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    require_positive(n, "factorize");
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) {
            continue;
        }
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) {
        out.emplace_back(n, 1);
    }
    return out;
}

std::vector<std::int64_t> divisors(std::int64_t k) {
    require_positive(k, "divisors");
    std::vector<std::int64_t> out{1};
    for (auto [p, e] : factorize(k)) {
        const std::size_t base = out.size();
        std::int64_t pk = 1;
        for (int i = 0; i < e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) {
                out.push_back(out[j] * pk);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int moebius(std::int64_t k) {
    require_positive(k, "moebius");
    int mu = 1;
    for (auto [p, e] : factorize(k)) {
        if (e > 1) {
            return 0;
        }
        mu = -mu;
    }
    return mu;
}

std::int64_t euler_phi(std::int64_t k) {
    require_positive(k, "euler_phi");
    std::int64_t phi = k;
    for (auto [p, e] : factorize(k)) {
        phi = phi / p * (p - 1);
    }
    return phi;
}

std::int64_t smallest_prime_factor(std::int64_t k) {
    if (k < 2) {
        throw InvalidArgument("smallest_prime_factor: argument must be >= 2");
    }
    return factorize(k).front().first;
}

bool is_prime(std::int64_t n) {
    if (n < 2) {
        return false;
    }
    auto f = factorize(n);
    return f.size() == 1 && f.front().second == 1;
}

std::int64_t gcd_mod(std::int64_t k, std::int64_t t) {
    require_positive(k, "gcd_mod");
    std::int64_t r = mod_floor(t, k);
    return r == 0 ? k : std::gcd(k, r);
}

std::int64_t ramanujan_c(std::int64_t k, std::int64_t t) {
    require_positive(k, "ramanujan_c");
    const std::int64_t g = gcd_mod(k, t);
    std::int64_t sum = 0;
    for (std::int64_t d : divisors(g)) {
        sum += moebius(k / d) * d;
    }
    return sum;
}

Integer divisor_sigma(unsigned r, std::int64_t n) {
    require_positive(n, "divisor_sigma");
    Integer sum = 0;
    for (std::int64_t d : divisors(n)) {
        Integer term;
        mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(d), r);
        sum += term;
    }
    return sum;
}

int binary_weight(std::uint64_t d) {
    return std::popcount(d);
}

} // namespace grsum
