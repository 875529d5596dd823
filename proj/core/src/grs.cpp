#include "grsum/grs.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <mutex>
#include <string>

#include "grsum/error.hpp"
#include "grsum/numtheory.hpp"
#include "grsum/qpoly.hpp"

namespace grsum {

namespace {

void require_modulus(std::int64_t k) {
    if (k < 1) {
        throw InvalidArgument("modulus k must be >= 1, got " + std::to_string(k));
    }
}

void require_row(std::int64_t k, std::int64_t s) {
    require_modulus(k);
    if (s < 1 || s > k) {
        throw InvalidArgument("row s must satisfy 1 <= s <= k, got k=" + std::to_string(k) +
                              " s=" + std::to_string(s));
    }
}

std::size_t idx(std::int64_t t, std::int64_t k) {
    return static_cast<std::size_t>(mod_floor(t, k));
}

} // namespace

SigmaTable::SigmaTable(std::int64_t k, SumKind kind, std::vector<std::vector<Rational>> rows)
    : k_(k), kind_(kind), rows_(std::move(rows)) {
    if (static_cast<std::int64_t>(rows_.size()) != k_) {
        throw InvalidArgument("sigma table must have exactly k rows");
    }
    for (const auto& r : rows_) {
        if (static_cast<std::int64_t>(r.size()) != k_) {
            throw InvalidArgument("sigma table rows must have length k");
        }
    }
}

std::span<const Rational> SigmaTable::row(std::int64_t s) const {
    require_row(k_, s);
    return rows_[static_cast<std::size_t>(s - 1)];
}

const Rational& SigmaTable::at(std::int64_t s, std::int64_t t) const {
    require_row(k_, s);
    return rows_[static_cast<std::size_t>(s - 1)][idx(t, k_)];
}

void for_each_forward_row(std::int64_t k, SumKind kind,
                          const std::function<void(std::int64_t, std::span<const Rational>)>& visit) {
    require_modulus(k);
    std::vector<Rational> row(static_cast<std::size_t>(k));
    if (kind == SumKind::direct) {
        row[0] = 1;
    } else {
        const Rational kk(static_cast<long>(k));
        for (std::int64_t t = 0; t < k; ++t) {
            row[static_cast<std::size_t>(t)] = Rational(static_cast<long>(ramanujan_c(k, t))) / kk;
        }
    }
    visit(1, row);
    std::vector<Rational> next(row.size());
    for (std::int64_t s = 1; s < k; ++s) {
        for (std::int64_t t = 0; t < k; ++t) {
            next[static_cast<std::size_t>(t)] = row[static_cast<std::size_t>(t)] - row[idx(t - s, k)];
        }
        row.swap(next);
        visit(s + 1, row);
    }
}

SigmaTable sigma_table_forward(std::int64_t k, SumKind kind) {
    std::vector<std::vector<Rational>> rows;
    rows.reserve(static_cast<std::size_t>(k > 0 ? k : 0));
    for_each_forward_row(k, kind, [&](std::int64_t, std::span<const Rational> r) {
        rows.emplace_back(r.begin(), r.end());
    });
    return SigmaTable(k, kind, std::move(rows));
}

std::shared_ptr<const SigmaTable> cached_table(std::int64_t k, SumKind kind) {
    require_modulus(k);
    using Future = std::shared_future<std::shared_ptr<const SigmaTable>>;
    static std::mutex mutex;
    static std::map<std::pair<std::int64_t, unsigned>, Future> cache;

    const auto key = std::make_pair(k, b_of(kind));
    std::promise<std::shared_ptr<const SigmaTable>> promise;
    Future future;
    bool builder = false;
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(key);
        if (it == cache.end()) {
            future = promise.get_future().share();
            cache.emplace(key, future);
            builder = true;
        } else {
            future = it->second;
        }
    }
    if (builder) {
        try {
            promise.set_value(std::make_shared<const SigmaTable>(sigma_table_forward(k, kind)));
        } catch (...) {
            promise.set_exception(std::current_exception());
            std::lock_guard lock(mutex);
            cache.erase(key);
        }
    }
    return future.get();
}

Rational sigma(std::int64_t k, SumKind kind, std::int64_t t, std::int64_t s) {
    require_row(k, s);
    return cached_table(k, kind)->at(s, t);
}

Rational sigma_or_zero(std::int64_t k, SumKind kind, std::int64_t t, std::int64_t s) {
    require_modulus(k);
    if (s > k) {
        return 0;
    }
    return sigma(k, kind, t, s);
}

Rational sigma_backward(std::int64_t k, SumKind kind, std::int64_t t, std::int64_t s) {
    require_modulus(k);
    if (s < 1 || s > k - 1) {
        throw InvalidArgument("sigma_backward: require 1 <= s <= k-1, got k=" + std::to_string(k) +
                              " s=" + std::to_string(s));
    }
    const auto table = cached_table(k, kind);
    Rational acc;
    for (std::int64_t j = 1; j < k; ++j) {
        acc += Rational(static_cast<long>(j)) * table->at(s + 1, t - j * s);
    }
    Rational value = -acc / Rational(static_cast<long>(k));
    if (kind == SumKind::direct && k % s == 0) {
        value += Rational(static_cast<long>(s * ramanujan_c(s, t))) / Rational(static_cast<long>(k));
    }
    return value;
}

namespace {

// Integer coefficients a_j of (q)_m, built once per m.
std::shared_ptr<const std::vector<Integer>> qproduct_coefficients(unsigned m) {
    static std::mutex mutex;
    static std::map<unsigned, std::shared_ptr<const std::vector<Integer>>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(m); it != cache.end()) {
            return it->second;
        }
    }
    const DensePoly a = restricted_qproduct(m);
    std::vector<Integer> out;
    out.reserve(a.coeffs().size());
    for (const Rational& c : a.coeffs()) {
        out.push_back(c.numerator());
    }
    auto built = std::make_shared<const std::vector<Integer>>(std::move(out));
    std::lock_guard lock(mutex);
    return cache.emplace(m, std::move(built)).first->second;
}

} // namespace

Rational sigma_via_c_convolution(std::int64_t k, std::int64_t t, std::int64_t s) {
    require_modulus(k);
    if (s < 1) {
        throw InvalidArgument("sigma_via_c_convolution: s must be >= 1");
    }
    const auto a = qproduct_coefficients(static_cast<unsigned>(s - 1));
    Integer acc = 0;
    for (std::size_t j = 0; j < a->size(); ++j) {
        const Integer& c = (*a)[j];
        if (c != 0) {
            acc += c * Integer(static_cast<long>(ramanujan_c(k, t - static_cast<std::int64_t>(j))));
        }
    }
    return Rational(acc, Integer(static_cast<long>(k)));
}

Rational sigma_via_binary_weight(std::int64_t k, std::int64_t t, std::int64_t s) {
    require_modulus(k);
    if (s < 1 || s > 3) {
        throw InvalidArgument("binary-weight form holds only for 1 <= s <= 3");
    }
    long acc = 0;
    for (std::int64_t delta = 0; delta <= s * (s - 1) / 2; ++delta) {
        const long sign = binary_weight(static_cast<std::uint64_t>(delta)) % 2 == 0 ? 1 : -1;
        acc += sign * static_cast<long>(ramanujan_c(k, t - delta));
    }
    return Rational(Integer(acc), Integer(static_cast<long>(k)));
}

std::pair<Rational, Rational> dirichlet_updown(std::int64_t k, std::int64_t t, std::int64_t s) {
    require_row(k, s);
    Rational up;
    Rational down;
    for (std::int64_t d : divisors(k)) {
        const Rational dd(static_cast<long>(d));
        up += dd * sigma_or_zero(d, SumKind::coprime, t, s);
        const int mu = moebius(k / d);
        if (mu != 0) {
            down += Rational(mu) * dd * sigma_or_zero(d, SumKind::direct, t, s);
        }
    }
    const Rational kk(static_cast<long>(k));
    return {up / kk, down / kk};
}

Rational prime_closed_form(std::int64_t p, std::int64_t t) {
    if (p < 3 || !is_prime(p)) {
        throw InvalidArgument("prime_closed_form: p must be an odd prime, got " + std::to_string(p));
    }
    if (t < 1 || t > p) {
        throw InvalidArgument("prime_closed_form: require 1 <= t <= p");
    }
    return Rational(static_cast<long>(t - (p + 1) / 2));
}

std::pair<Rational, Rational> subdivisor_decomposition(std::int64_t k, std::int64_t s, std::int64_t t) {
    require_row(k, s);
    if (k % s != 0) {
        throw InvalidArgument("subdivisor_decomposition: s must divide k");
    }
    const auto direct = cached_table(k, SumKind::direct);
    const auto coprime = cached_table(k, SumKind::coprime);
    Rational first;
    Rational second;
    for (std::int64_t j = 0; j < k / s; ++j) {
        first += direct->at(s, j * s + t);
        second += coprime->at(s, j * s + t);
    }
    return {first, second};
}

std::int64_t integrality_threshold(std::int64_t k) {
    if (k < 2) {
        throw InvalidArgument("integrality_threshold: k must be >= 2");
    }
    const auto direct = cached_table(k, SumKind::direct);
    const auto coprime = cached_table(k, SumKind::coprime);
    std::int64_t s0 = k;
    while (s0 > 1) {
        auto a = direct->row(s0 - 1);
        auto b = coprime->row(s0 - 1);
        if (!std::equal(a.begin(), a.end(), b.begin())) {
            break;
        }
        --s0;
    }
    return s0;
}

std::vector<Integer> direct_row(std::int64_t k, std::int64_t s) {
    require_modulus(k);
    if (s < 1) {
        throw InvalidArgument("direct_row: s must be >= 1");
    }
    std::vector<Integer> row(static_cast<std::size_t>(k));
    std::vector<Integer> next(row.size());
    row[0] = 1;
    for (std::int64_t l = 1; l < s; ++l) {
        const std::int64_t shift = l % k;
        for (std::int64_t i = 0; i < k; ++i) {
            next[static_cast<std::size_t>(i)] = row[static_cast<std::size_t>(i)] - row[idx(i - shift, k)];
        }
        row.swap(next);
    }
    return row;
}

} // namespace grsum
