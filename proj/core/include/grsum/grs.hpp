#pragma once

/**
 * @file grs.hpp
 * @brief Generalized Ramanujan sums sigma^(b)_k(t; s).
 *
 * sigma^(b)_k(t; s) is coefficient t of k^{-b} (q)_{k-1}^b (q)_{s-1} modulo
 * 1 - q^k, for 1 <= s <= k. Only b = 0 (direct sum over all k-th roots of
 * unity) and b = 1 (coprime sum over primitive roots) are distinct: every
 * b >= 1 gives the same values.
 *
 * Several independent routes are provided so they can be checked against
 * each other: the forward recurrence table, the backward recurrence, the
 * Ramanujan-sum convolution and the Dirichlet convolution between b = 0
 * and b = 1.
 */

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "grsum/rational.hpp"

namespace grsum {

enum class SumKind : unsigned {
    direct = 0,  ///< b = 0
    coprime = 1, ///< b >= 1
};

/// Maps b to its kind; all b >= 1 collapse to coprime.
constexpr SumKind sum_kind(unsigned b) { return b == 0 ? SumKind::direct : SumKind::coprime; }
constexpr unsigned b_of(SumKind kind) { return static_cast<unsigned>(kind); }

/// All values sigma^(b)_k(t; s), 1 <= s <= k, 0 <= t < k. Immutable once built.
class SigmaTable {
public:
    SigmaTable(std::int64_t k, SumKind kind, std::vector<std::vector<Rational>> rows);

    std::int64_t k() const { return k_; }
    SumKind kind() const { return kind_; }

    /// Row s (1-based), length k.
    std::span<const Rational> row(std::int64_t s) const;
    /// Entry for row s, column t mod k.
    const Rational& at(std::int64_t s, std::int64_t t) const;

private:
    std::int64_t k_;
    SumKind kind_;
    std::vector<std::vector<Rational>> rows_;
};

/// Streams rows s = 1..k of the forward recurrence
///     sigma(t; s+1) = sigma(t; s) - sigma(t - s; s)
/// without materializing the table; memory is O(k).
void for_each_forward_row(std::int64_t k, SumKind kind,
                          const std::function<void(std::int64_t s, std::span<const Rational> row)>& visit);

/// Full table by the forward recurrence. Linear in the number of entries.
SigmaTable sigma_table_forward(std::int64_t k, SumKind kind);

/// Shared, lazily built forward table. Safe to call from several threads.
std::shared_ptr<const SigmaTable> cached_table(std::int64_t k, SumKind kind);

/// sigma^(b)_k(t; s); t is reduced modulo k. Rejects s outside [1, k].
Rational sigma(std::int64_t k, SumKind kind, std::int64_t t, std::int64_t s);

/**
 * Backward recurrence: reconstructs row s from row s + 1 only,
 *     sigma(t; s) = -(1/k) sum_{j=1}^{k-1} j sigma(t - js; s + 1)
 * plus, for the direct sum when s | k, the term (s/k) c_s(t) contributed by
 * the primitive s-th roots of unity (where 1 - xi^s vanishes).
 * Requires 1 <= s <= k - 1.
 */
Rational sigma_backward(std::int64_t k, SumKind kind, std::int64_t t, std::int64_t s);

/// Coprime sum via (1/k) sum_j a_j c_k(t - j), a_j the coefficients of (q)_{s-1}.
/// Accepts any s >= 1 (for s > k the value is 0).
Rational sigma_via_c_convolution(std::int64_t k, std::int64_t t, std::int64_t s);

/// Coprime sum for s <= 3 written with binary weights:
///     (1/k) sum_{delta=0}^{s(s-1)/2} (-1)^{wt(delta)} c_k(t - delta).
Rational sigma_via_binary_weight(std::int64_t k, std::int64_t t, std::int64_t s);

/// sigma with the convention that rows past the modulus vanish: 0 when s > k.
Rational sigma_or_zero(std::int64_t k, SumKind kind, std::int64_t t, std::int64_t s);

/// (sum_{d|k} d sigma^(1)_d(t;s) / k,  sum_{d|k} mu(k/d) d sigma^(0)_d(t;s) / k).
/// The first equals sigma^(0)_k(t;s), the second sigma^(1)_k(t;s).
std::pair<Rational, Rational> dirichlet_updown(std::int64_t k, std::int64_t t, std::int64_t s);

/// t - (p+1)/2, the value of sigma^(b)_p(t; p-1) for 1 <= t <= p. Rejects composite p and p < 3.
Rational prime_closed_form(std::int64_t p, std::int64_t t);

/// For s | k: (sum_j sigma^(0)_k(js + t; s), sum_j sigma^(1)_k(js + t; s)), j = 0..k/s-1.
/// The first equals c_s(t); the second is 0 for s < k and c_k(t) for s = k.
std::pair<Rational, Rational> subdivisor_decomposition(std::int64_t k, std::int64_t s, std::int64_t t);

/// Smallest s0 such that rows s >= s0 of the direct and coprime tables coincide.
std::int64_t integrality_threshold(std::int64_t k);

/// Row s of the direct table for modulus k as integers, computed for a single
/// row in O(sk) without building the table. Any s >= 1 (rows past k are zero).
std::vector<Integer> direct_row(std::int64_t k, std::int64_t s);

} // namespace grsum
