#pragma once

/**
 * @file svt.hpp
 * @brief Sizes of Shifted Varshamov-Tenengolts codes.
 *
 * SVT_{t,r}(n, k) is the set of binary words (b_1, ..., b_n) with position
 * sum sum_j j b_j = t (mod k) and Hamming weight = r (mod 2). Word length n
 * is the primitive parameter throughout; the code SVT(s, 2s+1) studied in
 * the closed forms is word length n = s with modulus k = 2s + 1.
 *
 * For word length n the parity-blind count is eta_k(t; n+1) (coefficient of
 * prod_{l<=n}(1 + q^l) mod 1 - q^k) and the parity difference is
 * sigma^(0)_k(t; n+1) (coefficient of (q)_n mod 1 - q^k).
 */

#include <cstdint>
#include <optional>
#include <string>

#include "grsum/rational.hpp"
#include "grsum/report.hpp"

namespace grsum {

struct SvtParams {
    std::int64_t n = 0; ///< word length
    std::int64_t k = 1; ///< modulus
    std::int64_t t = 0; ///< residue, reduced mod k on use
    int r = 0;          ///< weight parity
};

struct SvtCounts {
    std::uint64_t size0 = 0;
    std::uint64_t size1 = 0;
    friend bool operator==(const SvtCounts&, const SvtCounts&) = default;
};

/// Largest word length accepted by enumerate_svt.
inline constexpr std::int64_t max_enumeration_length = 30;

/// Exhaustive count over all 2^n words; the word space is split across
/// `workers` threads and merged by addition. Throws CapacityError for n > 30.
SvtCounts enumerate_svt(const SvtParams& params, unsigned workers = 1);

/// eta_k(t; s): words of length s - 1 with position sum = t (mod k). s >= 1.
Integer eta(std::int64_t k, std::int64_t t, std::int64_t s);

/// sigma^(0)_k(t; n+1) for any word length n >= 0 (zero once n >= k).
Integer parity_difference(std::int64_t k, std::int64_t t, std::int64_t n);

/// Forward eta recurrence for all 1 <= s <= s_max, and the backward one
/// eta(t;s) = (1/2) sum_j (-1)^j eta(t - js; s+1). Rejects even k.
VerificationReport eta_recurrences_check(std::int64_t k, std::int64_t s_max);

/// |SVT_{t,0}(s,2s+1)| + |SVT_{t,1}(s,2s+1)| from the divisor-sum closed form
/// (1/k) sum_{d|k} (-1)^{(d-I)/4} 2^{(k-d)/(2d)} c_d((d-I)(3d+I)/16 - t),
/// I = 1 if 4 | d-1 and -1 otherwise. Exact integer arithmetic.
Integer svt_total_closed_form(std::int64_t s, std::int64_t t);

/// The same sum with the translate (d-I)(3d+1)/16 taken literally. Diagnostic
/// only; empty when some translate is not an integer (e.g. d = 3 gives 5/2).
std::optional<Rational> svt_total_closed_form_printed(std::int64_t s, std::int64_t t);

/// sigma^(0)_{2s+1}(t; s+1) = (1/k) sum_j c_k(j^2 + s(s+1)/4 - t), requiring
/// 4 | s or 4 | s+1. When k is a perfect square the value
/// c_k(s(s+1)/4 - t) / sqrt(k) is computed too and must agree.
Rational sigma_quadratic(std::int64_t s, std::int64_t t);

/// The same sum with c_k(t + j^2 + s(s+1)/4). Diagnostic only.
Rational sigma_quadratic_plus_t(std::int64_t s, std::int64_t t);

/// |SVT_{t,r}(s + delta, 2s + 1)| = (eta_k(t; s+1+delta) + (-1)^r sigma^(0)_k(t; s+1+delta)) / 2.
/// Requires |delta| <= 3, s + delta >= 0, r in {0, 1}.
Integer svt_size(std::int64_t s, std::int64_t delta, std::int64_t t, int r);

struct SvtSizeReport {
    std::int64_t s = 0;
    std::int64_t delta = 0;
    std::int64_t k = 0;
    std::int64_t t = 0;
    int parity = 0;
    Integer size;
    Integer eta_sigma;
    std::optional<Integer> brute_force;
    std::optional<Integer> closed_form_total;

    bool methods_agree() const;
    /// {"s", "delta", "k", "t", "parity", "size", "methods": {...}}
    std::string to_json() const;
};

/// svt_size plus cross-checks: brute force when the word length is at most
/// `brute_force_limit`, closed forms when delta = 0 (the quadratic sigma is
/// used additionally when 4 | s or 4 | s+1).
SvtSizeReport svt_size_crosschecked(std::int64_t s, std::int64_t delta, std::int64_t t, int r,
                                    std::int64_t brute_force_limit = 24, unsigned workers = 1);

} // namespace grsum
