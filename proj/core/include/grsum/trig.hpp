#pragma once

/**
 * @file trig.hpp
 * @brief Floating-point finite trigonometric sums and identity suites.
 *
 * Nothing here is ground truth: exact values come from grs.hpp and these
 * routines only measure how far a double-precision evaluation lands from them.
 * Angles are formed from an integer multiple reduced modulo the period before
 * a single multiplication by pi/k.
 */

#include <complex>
#include <cstdint>

#include "grsum/rational.hpp"
#include "grsum/report.hpp"

namespace grsum {

struct TrigSumSpec {
    std::int64_t k = 1;
    std::int64_t s = 1;
    std::int64_t t = 0;
    bool coprime_filter = false;
};

/// e^{2 pi i n / k}
std::complex<double> root_of_unity(std::int64_t n, std::int64_t k);

/// sin(n pi / k)
double sin_pi_frac(std::int64_t n, std::int64_t k);
/// cos(n pi / k)
double cos_pi_frac(std::int64_t n, std::int64_t k);

/// (1/k) sum_j alpha^{-jt} (1 - alpha^j)...(1 - alpha^{(s-1)j}) over all j, or
/// over j coprime to k when coprime_filter is set. Requires 1 <= s <= k.
std::complex<double> frequency_sigma(const TrigSumSpec& spec);

/// sum_{l=0}^{k-1} cos(2 pi l t / k) over l coprime to k.
double ramanujan_c_numeric(std::int64_t k, std::int64_t t);

/// sum over h = 1..k (optionally gcd(h,k) = 1) of prod_{l=1}^{s} sin(l h pi / k).
double sine_product_sum(std::int64_t k, std::int64_t s, bool coprime_filter);

/// Nearest a/k to x. Convenience only; never authoritative.
Rational round_to_denominator(double x, std::int64_t k);

/// sum sin^2(pi j/k) = k/2 (k >= 2) and its coprime twin (c_k(k) - c_k(k-1))/2 (k >= 1).
VerificationReport verify_sin2_identities(std::int64_t k_max, double tol);

/// The four sin sin cos / sin sin sin sums, 3 <= k <= k_max.
VerificationReport verify_sincos_identities(std::int64_t k_max, double tol);

/// Direct and coprime frequency sums against exact sigma^(0), sigma^(1) for all
/// 1 <= s <= k <= k_max, 0 <= t < k; imaginary parts must vanish too.
VerificationReport verify_frequency_form(std::int64_t k_max, double tol);

/**
 * Product of sines for 4 | s:
 *     sum_h prod_{l=1}^{s} sin(l h pi / k) = (k / 2^s) sigma^(b)_k(s(s+1)/4; s+1)
 * (b = 0 over all h, b = 1 over h coprime to k), and the two sums coincide
 * whenever s >= k/p, p the smallest prime factor of k. Checked for every
 * s in {4, 8, ...} with s + 1 <= k <= k_max.
 */
VerificationReport verify_sine_product_theorem(std::int64_t k_max, double tol);

/// The same sums against the alternative normalization 2^{-s} sigma_k(k - s(s+1)/4; s+1). Diagnostic.
VerificationReport sine_product_printed_form(std::int64_t k_max, double tol);

/// Exact side of the s = 4 vanishing claim: sigma^(0)_k(k - 5; 5) = 0 for
/// k_lo <= k <= k_hi. Tolerance 0. Nonzero b = 1 values are counted in notes.
VerificationReport verify_sine_product_tail_exact(std::int64_t k_lo, std::int64_t k_hi);

/**
 * xi^{-s(s+1)/4} (1 - xi)...(1 - xi^s) = sum_{j=0}^{k-1} xi^{j^2}
 * at every primitive k-th root xi, for k = 2s + 1 with 4 | s or 4 | s + 1.
 * Rejects other parameter combinations.
 */
VerificationReport verify_gauss_identity(std::int64_t k, std::int64_t s, double tol);

} // namespace grsum
