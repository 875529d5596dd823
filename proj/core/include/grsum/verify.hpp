#pragma once

/**
 * @file verify.hpp
 * @brief Identity-verification suites over parameter grids.
 *
 * Each suite returns a batch of VerificationReport in a fixed order, however
 * many workers ran it. Exact suites compare rationals and use tolerance 0.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grsum/report.hpp"

namespace grsum {

struct SuiteOptions {
    /// Suite-specific upper modulus; empty selects the suite default.
    std::optional<std::int64_t> k_max;
    /// Numeric tolerance for floating-point suites; empty selects the default.
    std::optional<double> tol;
    std::uint64_t seed = 20240531;
    unsigned workers = 1;
};

/// "trig", "recurrences", "dirichlet", "comb-oracle", "svt-grid", "series".
const std::vector<std::string>& suite_names();

/// Throws InvalidArgument for an unknown suite name.
std::vector<VerificationReport> run_suite(std::string_view name, const SuiteOptions& options = {});

// Individual checks, exposed for the acceptance suite and tests.

/// remainder_poly(k, k, 0) against c_k(t), 2 <= k <= k_max.
VerificationReport check_ramanujan_row(std::int64_t k_max);
/// sigma(k,0,t,s) against the signed subset enumeration, k <= k_max, s <= min(k, s_cap).
VerificationReport check_signed_subset_oracle(std::int64_t k_max, std::int64_t s_cap);
/// Forward table and backward recurrence against remainder_poly, both b, k <= k_max.
VerificationReport check_forward_definition(std::int64_t k_max);
VerificationReport check_backward_definition(std::int64_t k_max);
/// remainder_poly(k,s,b+1) == remainder_poly(k,s,b) for b = 1, k <= k_max.
VerificationReport check_b_stability(std::int64_t k_max);
/// Multiplication commutes with reduction on random polynomials.
VerificationReport check_reduction_homomorphism(std::int64_t k_max, std::uint64_t seed, int trials);
/// Both Dirichlet-convolution identities, k <= k_max, all (s, t).
VerificationReport check_dirichlet(std::int64_t k_max);
/// Convolution and binary-weight forms of the coprime sum against sigma.
VerificationReport check_c_convolution(std::int64_t k_max);
/// Subdivisor decomposition for every s | k, k <= k_max.
VerificationReport check_subdivisor(std::int64_t k_max);
/// sigma^(1) integral and equal to sigma^(0) for s > k/p, k <= k_max.
VerificationReport check_integrality(std::int64_t k_max);
/// The boundary s = k/p (diagnostic); counterexamples list the rows that differ.
VerificationReport report_integrality_boundary(std::int64_t k_max);
/// Closed form for sigma_p(t; p-1), odd primes p <= p_max.
VerificationReport check_prime_closed_form(std::int64_t p_max);
/// k sigma^(1) against the signed two-copy partition enumeration, k <= k_max.
VerificationReport check_partition_oracle(std::int64_t k_max);
/// Same with the plain at-most-twice reading (diagnostic).
VerificationReport report_partition_literal(std::int64_t k_max);
/// Enumeration vs sigma^(0) and eta for n <= n_max, k <= 2n + 3.
VerificationReport check_svt_difference_and_sum(std::int64_t n_max);
/// Closed-form total, quadratic sigma (including square-k) and svt_size vs
/// brute force for the given s values, |delta| <= 3.
VerificationReport check_svt_grid(const std::vector<std::int64_t>& s_values);
/// Printed translate (3d+1) and statement-sign quadratic form (diagnostic).
VerificationReport report_svt_printed_forms(const std::vector<std::int64_t>& s_values);

} // namespace grsum
