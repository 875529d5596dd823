#pragma once

/**
 * @file series.hpp
 * @brief Truncated evaluation of Dirichlet-type series built from Ramanujan
 *        sums and their generalizations.
 *
 * Everything here is numeric and truncated; results carry the number of terms
 * used and the distance to a closed-form target when one is known. Terms are
 * always accumulated in ascending index order.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace grsum {

struct TruncatedSeriesResult {
    double partial_sum = 0.0;
    std::uint64_t terms_used = 0;
    std::optional<double> target;
    double abs_error = 0.0; ///< |partial_sum - target|, 0 without a target
};

/// Riemann zeta for r > 1: direct sum to 1000 terms plus an Euler-Maclaurin tail.
double zeta(double r);

/// sum_{d | n} d^x for real x.
double divisor_sigma_real(double x, std::int64_t n);

/// sum_{s <= N} c_s(n) / s^r against sigma_{r-1}(n) / (n^{r-1} zeta(r)). Rejects r <= 1.
TruncatedSeriesResult c_series(std::int64_t n, double r, std::uint64_t terms);

struct GDecomposition {
    /// g_{r,j}(n) truncated at s <= N, j = 0..m-1; no targets.
    std::vector<TruncatedSeriesResult> parts;
    /// sum_j g_{r,j}(n) against the c_series closed form.
    TruncatedSeriesResult total;
    /// Values of s where sum_j sigma^(0)_{ms}(js + n; s) != c_s(n) exactly.
    std::vector<std::int64_t> term_mismatches;
};

/// g_{r,j}(n) = sum_s sigma^(0)_{ms}(js + n; s) / s^r, each term computed exactly.
GDecomposition g_decomposition(std::int64_t n, double r, std::int64_t m, std::uint64_t terms);

struct FAlphaResult {
    /// Direct truncation sum_{k <= N} sigma^(1)_k(t; s) / k^alpha, with target the
    /// term-by-term assembly from the (q)_{s-1} coefficients a_j:
    ///   (1/zeta(alpha+1)) sum_{j != t} a_j sigma_alpha(|t-j|) / |t-j|^alpha
    ///   + a_t sum_{k <= N} phi(k) / k^{alpha+1}.
    TruncatedSeriesResult result;
    /// The same assembly with the j = t term replaced by (6/pi^2) zeta(alpha+1).
    double printed_form = 0.0;
    double printed_abs_error = 0.0;
};

/// Rejects alpha <= 1 and s < 1.
FAlphaResult f_alpha_s(std::int64_t t, double alpha, std::int64_t s, std::uint64_t terms);

/// Header "series,n,r_or_alpha,s,t,N,partial_sum,target,abs_error".
std::string series_csv_header();
std::string series_csv_row(const std::string& label, std::int64_t n, double r_or_alpha,
                           std::optional<std::int64_t> s, std::optional<std::int64_t> t,
                           const TruncatedSeriesResult& result);

} // namespace grsum
