#pragma once

/**
 * @file brute_force.hpp
 * @brief Exhaustive enumerators used as ground truth.
 *
 * Nothing here touches polynomials or recurrences: every count is obtained by
 * walking subsets or multisets explicitly, so agreement with the algebraic
 * routes is meaningful.
 */

#include <cstdint>
#include <vector>

namespace grsum::brute {

/// Largest base-set size accepted by the subset enumerators (2^26 subsets).
inline constexpr int max_subset_items = 26;

/// Entry t: sum over A subset of {1..s-1} with sum(A) = t (mod k) of (-1)^|A|.
/// Empty set counts with sum 0. Requires k >= 1, s >= 1, s - 1 <= max_subset_items.
std::vector<std::int64_t> signed_subset_row(std::int64_t k, std::int64_t s);

/// Entry t: number of subsets of {1..n} with sum = t (mod k), split by size parity.
struct ParitySplit {
    std::vector<std::uint64_t> even;
    std::vector<std::uint64_t> odd;
};
ParitySplit subset_parity_row(std::int64_t k, std::int64_t n);

/**
 * Signed partition count behind k * sigma^(1)_k(t; s).
 *
 * Parts are taken from the multiset {1, 1, 2, 2, ..., s-1, s-1, s, s+1, ..., k-1}
 * with the two copies of each part below s distinguishable; each selection of
 * items contributes (-1)^{items} to the residue class of its total mod k.
 * With two_copies = false, parts below s may instead appear at most twice as
 * an ordinary partition (multiplicity 0, 1 or 2, weight 1).
 */
std::vector<std::int64_t> signed_partition_row(std::int64_t k, std::int64_t s, bool two_copies = true);

} // namespace grsum::brute
