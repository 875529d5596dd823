#include "grsum/brute_force.hpp"

#include <bit>
#include <string>

#include "grsum/error.hpp"
#include "grsum/numtheory.hpp"

namespace grsum::brute {

namespace {

void check_items(std::int64_t k, std::int64_t items) {
    if (k < 1) {
        throw InvalidArgument("modulus must be >= 1");
    }
    if (items < 0) {
        throw InvalidArgument("item count must be >= 0");
    }
    if (items > max_subset_items) {
        throw CapacityError("enumeration over " + std::to_string(items) + " items exceeds the limit of " +
                            std::to_string(max_subset_items));
    }
}

// Walks all subsets of `items` in Gray-code order, calling visit(sum mod k, size).
template <typename Visit>
void walk_subsets(const std::vector<std::int64_t>& items, std::int64_t k, Visit&& visit) {
    const auto n = static_cast<unsigned>(items.size());
    std::int64_t sum = 0;
    int size = 0;
    std::uint64_t gray = 0;
    visit(0, 0);
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << n); ++i) {
        const auto bit = static_cast<unsigned>(std::countr_zero(i));
        const std::uint64_t mask = std::uint64_t{1} << bit;
        if (gray & mask) {
            sum -= items[bit];
            --size;
        } else {
            sum += items[bit];
            ++size;
        }
        gray ^= mask;
        visit(mod_floor(sum, k), size);
    }
}

} // namespace

std::vector<std::int64_t> signed_subset_row(std::int64_t k, std::int64_t s) {
    if (s < 1) {
        throw InvalidArgument("signed_subset_row: s must be >= 1");
    }
    check_items(k, s - 1);
    std::vector<std::int64_t> items;
    for (std::int64_t j = 1; j < s; ++j) {
        items.push_back(j);
    }
    std::vector<std::int64_t> row(static_cast<std::size_t>(k));
    walk_subsets(items, k, [&](std::int64_t r, int size) {
        row[static_cast<std::size_t>(r)] += (size % 2 == 0) ? 1 : -1;
    });
    return row;
}

ParitySplit subset_parity_row(std::int64_t k, std::int64_t n) {
    check_items(k, n);
    std::vector<std::int64_t> items;
    for (std::int64_t j = 1; j <= n; ++j) {
        items.push_back(j);
    }
    ParitySplit out{std::vector<std::uint64_t>(static_cast<std::size_t>(k)),
                    std::vector<std::uint64_t>(static_cast<std::size_t>(k))};
    walk_subsets(items, k, [&](std::int64_t r, int size) {
        auto& side = (size % 2 == 0) ? out.even : out.odd;
        ++side[static_cast<std::size_t>(r)];
    });
    return out;
}

std::vector<std::int64_t> signed_partition_row(std::int64_t k, std::int64_t s, bool two_copies) {
    if (s < 1 || s > k) {
        throw InvalidArgument("signed_partition_row: require 1 <= s <= k");
    }
    std::vector<std::int64_t> row(static_cast<std::size_t>(k));
    if (two_copies) {
        std::vector<std::int64_t> items;
        for (std::int64_t part = 1; part < k; ++part) {
            items.push_back(part);
            if (part < s) {
                items.push_back(part);
            }
        }
        check_items(k, static_cast<std::int64_t>(items.size()));
        walk_subsets(items, k, [&](std::int64_t r, int size) {
            row[static_cast<std::size_t>(r)] += (size % 2 == 0) ? 1 : -1;
        });
        return row;
    }

    // Mixed-radix walk over multiplicities: radix 3 for parts < s, radix 2 otherwise.
    const auto parts = static_cast<std::size_t>(k - 1);
    std::vector<int> mult(parts, 0);
    std::int64_t sum = 0;
    int count = 0;
    while (true) {
        row[static_cast<std::size_t>(mod_floor(sum, k))] += (count % 2 == 0) ? 1 : -1;
        std::size_t i = 0;
        for (; i < parts; ++i) {
            const auto part = static_cast<std::int64_t>(i + 1);
            const int limit = part < s ? 2 : 1;
            if (mult[i] < limit) {
                ++mult[i];
                sum += part;
                ++count;
                break;
            }
            sum -= part * mult[i];
            count -= mult[i];
            mult[i] = 0;
        }
        if (i == parts) {
            break;
        }
    }
    return row;
}

} // namespace grsum::brute
