#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tucensus/errors.hpp"

namespace tucensus {

using Int = boost::multiprecision::cpp_int;

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i; // exact: the running product over i consecutive factors is divisible by i!
    }
    return result;
}

// Hard cap on subset enumeration work.
inline constexpr std::int64_t subset_budget = 100'000'000;

inline void check_subset_budget(int m, int k) {
    if (binomial(m, k) > subset_budget)
        throw error(errc::budget_exceeded, "C(" + std::to_string(m) + "," + std::to_string(k) + ") exceeds " +
                                               std::to_string(subset_budget) + " subsets");
}

namespace detail {

// Visits all k-subsets of {1..m} in lexicographic order of ascending index vectors.
template <typename F>
void for_each_combination(int m, int k, F&& fn) {
    if (k < 0 || k > m) return;
    std::vector<int> subset(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) subset[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        fn(const_cast<const std::vector<int>&>(subset));
        int i = k - 1;
        while (i >= 0 && subset[static_cast<std::size_t>(i)] == m - (k - 1 - i)) --i;
        if (i < 0) break;
        ++subset[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
    }
}

} // namespace detail
} // namespace tucensus
