// Copyright (c) spannerlab contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

namespace spannerlab {

/// Enumerates subsets of {0..count-1} of size 0..r in (size, lexicographic)
/// order; fn returning true stops the walk.
template <typename Fn>
void for_each_bounded_subset(int count, int r, Fn&& fn) {
    std::vector<int> pick;
    if (fn(static_cast<const std::vector<int>&>(pick))) return;
    for (int size = 1; size <= r && size <= count; ++size) {
        pick.assign(static_cast<std::size_t>(size), 0);
        for (int i = 0; i < size; ++i) pick[static_cast<std::size_t>(i)] = i;
        while (true) {
            if (fn(static_cast<const std::vector<int>&>(pick))) return;
            int i = size - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == count - size + i) --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j)
                pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
}

inline std::uint64_t bounded_subset_count(int count, int r) {
    std::uint64_t total = 0, binom = 1;
    for (int i = 0; i <= r && i <= count; ++i) {
        total += binom;
        if (total > (1ULL << 62)) return total;
        binom = binom * static_cast<std::uint64_t>(count - i) / static_cast<std::uint64_t>(i + 1);
    }
    return total;
}

}  // namespace spannerlab
