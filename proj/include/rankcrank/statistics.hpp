#pragma once

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "partition.hpp"

namespace rankcrank {

namespace detail {
inline void require_nonempty(PartsView parts, const char* what) {
    if (parts.empty()) {
        throw std::domain_error(std::string(what) + " is undefined on the empty partition");
    }
}
}  // namespace detail

/// Rank: largest part minus number of parts.
inline int rank(PartsView parts) {
    detail::require_nonempty(parts, "rank");
    return parts.front() - static_cast<int>(parts.size());
}

/// Number of parts equal to 1.
inline int count_ones(PartsView parts) noexcept {
    // Parts are decreasing, so the ones form a suffix.
    const auto first_one = std::lower_bound(parts.begin(), parts.end(), 1, std::greater<>{});
    return static_cast<int>(parts.end() - first_one);
}

/// Crank: the largest part if there are no ones, otherwise the
/// number of parts larger than the number of ones minus the number of ones.
inline int crank(PartsView parts) {
    detail::require_nonempty(parts, "crank");
    const int ones = count_ones(parts);
    if (ones == 0) {
        return parts.front();
    }
    const auto larger_end = std::lower_bound(parts.begin(), parts.end(), ones, std::greater<>{});
    return static_cast<int>(larger_end - parts.begin()) - ones;
}

/// Membership of m in the rank-set [-l1, 1-l2, ..., L-1-lL, L, L+1, ...].
/// The finite entries j - l_{j+1} are strictly increasing in j and all lie below L.
inline bool rank_set_contains(PartsView parts, int m) {
    detail::require_nonempty(parts, "rank-set");
    const int len = static_cast<int>(parts.size());
    if (m >= len) return true;
    for (int j = 0; j < len; ++j) {
        const int entry = j - parts[static_cast<std::size_t>(j)];
        if (entry == m) return true;
        if (entry > m) return false;
    }
    return false;
}

/// Multiplicity of the smallest part.
inline int smallest_part_count(PartsView parts) {
    detail::require_nonempty(parts, "smallest_part_count");
    const int smallest = parts.back();
    const auto first = std::lower_bound(parts.begin(), parts.end(), smallest, std::greater<>{});
    return static_cast<int>(parts.end() - first);
}

}  // namespace rankcrank
