#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "entringer/bintree.hpp"

namespace entringer::tangent {

/// Enumeration sizes blow up quickly (the n = 5 multiset already has
/// ~1.2M arrangements with the leading letter pinned); callers must opt in
/// beyond this cap.
inline constexpr int default_max_n = 5;

namespace detail {

inline void check_n(int n, int max_n) {
    if (n < 1) throw std::domain_error("tangent: n must be >= 1");
    if (n > max_n)
        throw std::domain_error("tangent: n exceeds the configured cap (" + std::to_string(max_n) +
                                ")");
}

}  // namespace detail

/// t(n,k): 0-2 increasing trees on [2n+1] (every vertex has zero or two
/// children) counted by the minimal-path leaf.
inline std::map<int, long long> t_table(int n, int max_n = default_max_n) {
    detail::check_n(n, max_n);
    std::map<int, long long> counts;
    for (const auto& t : bintree::enumerate(2 * n + 1)) {
        bool zero_two = true;
        for (int v : t.vertices())
            if (t.children(v).size() == 1) {
                zero_two = false;
                break;
            }
        if (zero_two) ++counts[bintree::leaf_stat(t)];
    }
    return counts;
}

namespace detail {

/// Walks multiset arrangements of {0,0,...,n,n} with word[0] = n pinned,
/// counting the valid ones by the position of the second n. Identical
/// copies are indistinguishable: each value just has a remaining-use count,
/// so every arrangement is generated exactly once.
struct SplitPairScan {
    int n;
    std::vector<int> word;
    std::vector<int> left;  // copies of each value still to place
    std::map<int, long long>& counts;

    void run() {
        word.push_back(n);
        --left[static_cast<std::size_t>(n)];
        place();
    }

    void place() {
        const std::size_t len = static_cast<std::size_t>(2 * n + 2);
        if (word.size() == len) {
            if (valid()) record();
            return;
        }
        for (int v = 0; v <= n; ++v) {
            if (left[static_cast<std::size_t>(v)] == 0) continue;
            --left[static_cast<std::size_t>(v)];
            word.push_back(v);
            place();
            word.pop_back();
            ++left[static_cast<std::size_t>(v)];
        }
    }

    bool valid() const {
        // exactly one occurrence of i+1 strictly between the two copies of i
        for (int v = 0; v < n; ++v) {
            int first = -1, second = -1;
            for (int p = 0; p < static_cast<int>(word.size()); ++p)
                if (word[static_cast<std::size_t>(p)] == v) (first < 0 ? first : second) = p;
            int between = 0;
            for (int p = first + 1; p < second; ++p)
                if (word[static_cast<std::size_t>(p)] == v + 1) ++between;
            if (between != 1) return false;
        }
        return true;
    }

    void record() {
        for (int p = 1; p < static_cast<int>(word.size()); ++p)
            if (word[static_cast<std::size_t>(p)] == n) {
                ++counts[p];  // second n at 1-based position p+1 = k+1, so k = p
                return;
            }
    }
};

}  // namespace detail

/// s(n,k): split-pair arrangements of the multiset {0,0,1,1,...,n,n}
/// starting with n, counted by k where the second n sits at position k+1.
inline std::map<int, long long> s_table(int n, int max_n = default_max_n) {
    detail::check_n(n, max_n);
    std::map<int, long long> counts;
    detail::SplitPairScan scan{n, {}, std::vector<int>(static_cast<std::size_t>(n) + 1, 2), counts};
    scan.run();
    return counts;
}

}  // namespace entringer::tangent
