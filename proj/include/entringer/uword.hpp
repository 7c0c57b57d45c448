#pragma once

#include <cassert>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "entringer/permutation.hpp"

namespace entringer::uword {

/// Sequence of positive integers with u_1 = 1 and u_i + u_{i-1} <= i.
struct UWord {
    std::vector<int> u;

    friend bool operator==(const UWord&, const UWord&) = default;
    friend auto operator<=>(const UWord&, const UWord&) = default;
};

inline bool is_valid(const UWord& w) {
    const auto& u = w.u;
    if (u.empty() || u[0] != 1) return false;
    for (std::size_t i = 1; i < u.size(); ++i)
        if (u[i] < 1 || u[i] + u[i - 1] > static_cast<int>(i) + 1) return false;
    return true;
}

enum class Variant { UW, UWp };

namespace detail {

inline int statistic(const UWord& w, Variant variant) {
    const int n = static_cast<int>(w.u.size());
    if (variant == Variant::UW) return n + 1 - w.u.back();
    if (n < 2) return 1;  // UW'(1,1) by the same convention as the permutation families
    return w.u[static_cast<std::size_t>(n) - 2] + w.u.back();
}

inline void grow(std::vector<int>& u, int n, std::vector<UWord>& out) {
    if (static_cast<int>(u.size()) == n) {
        out.push_back(UWord{u});
        return;
    }
    const int i = static_cast<int>(u.size()) + 1;
    for (int v = 1; v + u.back() <= i; ++v) {
        u.push_back(v);
        grow(u, n, out);
        u.pop_back();
    }
}

}  // namespace detail

/// U-words of length n, lexicographic (digit-by-digit under the constraint
/// u_i <= i - u_{i-1}). With k: UW filters on u_n = n+1-k, UW' on
/// u_{n-1} + u_n = k.
inline std::vector<UWord> enumerate(int n, Variant variant = Variant::UW,
                                    std::optional<int> k = std::nullopt) {
    if (n < 1) throw std::domain_error("uword::enumerate: n must be >= 1");
    if (k && (*k < 1 || *k > n)) throw std::domain_error("uword::enumerate: k outside 1..n");
    std::vector<UWord> all;
    std::vector<int> u{1};
    detail::grow(u, n, all);
    if (!k) return all;
    std::vector<UWord> out;
    for (auto& w : all)
        if (detail::statistic(w, variant) == *k) out.push_back(std::move(w));
    return out;
}

/// gamma: DU(n,k) -> UW(n,k). Reading pi left to right, w_i counts the
/// values >= pi_i (i odd) or <= pi_i (i even) that have not been read yet;
/// the U-word is w reversed. The last entry of the image is n+1-pi_1.
inline UWord gamma(const perm::Permutation& p) {
    if (!p.is_standard() || p.empty() || !perm::is_downup(p))
        throw std::domain_error("gamma: expected a down-up permutation of [n]");
    const auto& word = p.word();
    const int n = p.size();
    std::set<int> unread;
    for (int v = 1; v <= n; ++v) unread.insert(v);
    std::vector<int> w;
    w.reserve(word.size());
    for (std::size_t i = 0; i < word.size(); ++i) {
        unread.erase(word[i]);
        int count = 1;  // pi_i itself, removed from `unread` just above
        if (i % 2 == 0) {
            for (auto it = unread.upper_bound(word[i]); it != unread.end(); ++it) ++count;
        } else {
            for (auto it = unread.begin(); it != unread.end() && *it < word[i]; ++it) ++count;
        }
        w.push_back(count);
    }
    UWord out{std::vector<int>(w.rbegin(), w.rend())};
    assert(is_valid(out));
    assert(out.u.back() == n + 1 - word.front());
    return out;
}

/// gamma^{-1}: pi_1 = n+1-u_n, then alternately the u_{n-2i+1}-st smallest
/// and the u_{n-2i}-th greatest of the values not yet placed.
inline perm::Permutation gamma_inverse(const UWord& w) {
    if (!is_valid(w)) throw std::domain_error("gamma_inverse: not a U-word");
    const int n = static_cast<int>(w.u.size());
    const auto& u = w.u;
    std::set<int> remaining;
    for (int v = 1; v <= n; ++v) remaining.insert(v);

    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(n));
    const auto take_smallest = [&](int rank) {  // 1-based
        auto it = remaining.begin();
        std::advance(it, rank - 1);
        const int v = *it;
        remaining.erase(it);
        return v;
    };
    const auto take_greatest = [&](int rank) {
        auto it = remaining.end();
        std::advance(it, -rank);
        const int v = *it;
        remaining.erase(it);
        return v;
    };

    word.push_back(n + 1 - u[static_cast<std::size_t>(n) - 1]);
    remaining.erase(word[0]);
    for (int i = 1; static_cast<int>(word.size()) < n; ++i) {
        if (i % 2 == 1)  // position 2i in 1-based terms
            word.push_back(take_smallest(u[static_cast<std::size_t>(n - i) - 1]));
        else
            word.push_back(take_greatest(u[static_cast<std::size_t>(n - i) - 1]));
    }
    perm::Permutation p(std::move(word));
    assert(perm::is_downup(p));
    return p;
}

/// alpha: UW(n,k) -> UW'(n,k), replacing the last entry by
/// n+1-u_{n-1}-u_n. An involution.
inline UWord alpha_map(const UWord& w) {
    if (!is_valid(w)) throw std::domain_error("alpha_map: not a U-word");
    const int n = static_cast<int>(w.u.size());
    if (n < 2) throw std::domain_error("alpha_map: needs length >= 2");
    UWord out = w;
    out.u.back() = n + 1 - w.u[static_cast<std::size_t>(n) - 2] - w.u.back();
    assert(is_valid(out));
    return out;
}

}  // namespace entringer::uword
