#pragma once

#include <algorithm>
#include <cassert>
#include <optional>
#include <stdexcept>
#include <vector>

#include "entringer/bintree.hpp"
#include "entringer/permutation.hpp"

namespace entringer::grword {

enum class Kind { G, R };

/// A word over an ordered support starting at the maximum and ending at the
/// second maximum; G-words have pi_2 > pi_{m-1}, R-words pi_2 < pi_{m-1}
/// (m = length). The two conditions only separate at length >= 4.
struct GRWord {
    perm::Permutation word;
    Kind kind = Kind::G;

    friend bool operator==(const GRWord&, const GRWord&) = default;
    friend auto operator<=>(const GRWord&, const GRWord&) = default;
};

namespace detail {

/// Endpoint conditions on a raw word; `strict` additionally requires the
/// interior comparison, which needs length >= 4 to mean anything.
inline bool word_shape(const std::vector<int>& w, Kind kind, bool strict) {
    const std::size_t m = w.size();
    if (m < 2) return false;
    int max1 = 0, max2 = 0;
    for (int v : w) {
        if (v > max1) {
            max2 = max1;
            max1 = v;
        } else if (v > max2) {
            max2 = v;
        }
    }
    if (w.front() != max1 || w.back() != max2) return false;
    if (m < 4) return !strict;
    return kind == Kind::G ? w[1] > w[m - 2] : w[1] < w[m - 2];
}

}  // namespace detail

/// Word conditions for the family on [n+2] (interior comparison applies
/// from length 4 up).
inline bool satisfies_kind(const perm::Permutation& p, Kind kind) {
    return detail::word_shape(p.word(), kind, p.size() >= 4);
}

/// No factor pi_i..pi_j, nor the reversed factor, is a word of the same
/// kind. Below length 4 the G and R conditions coincide, so only factors of
/// length >= 4 can witness non-primitivity; the whole word itself is
/// skipped (it trivially qualifies) but its reversal is tested.
inline bool is_primitive(const GRWord& w) {
    const auto& word = w.word.word();
    const std::size_t m = word.size();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 3; j < m; ++j) {
            std::vector<int> factor(word.begin() + static_cast<std::ptrdiff_t>(i),
                                    word.begin() + static_cast<std::ptrdiff_t>(j) + 1);
            if (!(i == 0 && j == m - 1) && detail::word_shape(factor, w.kind, true)) return false;
            std::reverse(factor.begin(), factor.end());
            if (detail::word_shape(factor, w.kind, true)) return false;
        }
    }
    return true;
}

/// The route: the greedy max-seeking walk over the word. alpha_1 = pi_1 =
/// max, alpha_2 = last letter = second max; afterwards, standing at the
/// position of alpha_t, if both neighbors were already visited the value
/// repeats forever, otherwise the next value is the maximum over the two
/// maximal runs of unvisited letters adjacent to the position. Missing
/// neighbors (off either end) count as visited.
inline std::vector<int> route(const GRWord& w) {
    const auto& word = w.word.word();
    const std::size_t m = word.size();
    if (m < 2) throw std::domain_error("route: word too short");
    std::vector<std::size_t> pos_of(*std::max_element(word.begin(), word.end()) + 1u, 0);
    for (std::size_t p = 0; p < m; ++p) pos_of[static_cast<std::size_t>(word[p])] = p;

    std::vector<bool> visited(m, false);
    std::vector<int> alpha{word.front(), word.back()};
    visited[0] = visited[m - 1] = true;

    while (alpha.size() < m) {
        const std::size_t i = pos_of[static_cast<std::size_t>(alpha.back())];
        const bool left_done = i == 0 || visited[i - 1];
        const bool right_done = i + 1 == m || visited[i + 1];
        if (left_done && right_done) {
            alpha.push_back(alpha.back());
            continue;
        }
        int best = 0;
        for (std::size_t p = i; p-- > 0 && !visited[p];) best = std::max(best, word[p]);
        for (std::size_t p = i + 1; p < m && !visited[p]; ++p) best = std::max(best, word[p]);
        alpha.push_back(best);
        visited[pos_of[static_cast<std::size_t>(best)]] = true;
    }
    return alpha;
}

inline int route_statistic(const GRWord& w) {
    const std::vector<int> alpha = route(w);
    const int n = static_cast<int>(w.word.size()) - 2;
    return n + 1 - alpha.back();  // k with alpha_{n+2} = n+1-k
}

namespace detail {

/// Max-rooted recursion: root at the maximum, the factors on both sides
/// become its subtrees.
inline void build_decreasing(const std::vector<int>& w, std::size_t lo, std::size_t hi,
                             std::optional<int> parent, std::vector<std::pair<int, int>>& edges,
                             int& root_out) {
    if (lo >= hi) return;
    const auto it = std::max_element(w.begin() + static_cast<std::ptrdiff_t>(lo),
                                     w.begin() + static_cast<std::ptrdiff_t>(hi));
    const int value = *it;
    const std::size_t at = static_cast<std::size_t>(it - w.begin());
    if (parent)
        edges.emplace_back(value, *parent);
    else
        root_out = value;
    build_decreasing(w, lo, at, value, edges, root_out);
    build_decreasing(w, at + 1, hi, value, edges, root_out);
}

}  // namespace detail

/// delta: GW_n -> BT_n. Strip the first and last letters, build the tree
/// rooted at the maximum with the side factors as subtrees, then flip
/// labels i -> n+1-i to make it increasing. The minimal-path leaf of the
/// image is k where the route of the word stabilizes at n+1-k.
inline bintree::IncreasingBinaryTree delta(const GRWord& w) {
    if (w.kind != Kind::G) throw std::domain_error("delta: defined on G-words");
    if (!w.word.is_standard() || w.word.size() < 3)
        throw std::domain_error("delta: expected a G-word on [n+2], n >= 1");
    if (!satisfies_kind(w.word, Kind::G) || !is_primitive(w))
        throw std::domain_error("delta: word is not a primitive G-word");

    const auto& raw = w.word.word();
    const int n = static_cast<int>(raw.size()) - 2;
    const std::vector<int> inner(raw.begin() + 1, raw.end() - 1);

    std::vector<std::pair<int, int>> edges;
    int root = 0;
    detail::build_decreasing(inner, 0, inner.size(), std::nullopt, edges, root);

    const auto flip = [n](int v) { return n + 1 - v; };
    std::vector<std::pair<int, int>> flipped;
    flipped.reserve(edges.size());
    for (auto [c, p] : edges) flipped.emplace_back(flip(c), flip(p));
    return bintree::IncreasingBinaryTree::from_edges(flipped, flip(root));
}

/// All primitive words of the kind on [n+2], lexicographic; with k, only
/// those whose route ends at n+1-k. A plain filter over (n+2)! words: this
/// family is only ever enumerated at desk scale.
inline std::vector<GRWord> enumerate(int n, Kind kind, std::optional<int> k = std::nullopt) {
    if (n < 1) throw std::domain_error("grword::enumerate: n must be >= 1");
    if (k && (*k < 1 || *k > n)) throw std::domain_error("grword::enumerate: k outside 1..n");
    std::vector<int> word(static_cast<std::size_t>(n) + 2);
    for (int v = 1; v <= n + 2; ++v) word[static_cast<std::size_t>(v - 1)] = v;
    std::vector<GRWord> out;
    do {  // full scan over (n+2)! words
        GRWord cand{perm::Permutation(word), kind};
        if (!satisfies_kind(cand.word, kind) || !is_primitive(cand)) continue;
        if (k && route_statistic(cand) != *k) continue;
        out.push_back(std::move(cand));
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

}  // namespace entringer::grword
