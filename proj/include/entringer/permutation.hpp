#pragma once

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace entringer::perm {

/// A word of distinct positive integers over an arbitrary ordered support.
/// The empty word is allowed (it is the terminal state of the deletion
/// process in the left-to-right coding). Immutable after construction.
class Permutation {
  public:
    Permutation() = default;

    explicit Permutation(std::vector<int> word) : word_(std::move(word)) {
        std::set<int> seen;
        for (int v : word_) {
            if (v < 1) throw std::invalid_argument("Permutation: values must be positive");
            if (!seen.insert(v).second)
                throw std::invalid_argument("Permutation: values must be distinct");
        }
    }

    const std::vector<int>& word() const { return word_; }
    int size() const { return static_cast<int>(word_.size()); }
    bool empty() const { return word_.empty(); }
    int at(int i) const { return word_.at(static_cast<std::size_t>(i)); }  // 0-based

    /// Sorted set of values.
    std::vector<int> support() const {
        std::vector<int> s(word_);
        std::sort(s.begin(), s.end());
        return s;
    }

    /// True iff the support is exactly {1,...,size()}.
    bool is_standard() const {
        std::vector<int> s = support();
        for (int i = 0; i < size(); ++i)
            if (s[static_cast<std::size_t>(i)] != i + 1) return false;
        return true;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) {
        return a.word_ <=> b.word_;
    }

  private:
    std::vector<int> word_;
};

/// pi_1 > pi_2 < pi_3 > ... with strict inequalities. Empty and singleton
/// words are vacuously down-up.
inline bool is_downup(const Permutation& p) {
    const auto& w = p.word();
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (i % 2 == 0 ? w[i] <= w[i + 1] : w[i] >= w[i + 1]) return false;
    }
    return true;
}

/// pi_1 < pi_2 > pi_3 < ...
inline bool is_updown(const Permutation& p) {
    const auto& w = p.word();
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (i % 2 == 0 ? w[i] >= w[i + 1] : w[i] <= w[i + 1]) return false;
    }
    return true;
}

inline bool is_alternating(const Permutation& p) { return is_downup(p) || is_updown(p); }

/// Value-wise image under the order-reversing involution of the support.
inline Permutation complement(const Permutation& p) {
    std::vector<int> s = p.support();
    std::vector<int> out;
    out.reserve(p.word().size());
    for (int v : p.word()) {
        auto it = std::lower_bound(s.begin(), s.end(), v);
        out.push_back(s[static_cast<std::size_t>(s.end() - 1 - it)]);
    }
    return Permutation(std::move(out));
}

inline Permutation reverse(const Permutation& p) {
    std::vector<int> out(p.word().rbegin(), p.word().rend());
    return Permutation(std::move(out));
}

/// Number of pairs (i,j) with i+1 < j and pi_i > pi_{i+1} < pi_j < pi_i.
inline int count_312(const Permutation& p) {
    const auto& w = p.word();
    int count = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] <= w[i + 1]) continue;
        for (std::size_t j = i + 2; j < w.size(); ++j)
            if (w[i + 1] < w[j] && w[j] < w[i]) ++count;
    }
    return count;
}

namespace detail {

inline void extend_alternating(std::vector<int>& prefix, std::vector<bool>& used, int n,
                               bool next_is_descent, std::vector<Permutation>& out) {
    if (static_cast<int>(prefix.size()) == n) {
        out.emplace_back(prefix);
        return;
    }
    const int prev = prefix.back();
    for (int v = 1; v <= n; ++v) {
        if (used[static_cast<std::size_t>(v)]) continue;
        if (next_is_descent ? v >= prev : v <= prev) continue;
        used[static_cast<std::size_t>(v)] = true;
        prefix.push_back(v);
        extend_alternating(prefix, used, n, !next_is_descent, out);
        prefix.pop_back();
        used[static_cast<std::size_t>(v)] = false;
    }
}

}  // namespace detail

/// All down-up permutations of [n], lexicographic. With k, only those with
/// first letter k.
inline std::vector<Permutation> enumerate_downup(int n, std::optional<int> k = std::nullopt) {
    if (n < 1) throw std::domain_error("enumerate_downup: n must be >= 1");
    if (k && (*k < 1 || *k > n)) throw std::domain_error("enumerate_downup: k outside 1..n");
    std::vector<Permutation> out;
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    std::vector<int> prefix;
    for (int first = k ? *k : 1; first <= (k ? *k : n); ++first) {
        used[static_cast<std::size_t>(first)] = true;
        prefix.push_back(first);
        detail::extend_alternating(prefix, used, n, /*next_is_descent=*/true, out);
        prefix.pop_back();
        used[static_cast<std::size_t>(first)] = false;
    }
    return out;
}

/// All alternating permutations of [n] (both phases), lexicographic.
/// The singleton counts once.
inline std::vector<Permutation> enumerate_alternating(int n) {
    if (n < 1) throw std::domain_error("enumerate_alternating: n must be >= 1");
    if (n == 1) return {Permutation({1})};
    std::vector<Permutation> out;
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    std::vector<int> prefix;
    for (int first = 1; first <= n; ++first) {
        used[static_cast<std::size_t>(first)] = true;
        prefix.push_back(first);
        detail::extend_alternating(prefix, used, n, true, out);   // down-up
        detail::extend_alternating(prefix, used, n, false, out);  // up-down
        prefix.pop_back();
        used[static_cast<std::size_t>(first)] = false;
    }
    std::sort(out.begin(), out.end());
    return out;
}

enum class Family { DU, DUp, MM, MMp, MMpp };

struct FamilyTag {
    Family family;
    int n;
    int k;
    friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
    friend auto operator<=>(const FamilyTag&, const FamilyTag&) = default;
};

/// Every permutation-family/statistic pair the word belongs to.
///
/// DU:   down-up, k = pi_1.
/// DU':  down-up, k = n+1-(pi_1-pi_2).
/// MM:   alternating with 1 before n, k = n+1-|pi_1-pi_2|.
/// MM':  member of MM, k = value just before 1 (k = n when pi_1 = 1).
/// MM'': member of MM, n+1-k = value just after n (k = n when pi_n = n).
///
/// The n = 1 singleton carries all five tags with k = 1 so that family
/// totals agree with E(1,1) = 1 (the statistics are undefined at n = 1;
/// this is a convention).
inline std::set<FamilyTag> classify(const Permutation& p) {
    if (!p.is_standard())
        throw std::domain_error("classify: support must be [n]");
    const int n = p.size();
    std::set<FamilyTag> tags;
    if (n == 0) return tags;
    if (n == 1) {
        for (Family f : {Family::DU, Family::DUp, Family::MM, Family::MMp, Family::MMpp})
            tags.insert({f, 1, 1});
        return tags;
    }
    const auto& w = p.word();
    if (is_downup(p)) {
        tags.insert({Family::DU, n, w[0]});
        tags.insert({Family::DUp, n, n + 1 - (w[0] - w[1])});
    }
    if (is_alternating(p)) {
        const auto pos1 = std::find(w.begin(), w.end(), 1);
        const auto posn = std::find(w.begin(), w.end(), n);
        if (pos1 < posn) {
            tags.insert({Family::MM, n, n + 1 - std::abs(w[0] - w[1])});
            if (w[0] == 1)
                tags.insert({Family::MMp, n, n});
            else
                tags.insert({Family::MMp, n, *(pos1 - 1)});
            if (w.back() == n)
                tags.insert({Family::MMpp, n, n});
            else
                tags.insert({Family::MMpp, n, n + 1 - *(posn + 1)});
        }
    }
    return tags;
}

}  // namespace entringer::perm
