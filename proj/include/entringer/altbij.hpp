#pragma once

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <vector>

#include "entringer/permutation.hpp"

namespace entringer::altbij {

using perm::Permutation;

namespace detail {

inline void require_downup_on_n(const Permutation& p, const char* who) {
    if (!p.is_standard() || p.empty() || !perm::is_downup(p))
        throw std::domain_error(std::string(who) + ": expected a down-up permutation of [n]");
}

/// Applies the value cycle a_0 -> a_1 -> ... -> a_m -> a_0 given as `orbit`.
inline Permutation apply_cycle(const Permutation& p, const std::vector<int>& orbit) {
    std::vector<int> out = p.word();
    for (int& v : out) {
        auto it = std::find(orbit.begin(), orbit.end(), v);
        if (it != orbit.end()) v = (it + 1 == orbit.end()) ? orbit.front() : *(it + 1);
    }
    return Permutation(std::move(out));
}

}  // namespace detail

/// theta: DU(n,k) -> DU'(n,k). With c = n-k+1+pi_2, shifts the values in
/// the interval between k and c by one and sends k to c, so that the new
/// first letter is c while the second letter stays put. Degenerate k = c
/// is the identity (the word already satisfies pi_1 - pi_2 = n+1-k).
inline Permutation theta(const Permutation& p) {
    detail::require_downup_on_n(p, "theta");
    const int n = p.size();
    if (n == 1) return p;
    const int k = p.at(0);
    const int c = n - k + 1 + p.at(1);
    if (k == c) return p;
    std::vector<int> orbit;  // cycle (c, ..., k): c -> next, ..., k -> c
    if (k < c)
        for (int v = c; v >= k; --v) orbit.push_back(v);
    else
        for (int v = c; v <= k; ++v) orbit.push_back(v);
    Permutation out = detail::apply_cycle(p, orbit);
    assert(perm::is_downup(out));
    assert(out.at(1) == p.at(1));
    assert(out.at(0) - out.at(1) == n + 1 - k);
    return out;
}

/// theta^{-1}: reads k = n+1-(s_1-s_2) and applies the inverse cycle.
inline Permutation theta_inverse(const Permutation& s) {
    detail::require_downup_on_n(s, "theta_inverse");
    const int n = s.size();
    if (n == 1) return s;
    const int k = n + 1 - (s.at(0) - s.at(1));
    const int c = s.at(0);  // equals n-k+1+s_2
    if (k == c) return s;
    std::vector<int> orbit;  // cycle (k, ..., c): k -> next, ..., c -> k
    if (k < c)
        for (int v = k; v <= c; ++v) orbit.push_back(v);
    else
        for (int v = k; v >= c; --v) orbit.push_back(v);
    Permutation out = detail::apply_cycle(s, orbit);
    assert(perm::is_downup(out) && out.at(0) == k);
    return out;
}

/// beta: DU'(n,k) -> MM(n,k). Identity when 1 precedes n, complement
/// otherwise.
inline Permutation beta(const Permutation& s) {
    detail::require_downup_on_n(s, "beta");
    const int n = s.size();
    if (n == 1) return s;
    const auto& w = s.word();
    const auto pos1 = std::find(w.begin(), w.end(), 1);
    const auto posn = std::find(w.begin(), w.end(), n);
    return pos1 < posn ? s : perm::complement(s);
}

namespace detail {

/// Order-reversing relabeling of `word` from its own support onto `target`
/// (same cardinality).
inline std::vector<int> reversing_relabel(const std::vector<int>& word,
                                          const std::vector<int>& target) {
    std::vector<int> source(word);
    std::sort(source.begin(), source.end());
    assert(source.size() == target.size());
    std::vector<int> out;
    out.reserve(word.size());
    for (int v : word) {
        const auto idx = static_cast<std::size_t>(
            std::lower_bound(source.begin(), source.end(), v) - source.begin());
        out.push_back(target[target.size() - 1 - idx]);
    }
    return out;
}

}  // namespace detail

/// rho: DU(n,k) -> MM'(n,k).
///
///   k = n:           complement (the image starts with 1).
///   1 before n:      pi = s1 1 s2  ->  s1^R 1 s2.
///   n before 1:      pi = s1 n s2  ->  s1^R 1 c(s2), where c relabels
///                    support(s2) order-reversingly onto
///                    (support(s2) \ {1}) u {n}.
///
/// In every case the value just before 1 is k (or the image starts with 1
/// when k = n).
inline Permutation rho(const Permutation& p) {
    detail::require_downup_on_n(p, "rho");
    const int n = p.size();
    const int k = p.at(0);
    if (k == n) return perm::complement(p);

    const auto& w = p.word();
    const auto pos1 = std::find(w.begin(), w.end(), 1);
    const auto posn = std::find(w.begin(), w.end(), n);
    std::vector<int> out;
    if (pos1 < posn) {
        out.assign(std::make_reverse_iterator(pos1), w.rend());
        out.push_back(1);
        out.insert(out.end(), pos1 + 1, w.end());
    } else {
        out.assign(std::make_reverse_iterator(posn), w.rend());
        out.push_back(1);
        std::vector<int> tail(posn + 1, w.end());
        std::vector<int> target(tail);
        std::erase(target, 1);
        target.push_back(n);
        std::sort(target.begin(), target.end());
        std::vector<int> relabeled = detail::reversing_relabel(tail, target);
        out.insert(out.end(), relabeled.begin(), relabeled.end());
    }
    Permutation q{std::move(out)};
    assert(perm::is_alternating(q));
    return q;
}

/// rho^{-1}: MM'(n,k) -> DU(n,k). A word starting with 1 is the k = n case
/// (complement back). Otherwise split at 1 and try the 1-branch
/// reconstruction; its output is down-up exactly when it is the true
/// preimage, and the n-branch applies otherwise.
inline Permutation rho_inverse(const Permutation& q) {
    if (!q.is_standard() || q.empty())
        throw std::domain_error("rho_inverse: expected a permutation of [n]");
    const int n = q.size();
    if (n == 1) return q;
    if (!perm::is_alternating(q)) throw std::domain_error("rho_inverse: word is not alternating");
    const auto& w = q.word();
    const auto pos1 = std::find(w.begin(), w.end(), 1);
    const auto posn = std::find(w.begin(), w.end(), n);
    if (pos1 > posn) throw std::domain_error("rho_inverse: 1 must precede n");
    if (w.front() == 1) return perm::complement(q);

    std::vector<int> head(std::make_reverse_iterator(pos1), w.rend());
    std::vector<int> tail(pos1 + 1, w.end());

    std::vector<int> candidate(head);
    candidate.push_back(1);
    candidate.insert(candidate.end(), tail.begin(), tail.end());
    if (perm::is_downup(Permutation(candidate))) return Permutation(std::move(candidate));

    std::vector<int> target(tail);
    std::erase(target, n);
    target.push_back(1);
    std::sort(target.begin(), target.end());
    std::vector<int> out(head);
    out.push_back(n);
    std::vector<int> relabeled = detail::reversing_relabel(tail, target);
    out.insert(out.end(), relabeled.begin(), relabeled.end());
    Permutation p{std::move(out)};
    assert(perm::is_downup(p));
    return p;
}

/// rho': MM'(n,k) -> MM''(n,k), the complement of the reverse.
inline Permutation rho_prime(const Permutation& q) {
    if (!q.is_standard() || q.empty())
        throw std::domain_error("rho_prime: expected a permutation of [n]");
    if (q.size() > 1) {
        if (!perm::is_alternating(q)) throw std::domain_error("rho_prime: word is not alternating");
        const auto& w = q.word();
        if (std::find(w.begin(), w.end(), 1) > std::find(w.begin(), w.end(), q.size()))
            throw std::domain_error("rho_prime: 1 must precede n");
    }
    return perm::complement(perm::reverse(q));
}

}  // namespace entringer::altbij
