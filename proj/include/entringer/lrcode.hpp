#pragma once

#include <algorithm>
#include <cassert>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "entringer/bigint.hpp"
#include "entringer/permutation.hpp"
#include "entringer/seidel.hpp"

namespace entringer::lrcode {

/// One step of the left-to-right code: an adjacent transposition (j,i) or a
/// deletion (j,i)*. The terminal singleton deletion (n)* is stored as
/// (n,n,starred) so every entry is a uniform triple.
struct Domino {
    int j = 0;
    int i = 0;
    bool starred = false;

    bool is_singleton() const { return j == i; }
    friend bool operator==(const Domino&, const Domino&) = default;
    friend auto operator<=>(const Domino&, const Domino&) = default;
};

struct EncodingSequence {
    int n = 0;
    std::vector<Domino> entries;

    friend bool operator==(const EncodingSequence&, const EncodingSequence&) = default;
    friend auto operator<=>(const EncodingSequence&, const EncodingSequence&) = default;
};

inline std::string to_text(const Domino& d) {
    std::ostringstream os;
    if (d.is_singleton())
        os << "(" << d.j << ")*";
    else
        os << "(" << d.j << "," << d.i << ")" << (d.starred ? "*" : "");
    return os.str();
}

inline std::string to_text(const EncodingSequence& seq) {
    std::string out;
    for (std::size_t m = 0; m < seq.entries.size(); ++m) {
        if (m) out += ' ';
        out += to_text(seq.entries[m]);
    }
    return out;
}

/// Which part of the definition of encoding sequences a word breaks.
enum class Clause {
    none,
    structure,       // malformed triple (i > j, value out of [n], bad star)
    disjoint_union,  // (i) starred entries must partition [n]
    after_starred,   // (ii) constraints on what may follow (j,i)*
    unstarred,       // (iii) constraints around a plain (j,i)
    start,           // first domino must be (k,k-1) or (k,k-1)*
};

inline const char* clause_name(Clause c) {
    switch (c) {
        case Clause::none: return "none";
        case Clause::structure: return "structure";
        case Clause::disjoint_union: return "i";
        case Clause::after_starred: return "ii";
        case Clause::unstarred: return "iii";
        case Clause::start: return "start";
    }
    return "?";
}

struct ValidationResult {
    bool ok = true;
    Clause clause = Clause::none;
    int index = -1;  // offending entry, 0-based
    std::string message;

    explicit operator bool() const { return ok; }
};

namespace detail {

inline ValidationResult fail(Clause c, int index, std::string msg) {
    return ValidationResult{false, c, index, std::move(msg)};
}

}  // namespace detail

/// Checks clauses (i)-(iii) plus the start condition and reports the first
/// violation found.
inline ValidationResult validate(const EncodingSequence& seq) {
    const int n = seq.n;
    const auto& e = seq.entries;
    if (n < 1) return detail::fail(Clause::structure, -1, "n must be >= 1");
    if (e.empty()) return detail::fail(Clause::structure, -1, "empty sequence");

    for (std::size_t m = 0; m < e.size(); ++m) {
        const Domino& d = e[m];
        if (d.i < 1 || d.j > n || (d.j <= d.i && !(d.is_singleton() && d.j == n && d.starred)))
            return detail::fail(Clause::structure, static_cast<int>(m),
                                "entry " + to_text(d) + " is not a domino on [n]");
    }

    // (i) starred entries partition [n]; the singleton contributes {n} once
    std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t m = 0; m < e.size(); ++m) {
        if (!e[m].starred) continue;
        const std::vector<int> vals =
            e[m].is_singleton() ? std::vector<int>{e[m].j} : std::vector<int>{e[m].i, e[m].j};
        for (int v : vals) {
            if (seen[static_cast<std::size_t>(v)]++)
                return detail::fail(Clause::disjoint_union, static_cast<int>(m),
                                    "value " + std::to_string(v) + " starred twice");
        }
    }
    for (int v = 1; v <= n; ++v)
        if (!seen[static_cast<std::size_t>(v)])
            return detail::fail(Clause::disjoint_union, static_cast<int>(e.size()) - 1,
                                "value " + std::to_string(v) + " never starred");

    // (ii) after (j,i)*: next first entry > i; no later entry inside (i,j)
    for (std::size_t m = 0; m < e.size(); ++m) {
        if (!e[m].starred) continue;
        const int i = e[m].i, j = e[m].j;
        if (m + 1 < e.size() && e[m + 1].j <= i)
            return detail::fail(Clause::after_starred, static_cast<int>(m),
                                "next first entry " + std::to_string(e[m + 1].j) +
                                    " not > " + std::to_string(i));
        for (std::size_t l = m + 1; l < e.size(); ++l)
            for (int v : {e[l].i, e[l].j})
                if (i < v && v < j)
                    return detail::fail(Clause::after_starred, static_cast<int>(m),
                                        "later entry " + std::to_string(v) + " lies between " +
                                            std::to_string(i) + " and " + std::to_string(j));
    }

    // (iii) around a plain (j,i)
    for (std::size_t m = 0; m < e.size(); ++m) {
        if (e[m].starred) continue;
        const int i = e[m].i, j = e[m].j;
        if (m + 1 == e.size())
            return detail::fail(Clause::unstarred, static_cast<int>(m),
                                "sequence ends with an unstarred domino");
        if (e[m + 1].j != i)
            return detail::fail(Clause::unstarred, static_cast<int>(m),
                                "next domino does not start with " + std::to_string(i));
        bool i_later = false, j_later = false;
        for (std::size_t l = m + 1; l < e.size(); ++l) {
            i_later |= e[l].i == i || e[l].j == i;
            j_later |= e[l].i == j || e[l].j == j;
        }
        if (!i_later || !j_later)
            return detail::fail(Clause::unstarred, static_cast<int>(m),
                                "entries of " + to_text(e[m]) + " do not both recur");
        for (int v = i + 1; v < j; ++v) {
            bool starred_earlier = false;
            for (std::size_t l = 0; l < m; ++l)
                starred_earlier |= e[l].starred && (e[l].i == v || e[l].j == v);
            if (!starred_earlier)
                return detail::fail(Clause::unstarred, static_cast<int>(m),
                                    std::to_string(v) + " between " + std::to_string(i) + " and " +
                                        std::to_string(j) + " not starred earlier");
        }
    }

    // must start with (k,k-1) or (k,k-1)*; for n = 1 the sequence is (1)*
    const Domino& first = e.front();
    if (n == 1) {
        if (!(first.is_singleton() && first.j == 1 && e.size() == 1))
            return detail::fail(Clause::start, 0, "sequence on [1] must be (1)*");
    } else if (first.is_singleton() || first.j != first.i + 1) {
        return detail::fail(Clause::start, 0, "first domino must be (k,k-1) or (k,k-1)*");
    }
    return {};
}

/// The left-to-right code psi. Repeatedly: while some support element lies
/// strictly between pi_1 and pi_2, apply the transposition with the largest
/// such element and record it; once pi_1, pi_2 are support-adjacent, record
/// the starred deletion and drop both letters. A final lone element n
/// yields (n)*.
inline EncodingSequence encode(const perm::Permutation& p) {
    if (!p.is_standard() || p.empty())
        throw std::domain_error("encode: permutation must be on [n], n >= 1");
    if (!perm::is_downup(p)) throw std::domain_error("encode: permutation is not down-up");

    const int n = p.size();
    std::vector<int> word = p.word();
    std::set<int> support(word.begin(), word.end());
    EncodingSequence out{n, {}};

    while (support.size() >= 2) {
        const int a = word[0], b = word[1];
        // largest support element strictly between pi_2 and pi_1
        auto it = support.lower_bound(a);
        --it;  // greatest element < a; at least b exists
        if (*it != b) {
            const int mid = *it;
            out.entries.push_back({a, mid, false});
            for (int& v : word) {
                if (v == a) v = mid;
                else if (v == mid) v = a;
            }
        } else {
            out.entries.push_back({a, b, true});
            word.erase(word.begin(), word.begin() + 2);
            support.erase(a);
            support.erase(b);
        }
        assert(perm::is_downup(perm::Permutation(word)));
    }
    if (support.size() == 1) out.entries.push_back({*support.begin(), *support.begin(), true});

    assert(validate(out));
    return out;
}

/// psi^{-1}: rebuild the permutation right to left. A starred (a,b)*
/// prepends "a b" (or "n" for the singleton); a plain (j,i) applies the
/// transposition to the word built so far.
inline perm::Permutation decode(const EncodingSequence& seq) {
    if (ValidationResult v = validate(seq); !v)
        throw std::domain_error(std::string("decode: invalid sequence, clause ") +
                                clause_name(v.clause) + " at entry " + std::to_string(v.index) +
                                ": " + v.message);
    std::vector<int> word;
    for (auto it = seq.entries.rbegin(); it != seq.entries.rend(); ++it) {
        if (it->starred) {
            if (it->is_singleton())
                word.insert(word.begin(), it->j);
            else
                word.insert(word.begin(), {it->j, it->i});
        } else {
            assert(!word.empty() && word[0] == it->i);
            for (int& v : word) {
                if (v == it->i) v = it->j;
                else if (v == it->j) v = it->i;
            }
        }
    }
    perm::Permutation p(std::move(word));
    assert(perm::is_downup(p));
    return p;
}

/// ES(n,k) via psi over DU(n,k). There is no direct grammar for encoding
/// sequences, so enumeration goes through psi; the independent validator
/// keeps a psi bug from leaking into ground truth.
inline std::vector<EncodingSequence> enumerate(int n, std::optional<int> k = std::nullopt) {
    if (n < 1) throw std::domain_error("lrcode::enumerate: n must be >= 1");
    if (k && (*k < 1 || *k > n)) throw std::domain_error("lrcode::enumerate: k outside 1..n");
    std::vector<EncodingSequence> out;
    for (const auto& p : perm::enumerate_downup(n, k)) {
        EncodingSequence seq = encode(p);
        if (ValidationResult v = validate(seq); !v)
            throw std::logic_error("lrcode::enumerate: psi produced an invalid sequence (" +
                                   to_text(seq) + ", clause " + clause_name(v.clause) + ")");
        out.push_back(std::move(seq));
    }
    return out;
}

/// Counts of ES(n,k) members starting with (k,k-1) vs (k,k-1)*. These are
/// the two sides of the Entringer recurrence; the function cross-checks the
/// enumeration against the triangle and refuses to return a wrong pair.
inline std::pair<long long, long long> split_counts(int n, int k) {
    if (n < 2 || k < 2 || k > n) throw std::domain_error("split_counts: need 2 <= k <= n");
    long long plain = 0, starred = 0;
    for (const auto& seq : enumerate(n, k)) {
        (seq.entries.front().starred ? starred : plain)++;
    }
    seidel::EntringerTriangle t(n);
    if (BigInt(plain) != t.at(n, k - 1) || BigInt(starred) != t.at(n - 1, n + 1 - k))
        throw std::logic_error("split_counts: enumeration disagrees with the triangle");
    return {plain, starred};
}

}  // namespace entringer::lrcode
