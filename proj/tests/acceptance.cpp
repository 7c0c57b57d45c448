// Acceptance suite: one line per criterion, exact expectations throughout.
// Exits non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "entringer/altbij.hpp"
#include "entringer/bintree.hpp"
#include "entringer/fixtures.hpp"
#include "entringer/grword.hpp"
#include "entringer/lrcode.hpp"
#include "entringer/permutation.hpp"
#include "entringer/seidel.hpp"
#include "entringer/tangent.hpp"
#include "entringer/uword.hpp"
#include "entringer/verify.hpp"

using namespace entringer;
using perm::Permutation;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string error;
    try {
        ok = body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    std::printf("%s criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
                error.empty() ? "" : " -- ", error.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

template <typename T>
std::set<std::vector<int>> word_set(const std::vector<T>& xs);

template <>
std::set<std::vector<int>> word_set(const std::vector<Permutation>& xs) {
    std::set<std::vector<int>> out;
    for (const auto& x : xs) out.insert(x.word());
    return out;
}

template <>
std::set<std::vector<int>> word_set(const std::vector<grword::GRWord>& xs) {
    std::set<std::vector<int>> out;
    for (const auto& x : xs) out.insert(x.word.word());
    return out;
}

template <>
std::set<std::vector<int>> word_set(const std::vector<uword::UWord>& xs) {
    std::set<std::vector<int>> out;
    for (const auto& x : xs) out.insert(x.u);
    return out;
}

lrcode::EncodingSequence fixture_sequence(int n, const std::vector<fixtures::DominoTriple>& ts) {
    lrcode::EncodingSequence s{n, {}};
    for (const auto& t : ts) s.entries.push_back({t[0], t[1], t[2] != 0});
    return s;
}

}  // namespace

int main() {
    criterion(1, "triangle reproduces Table 1 and the Euler series", [] {
        seidel::EntringerTriangle tri = seidel::build_triangle(7);
        for (int n = 1; n <= 7; ++n) {
            const auto& row = tri.row(n);
            const auto& expected = fixtures::triangle_rows[static_cast<std::size_t>(n - 1)];
            if (row.size() != expected.size()) return false;
            for (std::size_t i = 0; i < row.size(); ++i)
                if (row[i] != BigInt(expected[i])) return false;
        }
        for (int n = 0; n <= 8; ++n)
            if (seidel::euler_number(n) != BigInt(fixtures::euler_series[static_cast<std::size_t>(n)]))
                return false;
        return true;
    });

    criterion(2, "golden lists: DU_4, ES_4 per k, MM_4, GW_4, RW_4, UW_4", [] {
        if (word_set(perm::enumerate_downup(4)) !=
            std::set<std::vector<int>>(fixtures::du4.begin(), fixtures::du4.end()))
            return false;

        for (int k = 2; k <= 4; ++k) {
            std::set<lrcode::EncodingSequence> got;
            for (const auto& s : lrcode::enumerate(4, k)) got.insert(s);
            std::set<lrcode::EncodingSequence> expected;
            for (const auto& triples : fixtures::es4_by_k[static_cast<std::size_t>(k - 2)])
                expected.insert(fixture_sequence(4, triples));
            if (got != expected) return false;
        }

        std::set<std::vector<int>> mm;
        for (const auto& p : perm::enumerate_alternating(4))
            for (const auto& tag : perm::classify(p))
                if (tag.family == perm::Family::MM) mm.insert(p.word());
        if (mm != std::set<std::vector<int>>(fixtures::mm4.begin(), fixtures::mm4.end()))
            return false;

        if (word_set(grword::enumerate(4, grword::Kind::G)) !=
            std::set<std::vector<int>>(fixtures::gw4.begin(), fixtures::gw4.end()))
            return false;
        if (word_set(grword::enumerate(4, grword::Kind::R)) !=
            std::set<std::vector<int>>(fixtures::rw4.begin(), fixtures::rw4.end()))
            return false;
        return word_set(uword::enumerate(4)) ==
               std::set<std::vector<int>>(fixtures::uw4.begin(), fixtures::uw4.end());
    });

    criterion(3, "worked example: 12-domino code and its tree", [] {
        const Permutation pi(fixtures::example_word);
        if (lrcode::encode(pi) != fixture_sequence(9, fixtures::example_code)) return false;
        const auto t = bintree::psi_total(pi);
        return t == bintree::IncreasingBinaryTree::from_edges(fixtures::example_tree) &&
               bintree::minimal_path(t) == fixtures::example_minimal_path;
    });

    criterion(4, "Psi is a first-letter/leaf bijection for n <= 9, under 60 s", [] {
        const auto start = std::chrono::steady_clock::now();
        for (int n = 1; n <= 9; ++n) {
            std::set<bintree::IncreasingBinaryTree> image;
            const auto words = perm::enumerate_downup(n);
            for (const auto& p : words) {
                const auto t = bintree::psi_total(p);
                if (bintree::leaf_stat(t) != p.word().front()) return false;
                image.insert(t);
            }
            if (image.size() != words.size()) return false;  // injective
            const auto all = bintree::enumerate(n);
            if (image != std::set<bintree::IncreasingBinaryTree>(all.begin(), all.end()))
                return false;  // surjective
        }
        const auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
            std::chrono::steady_clock::now() - start);
        return elapsed.count() < 60;
    });

    criterion(5, "round-trips: psi, phi, theta, rho, gamma, alpha", [] {
        for (int n = 1; n <= 9; ++n) {
            for (const auto& p : perm::enumerate_downup(n)) {
                const auto code = lrcode::encode(p);
                if (lrcode::decode(code) != p) return false;
                const auto tree = bintree::phi(code);
                if (bintree::phi_inverse(tree) != code) return false;
                if (altbij::theta_inverse(altbij::theta(p)) != p) return false;
                const auto u = uword::gamma(p);
                if (uword::gamma_inverse(u) != p) return false;
                if (n >= 2 && uword::alpha_map(uword::alpha_map(u)) != u) return false;
            }
            for (const auto& t : bintree::enumerate(n))
                if (bintree::phi(bintree::phi_inverse(t)) != t) return false;
        }
        // image families with their statistics, exhaustively at n <= 8
        for (int n = 1; n <= 8; ++n) {
            std::set<Permutation> mm, mmp, mmpp;
            for (const auto& q : perm::enumerate_alternating(n))
                for (const auto& tag : perm::classify(q)) {
                    if (tag.family == perm::Family::MM) mm.insert(q);
                    if (tag.family == perm::Family::MMp) mmp.insert(q);
                    if (tag.family == perm::Family::MMpp) mmpp.insert(q);
                }
            std::set<Permutation> beta_image, rho_image, rho_prime_image;
            for (const auto& p : perm::enumerate_downup(n)) {
                beta_image.insert(altbij::beta(altbij::theta(p)));
                const auto q = altbij::rho(p);
                if (altbij::rho_inverse(q) != p) return false;
                rho_image.insert(q);
                rho_prime_image.insert(altbij::rho_prime(q));
            }
            if (beta_image != mm || rho_image != mmp || rho_prime_image != mmpp) return false;
        }
        return true;
    });

    criterion(6, "both decompositions of E(n,k): split counts and removable edges", [] {
        seidel::EntringerTriangle tri(9);
        for (int n = 2; n <= 9; ++n)
            for (int k = 2; k <= n; ++k) {
                const auto [plain, starred] = lrcode::split_counts(n, k);
                if (BigInt(plain) != tri.at(n, k - 1)) return false;
                if (BigInt(starred) != tri.at(n - 1, n + 1 - k)) return false;
                long long removable = 0, kept = 0;
                for (const auto& t : bintree::enumerate(n, bintree::Statistic::leaf, k))
                    (bintree::is_removable(t, k) ? removable : kept)++;
                if (BigInt(kept) != tri.at(n, k - 1)) return false;
                if (BigInt(removable) != tri.at(n - 1, n + 1 - k)) return false;
            }
        return true;
    });

    criterion(7, "code length equals the 312 count plus floor((n+1)/2)", [] {
        for (int n = 1; n <= 9; ++n)
            for (const auto& p : perm::enumerate_downup(n))
                if (static_cast<int>(lrcode::encode(p).entries.size()) !=
                    perm::count_312(p) + (n + 1) / 2)
                    return false;
        return true;
    });

    criterion(8, "G/R-word counts for n <= 6 and the delta correspondence", [] {
        seidel::EntringerTriangle tri(6);
        for (int n = 1; n <= 6; ++n) {
            std::map<int, long long> gw_counts, rw_counts;
            std::set<bintree::IncreasingBinaryTree> image;
            for (const auto& w : grword::enumerate(n, grword::Kind::G)) {
                ++gw_counts[grword::route_statistic(w)];
                const auto t = grword::delta(w);
                if (bintree::leaf_stat(t) != grword::route_statistic(w)) return false;
                image.insert(t);
            }
            for (const auto& w : grword::enumerate(n, grword::Kind::R))
                ++rw_counts[grword::route_statistic(w)];
            for (int k = 1; k <= n; ++k) {
                const BigInt expected = tri.at(n, k);
                if (BigInt(gw_counts[k]) != expected) return false;
                if (BigInt(rw_counts[k]) != expected) return false;
            }
            const auto all = bintree::enumerate(n);
            if (image != std::set<bintree::IncreasingBinaryTree>(all.begin(), all.end()))
                return false;
        }
        return true;
    });

    criterion(9, "theta involution, second-letter theorem, symmetry corollary", [] {
        for (int n = 1; n <= 9; ++n)
            for (const auto& p : perm::enumerate_downup(n)) {
                const auto s = altbij::theta(p);
                if (altbij::theta(s) != p) return false;
                if (n >= 2 && s.at(1) != p.at(1)) return false;
            }
        for (int n = 2; n <= 8; ++n) {
            std::map<std::pair<int, int>, long long> joint;
            for (const auto& p : perm::enumerate_downup(n)) {
                const auto q = perm::complement(p);
                ++joint[{q.at(0), q.at(1) - q.at(0)}];
            }
            for (const auto& [ab, count] : joint)
                if (count != joint[{ab.second, ab.first}]) return false;
        }
        return true;
    });

    criterion(10, "the twelve-row table at n=4, with the row-8 misprint flagged", [] {
        const auto report = harness::golden_table();
        if (!report.pass) return false;
        int errata = 0;
        for (const auto& row : report.rows)
            for (const auto& cell : row)
                if (cell.status == harness::CellStatus::erratum) {
                    ++errata;
                    if (cell.computed != "2314") return false;
                }
        return errata == 1;
    });

    criterion(11, "split-pair arrangements count 0-2 trees, summing to E(2n+1)/2^n", [] {
        seidel::EntringerTriangle tri(1);
        for (int n = 1; n <= 4; ++n) {
            const auto t = tangent::t_table(n);
            if (t != tangent::s_table(n)) return false;
            long long total = 0;
            for (const auto& [k, count] : t) total += count;
            if (BigInt(total) != tri.reduced_tangent(n)) return false;
        }
        return true;
    });

    if (failures == 0) {
        std::printf("acceptance: all 11 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", failures);
    return 1;
}
