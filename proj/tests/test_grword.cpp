#include <doctest.h>

#include <set>

#include "entringer/bintree.hpp"
#include "entringer/fixtures.hpp"
#include "entringer/grword.hpp"
#include "entringer/seidel.hpp"

using namespace entringer::grword;
using entringer::bintree::IncreasingBinaryTree;
using entringer::bintree::leaf_stat;
using entringer::bintree::minimal_path;
using entringer::perm::Permutation;

namespace {
GRWord W(std::vector<int> w, Kind kind) { return GRWord{Permutation(std::move(w)), kind}; }
}  // namespace

TEST_CASE("kind conditions") {
    CHECK(satisfies_kind(Permutation({6, 3, 4, 2, 1, 5}), Kind::G));
    CHECK_FALSE(satisfies_kind(Permutation({6, 3, 4, 2, 1, 5}), Kind::R));
    CHECK(satisfies_kind(Permutation({6, 2, 1, 4, 3, 5}), Kind::R));
    CHECK(satisfies_kind(Permutation({3, 1, 2}), Kind::G));  // short words satisfy both
    CHECK(satisfies_kind(Permutation({3, 1, 2}), Kind::R));
}

TEST_CASE("primitivity: published cases") {
    CHECK(is_primitive(W({6, 3, 4, 2, 1, 5}, Kind::G)));
    CHECK(is_primitive(W({6, 2, 1, 4, 3, 5}, Kind::R)));
    // contains the G-factor 5 3 2 1 4
    CHECK_FALSE(is_primitive(W({6, 5, 3, 2, 1, 4}, Kind::G)));
}

TEST_CASE("enumeration matches the published lists, in lexicographic order") {
    const auto gw = enumerate(4, Kind::G);
    const auto rw = enumerate(4, Kind::R);
    std::set<std::vector<int>> gw_set, rw_set;
    for (const auto& w : gw) gw_set.insert(w.word.word());
    for (const auto& w : rw) rw_set.insert(w.word.word());
    CHECK(gw_set == std::set<std::vector<int>>(entringer::fixtures::gw4.begin(),
                                               entringer::fixtures::gw4.end()));
    CHECK(rw_set == std::set<std::vector<int>>(entringer::fixtures::rw4.begin(),
                                               entringer::fixtures::rw4.end()));
    CHECK(std::is_sorted(gw.begin(), gw.end()));
    CHECK(enumerate(4, Kind::G, 2).size() == 1);
    CHECK(enumerate(4, Kind::G, 2).front().word == Permutation({6, 3, 4, 2, 1, 5}));
}

TEST_CASE("route: the eight-letter worked example") {
    const GRWord w = W(entringer::fixtures::gword_example, Kind::G);
    CHECK(route(w) == entringer::fixtures::gword_example_route);
    CHECK(route(w).back() == 4);
}

TEST_CASE("route: six letters and the statistic") {
    const GRWord w = W({6, 3, 4, 2, 1, 5}, Kind::G);
    CHECK(route(w) == std::vector<int>{6, 5, 4, 3, 3, 3});
    CHECK(route_statistic(w) == 2);
}

TEST_CASE("route stabilizes within n+2 steps") {
    for (int n = 1; n <= 5; ++n)
        for (Kind kind : {Kind::G, Kind::R})
            for (const auto& w : enumerate(n, kind)) {
                const auto alpha = route(w);
                CHECK(alpha.size() == static_cast<std::size_t>(n) + 2);
                bool stable = false;
                for (std::size_t i = 0; i + 1 < alpha.size(); ++i) {
                    if (stable) CHECK(alpha[i] == alpha[i + 1]);
                    if (alpha[i] == alpha[i + 1]) stable = true;
                }
            }
}

TEST_CASE("delta: published images") {
    CHECK(delta(W(entringer::fixtures::gword_example, Kind::G)) ==
          IncreasingBinaryTree::from_edges(entringer::fixtures::gword_example_tree));
    CHECK(delta(W({6, 3, 4, 2, 1, 5}, Kind::G)) ==
          IncreasingBinaryTree::from_edges({{2, 1}, {3, 1}, {4, 3}}));
    CHECK(delta(W({3, 1, 2}, Kind::G)) == IncreasingBinaryTree::single(1));
    CHECK_THROWS_AS(delta(W({6, 2, 1, 4, 3, 5}, Kind::R)), std::domain_error);
    CHECK_THROWS_AS(delta(W({6, 5, 3, 2, 1, 4}, Kind::G)), std::domain_error);
}

TEST_CASE("counts match the triangle") {
    entringer::seidel::EntringerTriangle tri(5);
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= n; ++k) {
            CHECK(entringer::BigInt(enumerate(n, Kind::G, k).size()) == tri.at(n, k));
            CHECK(entringer::BigInt(enumerate(n, Kind::R, k).size()) == tri.at(n, k));
        }
}

TEST_CASE("delta is a bijection tied to the route") {
    for (int n = 1; n <= 5; ++n) {
        std::set<IncreasingBinaryTree> image;
        for (const auto& w : enumerate(n, Kind::G)) {
            const auto t = delta(w);
            CHECK(leaf_stat(t) == route_statistic(w));

            // distinct route values from the third entry, flipped, give the
            // minimal path
            const auto alpha = route(w);
            std::vector<int> expected;
            for (std::size_t i = 2; i < alpha.size(); ++i)
                if (expected.empty() || n + 1 - alpha[i] != expected.back())
                    expected.push_back(n + 1 - alpha[i]);
            CHECK(minimal_path(t) == expected);
            image.insert(t);
        }
        const auto all = entringer::bintree::enumerate(n);
        CHECK(image == std::set<IncreasingBinaryTree>(all.begin(), all.end()));
    }
}
