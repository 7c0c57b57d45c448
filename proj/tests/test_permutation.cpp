#include <doctest.h>

#include <algorithm>
#include <set>

#include "entringer/fixtures.hpp"
#include "entringer/permutation.hpp"
#include "entringer/seidel.hpp"
#include "oracles.hpp"

using namespace entringer::perm;
using entringer::BigInt;

namespace {
Permutation P(std::vector<int> w) { return Permutation(std::move(w)); }
}  // namespace

TEST_CASE("construction rejects repeats and non-positive values") {
    CHECK_THROWS_AS(P({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(P({0, 2}), std::invalid_argument);
    CHECK(P({}).empty());
}

TEST_CASE("down-up predicate") {
    CHECK(is_downup(P({2, 1, 4, 3})));
    CHECK_FALSE(is_downup(P({1, 2})));
    CHECK(is_downup(P({7, 4, 8, 5, 9, 1, 6, 2, 3})));
    CHECK(is_downup(P({})));
    CHECK(is_downup(P({5})));
    CHECK(is_downup(P({3, 1, 2})));
    CHECK_FALSE(is_downup(P({3, 2, 1})));
    CHECK(is_updown(P({1, 3, 2, 4})));
}

TEST_CASE("down-up enumeration matches the published list for n=4") {
    const auto words = enumerate_downup(4);
    std::set<std::vector<int>> got;
    for (const auto& p : words) got.insert(p.word());
    CHECK(got == std::set<std::vector<int>>(entringer::fixtures::du4.begin(),
                                            entringer::fixtures::du4.end()));
    CHECK(std::is_sorted(words.begin(), words.end()));
}

TEST_CASE("down-up enumeration edge cases") {
    CHECK(enumerate_downup(2, 1).empty());
    CHECK(enumerate_downup(6, 4).size() == 14);
    CHECK(enumerate_downup(1).size() == 1);
    CHECK_THROWS_AS(enumerate_downup(4, 5), std::domain_error);
    CHECK_THROWS_AS(enumerate_downup(0), std::domain_error);
}

TEST_CASE("backtracking generator agrees with the filter oracle") {
    for (int n = 1; n <= 7; ++n) {
        const auto expected = oracles::downup_by_filter(n);
        const auto got = enumerate_downup(n);
        REQUIRE(got.size() == expected.size());
        for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].word() == expected[i]);
    }
}

TEST_CASE("per-letter counts match the triangle") {
    entringer::seidel::EntringerTriangle tri(7);
    for (int n = 1; n <= 7; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(BigInt(enumerate_downup(n, k).size()) == tri.at(n, k));
}

TEST_CASE("complement") {
    CHECK(complement(P({4, 2, 3, 1})) == P({1, 3, 2, 4}));
    CHECK(complement(P({})) == P({}));
    CHECK(complement(P({1, 3})) == P({3, 1}));
}

TEST_CASE("reverse") {
    CHECK(reverse(P({2, 1, 4, 3})) == P({3, 4, 1, 2}));
    CHECK(reverse(P({9})) == P({9}));
    CHECK(reverse(P({1, 4, 2, 3})) == P({3, 2, 4, 1}));
}

TEST_CASE("complement and reverse are commuting involutions") {
    std::vector<int> word{1, 2, 3, 4, 5};
    do {
        const Permutation p(word);
        CHECK(complement(complement(p)) == p);
        CHECK(reverse(reverse(p)) == p);
        CHECK(complement(reverse(p)) == reverse(complement(p)));
    } while (std::next_permutation(word.begin(), word.end()));
}

TEST_CASE("complement flips the phase of alternating words") {
    for (int n = 2; n <= 6; n += 2)
        for (const auto& p : enumerate_downup(n)) CHECK(is_updown(complement(p)));
}

TEST_CASE("312 counting") {
    CHECK(count_312(P({2, 1, 4, 3})) == 0);
    CHECK(count_312(P({7, 4, 8, 5, 9, 1, 6, 2, 3})) == 7);
    CHECK(count_312(P({5})) == 0);
}

TEST_CASE("classify: published tags") {
    const auto t1 = classify(P({4, 1, 3, 2}));
    CHECK(t1.count({Family::DU, 4, 4}));
    CHECK(t1.count({Family::DUp, 4, 2}));
    CHECK_FALSE(t1.count({Family::MM, 4, 2}));

    const auto t2 = classify(P({1, 3, 2, 4}));
    CHECK(t2.count({Family::MMp, 4, 4}));
    CHECK(t2.count({Family::MMpp, 4, 4}));

    const auto t3 = classify(P({2, 1, 4, 3}));
    CHECK(t3.count({Family::MM, 4, 4}));
}

TEST_CASE("classify: singleton convention and domain check") {
    const auto tags = classify(P({1}));
    CHECK(tags.size() == 5);
    for (const auto& tag : tags) CHECK(tag.k == 1);
    CHECK_THROWS_AS(classify(P({2, 3})), std::domain_error);
}

TEST_CASE("complement of reverse preserves min-max membership") {
    for (int n = 2; n <= 7; ++n)
        for (const auto& p : enumerate_alternating(n)) {
            bool in_mm = false;
            for (const auto& tag : classify(p)) in_mm |= tag.family == Family::MM;
            if (!in_mm) continue;
            bool image_in_mm = false;
            for (const auto& tag : classify(complement(reverse(p))))
                image_in_mm |= tag.family == Family::MM;
            CHECK(image_in_mm);
        }
}

TEST_CASE("min-max members of [4] match the published list") {
    std::set<std::vector<int>> got;
    for (const auto& p : enumerate_alternating(4))
        for (const auto& tag : classify(p))
            if (tag.family == Family::MM) got.insert(p.word());
    CHECK(got == std::set<std::vector<int>>(entringer::fixtures::mm4.begin(),
                                            entringer::fixtures::mm4.end()));
}
