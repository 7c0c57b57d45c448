#include <doctest.h>

#include <set>

#include "entringer/fixtures.hpp"
#include "entringer/lrcode.hpp"
#include "entringer/permutation.hpp"
#include "entringer/seidel.hpp"

using namespace entringer::lrcode;
using entringer::perm::enumerate_downup;
using entringer::perm::Permutation;

namespace {

EncodingSequence seq_of(int n, const std::vector<std::array<int, 3>>& triples) {
    EncodingSequence s{n, {}};
    for (const auto& t : triples) s.entries.push_back({t[0], t[1], t[2] != 0});
    return s;
}

EncodingSequence fixture_code() {
    return seq_of(9, {entringer::fixtures::example_code.begin(),
                      entringer::fixtures::example_code.end()});
}

}  // namespace

TEST_CASE("validator accepts the published sequences") {
    CHECK(validate(seq_of(4, {{2, 1, 1}, {4, 3, 1}})));
    CHECK(validate(seq_of(4, {{4, 3, 0}, {3, 2, 1}, {4, 1, 1}})));
    CHECK(validate(seq_of(1, {{1, 1, 1}})));
    CHECK(validate(fixture_code()));
}

TEST_CASE("validator pinpoints the violated clause") {
    const auto bad = validate(seq_of(4, {{4, 3, 1}, {2, 1, 1}}));
    CHECK_FALSE(bad.ok);
    CHECK(bad.clause == Clause::after_starred);
    CHECK(bad.index == 0);

    const auto missing = validate(seq_of(4, {{2, 1, 1}}));
    CHECK(missing.clause == Clause::disjoint_union);

    const auto dangling = validate(seq_of(4, {{3, 2, 0}, {2, 1, 1}, {4, 3, 1}, {3, 2, 0}}));
    CHECK_FALSE(dangling.ok);

    const auto start = validate(seq_of(4, {{3, 1, 1}, {4, 2, 1}}));
    CHECK_FALSE(start.ok);

    CHECK(std::string(clause_name(Clause::after_starred)) == "ii");
}

TEST_CASE("encode: the worked nine-letter example, verbatim") {
    const Permutation pi(entringer::fixtures::example_word);
    CHECK(encode(pi) == fixture_code());
}

TEST_CASE("encode: small cases") {
    CHECK(encode(Permutation({1})) == seq_of(1, {{1, 1, 1}}));
    CHECK(encode(Permutation({3, 1, 4, 2})) == seq_of(4, {{3, 2, 0}, {2, 1, 1}, {4, 3, 1}}));
    CHECK_THROWS_AS(encode(Permutation({1, 2})), std::domain_error);
    CHECK_THROWS_AS(encode(Permutation({2, 1, 5})), std::domain_error);
}

TEST_CASE("decode: published values") {
    CHECK(decode(seq_of(4, {{4, 3, 0}, {3, 2, 1}, {4, 1, 1}})) == Permutation({4, 2, 3, 1}));
    CHECK(decode(seq_of(1, {{1, 1, 1}})) == Permutation({1}));
    CHECK(decode(seq_of(4, {{2, 1, 1}, {4, 3, 1}})) == Permutation({2, 1, 4, 3}));
}

TEST_CASE("decode rejects invalid sequences and names the clause") {
    CHECK_THROWS_WITH_AS(decode(seq_of(4, {{4, 3, 1}, {2, 1, 1}})),
                         doctest::Contains("clause ii"), std::domain_error);
}

TEST_CASE("psi round-trips in both directions") {
    for (int n = 1; n <= 7; ++n) {
        for (const auto& p : enumerate_downup(n)) {
            const auto code = encode(p);
            CHECK(decode(code) == p);
            CHECK(encode(decode(code)) == code);
        }
    }
}

TEST_CASE("code length = (312 count) + floor((n+1)/2)") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& p : enumerate_downup(n))
            CHECK(static_cast<int>(encode(p).entries.size()) ==
                  entringer::perm::count_312(p) + (n + 1) / 2);
}

TEST_CASE("codes start with (first letter, first letter - 1)") {
    for (int n = 2; n <= 7; ++n)
        for (const auto& p : enumerate_downup(n)) {
            const auto first = encode(p).entries.front();
            CHECK(first.j == p.word().front());
            CHECK(first.i == first.j - 1);
        }
}

TEST_CASE("enumerate matches the published ES_4 sets") {
    using entringer::fixtures::es4_by_k;
    for (int k = 2; k <= 4; ++k) {
        std::set<EncodingSequence> got;
        for (const auto& s : enumerate(4, k)) got.insert(s);
        std::set<EncodingSequence> expected;
        for (const auto& triples : es4_by_k[static_cast<std::size_t>(k - 2)])
            expected.insert(seq_of(4, triples));
        CHECK(got == expected);
    }
    CHECK(enumerate(4).size() == 5);
    CHECK(enumerate(2, 2) == std::vector<EncodingSequence>{seq_of(2, {{2, 1, 1}})});
    CHECK(enumerate(1) == std::vector<EncodingSequence>{seq_of(1, {{1, 1, 1}})});
    CHECK(enumerate(4, 1).empty());
}

TEST_CASE("split counts reproduce the recurrence") {
    CHECK(split_counts(4, 4) == std::pair<long long, long long>{2, 0});
    CHECK(split_counts(4, 3) == std::pair<long long, long long>{1, 1});
    CHECK(split_counts(4, 2) == std::pair<long long, long long>{0, 1});
    CHECK_THROWS_AS(split_counts(4, 1), std::domain_error);

    entringer::seidel::EntringerTriangle tri(7);
    for (int n = 2; n <= 7; ++n)
        for (int k = 2; k <= n; ++k) {
            const auto [plain, starred] = split_counts(n, k);
            CHECK(entringer::BigInt(plain + starred) == tri.at(n, k));
        }
}

TEST_CASE("text rendering") {
    CHECK(to_text(seq_of(4, {{2, 1, 1}, {4, 3, 1}})) == "(2,1)* (4,3)*");
    CHECK(to_text(seq_of(1, {{1, 1, 1}})) == "(1)*");
}
