#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bcstar/error.hpp"
#include "bcstar/parabolic.hpp"
#include "oracles.hpp"

using namespace bcstar;

namespace {

std::vector<Interval> intervals_of(int n) {
    std::vector<Interval> out;
    for (int b = 1; b <= n; ++b) {
        out.push_back(Interval::make(-b, b, n));
        out.push_back(Interval::make(b, b, n));
        for (int a = 1; a < b; ++a) out.push_back(Interval::make(a, b, n));
    }
    return out;
}

} // namespace

TEST_CASE("interval shapes") {
    CHECK(Interval::make(-2, 2, 3).kind() == IntervalKind::symmetric);
    CHECK(Interval::make(1, 3, 3).kind() == IntervalKind::positive);
    CHECK(Interval::make(2, 2, 3).kind() == IntervalKind::trivial);
    CHECK_THROWS_AS(Interval::make(-1, 2, 3), DomainError);
    CHECK_THROWS_AS(Interval::make(3, 1, 3), DomainError);
    CHECK_THROWS_AS(Interval::make(1, 4, 3), DomainError);
    CHECK_THROWS_AS(Interval::make(0, 0, 3), DomainError);
    CHECK(parse_interval(" [ -2 , 2 ] ", 2) == Interval::make(-2, 2, 2));
    CHECK_THROWS_AS(parse_interval("[1,2", 2), ParseError);
    CHECK_THROWS_AS(parse_interval("(1,2)", 2), ParseError);
    CHECK_THROWS_AS(parse_interval("[1,5]", 2), ParseError);
    CHECK_THROWS_AS(parse_interval("[\xe2\x88\x92" "1,1]", 2), ParseError);
}

TEST_CASE("generator sets and reversals") {
    CHECK(generator_set(Interval::make(-3, 3, 4)) == std::vector<int>{0, 1, 2});
    CHECK(generator_set(Interval::make(2, 4, 4)) == std::vector<int>{2, 3});
    CHECK(generator_set(Interval::make(2, 2, 4)).empty());
    CHECK(reversal(Interval::make(-2, 2, 3)).to_string() == "-1 -2 3");
    CHECK(reversal(Interval::make(2, 4, 4)).to_string() == "1 4 3 2");
    CHECK(reversal(Interval::make(3, 3, 4)).is_identity());
    CHECK(reversal_word(Interval::make(-2, 2, 2)) == std::vector<int>{0, 1, 0, 1});
    CHECK(reversal_word(Interval::make(1, 3, 3)) == std::vector<int>{1, 2, 1});
}

TEST_CASE("property: reversal words are reduced and give the longest element") {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& iv : intervals_of(n)) {
            const auto word = reversal_word(iv);
            const auto r = word_product(n, word);
            CHECK(r == reversal(iv));
            CHECK(length(r) == static_cast<int>(word.size()));
            if (n <= 4) CHECK(r == ParabolicSubgroup(iv).longest());
        }
    }
}

TEST_CASE("parabolic orders and membership") {
    CHECK(parabolic_order(Interval::make(-3, 3, 3)) == 48);
    CHECK(parabolic_order(Interval::make(2, 4, 4)) == 6);
    CHECK(parabolic_order(Interval::make(1, 1, 4)) == 1);
    for (int n = 1; n <= 4; ++n) {
        for (const auto& iv : intervals_of(n)) {
            const ParabolicSubgroup g(iv);
            CHECK(g.size() == parabolic_order(iv));
            for (const auto& w : all_elements(n)) CHECK(in_parabolic(w, iv) == g.contains(w));
        }
    }
}

TEST_CASE("descents and reduced words") {
    const auto dist = oracle::word_lengths(4);
    for (const auto& w : all_elements(4)) {
        for (int i = 0; i < 4; ++i) {
            CHECK(has_right_descent(w, i) == (dist.at(w * generator(4, i)) < dist.at(w)));
        }
        const auto word = reduced_word(w);
        CHECK(static_cast<int>(word.size()) == dist.at(w));
        CHECK(word_product(4, word) == w);
    }
    CHECK_THROWS_AS(has_right_descent(identity(2), 2), DomainError);
}

TEST_CASE("Bruhat order agrees with the reflection-closure oracle") {
    for (int n = 1; n <= 3; ++n) {
        const auto down = oracle::bruhat_downsets(n);
        for (const auto& w : all_elements(n)) {
            for (const auto& v : all_elements(n)) {
                CHECK(bruhat_leq(v, w) == (down.at(w).count(v) == 1));
            }
        }
    }
}

TEST_CASE("property: Bruhat order in B4 is compatible with subwords of reversal words") {
    std::mt19937_64 rng(3);
    const int n = 4;
    for (int trial = 0; trial < 300; ++trial) {
        const auto w = oracle::random_element(n, rng);
        const auto word = reduced_word(w);
        std::vector<int> sub;
        for (int i : word) {
            if (rng() & 1) sub.push_back(i);
        }
        CHECK(bruhat_leq(word_product(n, sub), w));
        if (!w.is_identity()) CHECK_FALSE(bruhat_leq(w, word_product(n, std::vector<int>(word.begin() + 1, word.end()))));
    }
}

TEST_CASE("minimal coset representatives") {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& iv : intervals_of(n)) {
            std::size_t reps = 0;
            for (const auto& w : all_elements(n)) {
                const bool a = is_min_coset_rep(w, iv);
                CHECK(a == is_min_coset_rep_by_descents(w, iv));
                reps += a;
                const auto [rep, tail] = coset_decompose(w, iv);
                CHECK(rep * tail == w);
                CHECK(is_min_coset_rep(rep, iv));
                CHECK(in_parabolic(tail, iv));
                CHECK(length(w) == length(rep) + length(tail));
            }
            CHECK(reps * parabolic_order(iv) == all_elements(n).size());
        }
    }
}

TEST_CASE("coset order: three characterizations agree on B3") {
    const int n = 3;
    for (const auto& iv : intervals_of(n)) {
        std::vector<SignedPermutation> reps;
        for (const auto& w : all_elements(n)) {
            if (is_min_coset_rep(w, iv)) reps.push_back(w);
        }
        for (const auto& v : reps) {
            for (const auto& w : reps) {
                const bool a = coset_leq(v, w, iv);
                CHECK(a == coset_leq_by_max(v, w, iv));
                CHECK(a == coset_leq_by_any(v, w, iv));
            }
        }
    }
}
