#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "bcstar/enumerate.hpp"
#include "bcstar/error.hpp"
#include "bcstar/verify.hpp"
#include "oracles.hpp"

using namespace bcstar;

namespace {

StarNetwork random_network(int n, int max_len, std::mt19937_64& rng) {
    std::vector<Stage> stages;
    const int len = static_cast<int>(rng() % (max_len + 1));
    for (int k = 0; k < len; ++k) stages.push_back(Stage{oracle::random_interval(n, rng), false});
    return StarNetwork(n, stages);
}

HeckeElement sum_records(int n, const std::vector<FamilyRecord>& records) {
    HeckeElement h(n);
    for (const auto& r : records) h.add(r.type, QPolynomial::monomial(r.defects));
    return h;
}

} // namespace

TEST_CASE("a single star gives its parabolic subgroup, defect free") {
    for (int n = 1; n <= 3; ++n) {
        for (const auto& iv : nontrivial_intervals(n)) {
            const auto records = enumerate(simple_star(iv, n));
            CHECK(records.size() == parabolic_order(iv));
            std::set<SignedPermutation> types;
            for (const auto& r : records) {
                CHECK(r.defects == 0);
                CHECK(in_parabolic(r.type, iv));
                types.insert(r.type);
            }
            CHECK(types.size() == records.size());
            CHECK(graphical_expansion(simple_star(iv, n)) == kl_reversal(iv));
        }
    }
}

TEST_CASE("two sign-flip stars in B1") {
    const auto net = parse_network("[-1,1] o [-1,1]", 1);
    const auto records = enumerate(net);
    CHECK(records.size() == 4);
    const QPolynomial one_plus_q{1, 1};
    const auto h = graphical_expansion(net);
    CHECK(h.coefficient(identity(1)) == one_plus_q);
    CHECK(h.coefficient(generator(1, 0)) == one_plus_q);
    CHECK(h.size() == 2);
}

TEST_CASE("the empty network has one family") {
    const StarNetwork empty(3, {});
    const auto records = enumerate(empty);
    REQUIRE(records.size() == 1);
    CHECK(records[0].type.is_identity());
    CHECK(records[0].defects == 0);
    CHECK(graphical_expansion(empty) == HeckeElement::basis(identity(3)));
}

TEST_CASE("ordinary and generalized entry points") {
    const auto condensed = parse_network("[-2,2] o [-1,1] o [1,2] * [-2,2]", 2);
    CHECK_THROWS_AS(enumerate(condensed), DomainError);
    CHECK(enumerate_generalized(condensed).size() * 2 == enumerate(condensed.expanded()).size());
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        const auto net = random_network(2, 3, rng);
        const auto a = enumerate(net);
        const auto b = enumerate_generalized(net);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].family.rows() == b[i].family.rows());
    }
}

TEST_CASE("property: records are valid, distinct, and recount to their defects") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 3);
        const auto net = random_network(n, 3, rng);
        EnumerationOptions opts;
        opts.budget = 5000;
        if (family_count_estimate(net) > opts.budget) continue;
        const auto records = enumerate(net, opts);
        CHECK(records.size() == family_count_estimate(net));
        std::set<std::vector<SignedPermutation>> distinct;
        for (const auto& r : records) {
            CHECK(defect_count(r.family) == r.defects);
            CHECK(static_cast<int>(defects(r.family).size()) == r.defects);
            CHECK(family_type(r.family) == r.type);
            for (const auto& t : defects(r.family)) CHECK(eligible_pair(t.i, t.j, PairBound::inclusive));
            distinct.insert(r.family.rows());
        }
        CHECK(distinct.size() == records.size());
        CHECK(sum_records(n, records) == graphical_expansion(net, opts));
    }
}

TEST_CASE("property: serial and parallel kernels agree") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const auto net = random_network(n, 4, rng);
        EnumerationOptions opts;
        opts.budget = 200000;
        if (family_count_estimate(net) > opts.budget) continue;
        CHECK(count_families_serial(net, opts) == count_families_parallel(net, opts));
    }
    const auto condensed = parse_network("[3,4] * [1,4] * [1,3]", 4);
    CHECK(count_families_serial(condensed) == count_families_parallel(condensed));
}

TEST_CASE("property: graphical expansion equals the Hecke product") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 3);
        const auto net = random_network(n, 4, rng);
        EnumerationOptions opts;
        opts.budget = 300000;
        if (family_count_estimate(net) > opts.budget) continue;
        CHECK(graphical_expansion(net, opts) == product_of_reversal_kls(n, net.intervals()));
    }
}

TEST_CASE("property: target pruning matches the unpruned counts") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 2);
        const auto net = random_network(n, 4, rng);
        if (family_count_estimate(net) > 100000) continue;
        const auto full = graphical_expansion(net);
        for (int pick = 0; pick < 4; ++pick) {
            const auto u = oracle::random_element(n, rng);
            EnumerationOptions opts;
            opts.prune_cap = 1 + rng() % 50;
            CHECK(kl_poly_extract(net, u, opts) == full.coefficient(u));
            CHECK(kl_poly_extract(net, u) == full.coefficient(u));
        }
    }
    CHECK_THROWS_AS(kl_poly_extract(parse_network("[1,2]", 2), identity(3)), DomainError);
}

TEST_CASE("budget refusal happens before enumeration") {
    const auto net = parse_network("[-4,4] o [-4,4] o [-4,4]", 4);
    EnumerationOptions opts;
    try {
        count_families(net, opts);
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
        CHECK(e.estimate() == 384ull * 384 * 384);
        CHECK(e.budget() == kDefaultBudget);
    }
    int visited = 0;
    CHECK_THROWS_AS(for_each_family(net, [&](auto, int) { ++visited; }, opts), BudgetExceeded);
    CHECK(visited == 0);
    opts.budget = 15;
    CHECK_THROWS_AS(graphical_expansion(builtin_network("F3412"), opts), BudgetExceeded);
    opts.budget = 16;
    CHECK_NOTHROW(graphical_expansion(builtin_network("F3412"), opts));
}

TEST_CASE("subexpression expansion: hand values") {
    const std::vector<int> twice{0, 0};
    const QPolynomial one_plus_q{1, 1};
    const auto d = deodhar_expand(twice, 1);
    CHECK(d.coefficient(identity(1)) == one_plus_q);
    CHECK(d.coefficient(generator(1, 0)) == one_plus_q);
    const std::vector<int> none;
    CHECK(deodhar_expand(none, 2) == HeckeElement::basis(identity(2)));
    const std::vector<int> one{1};
    CHECK(deodhar_expand(one, 2) ==
          HeckeElement::basis(identity(2)) + HeckeElement::basis(generator(2, 1)));
    const std::vector<int> bad{2};
    CHECK_THROWS_AS(deodhar_expand(bad, 2), DomainError);
    CHECK_THROWS_AS(wiring_network(bad, 2), DomainError);
}

TEST_CASE("property: subexpressions, wiring diagrams and products of T_e + T_s agree") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 3);
        std::vector<int> gens(rng() % 7);
        for (int& g : gens) g = static_cast<int>(rng() % n);
        HeckeElement product = HeckeElement::basis(identity(n));
        for (int g : gens) {
            product = natural_product(
                product, HeckeElement::basis(identity(n)) + HeckeElement::basis(generator(n, g)));
        }
        const auto d = deodhar_expand(gens, n);
        CHECK(d == product);
        CHECK(graphical_expansion(wiring_network(gens, n)) == product);
    }
}

TEST_CASE("collapse identities") {
    for (const auto& [text, n] : std::vector<std::pair<const char*, int>>{
             {"[-2,2] o [-1,1] o [1,2] * [-2,2]", 2},
             {"[1,3] * [1,3]", 3},
             {"[-3,3] * [1,3]", 3},
             {"[1,3] * [-3,3]", 3},
             {"[3,4] * [1,4] * [1,3]", 4},
             {"[1,2] o [2,4] * [2,4]", 4},
         }) {
        CAPTURE(text);
        const auto net = parse_network(text, n);
        const QPolynomial r = r_of_v(merged_multiplicities(net));
        const auto f = graphical_expansion(net);
        CHECK(graphical_expansion(net.expanded()) == f.scaled(r));
        CHECK(f == hecke_side(net));
    }
    CHECK(graphical_expansion(parse_network("[1,3] * [1,3]", 3)) == kl_reversal(Interval::make(1, 3, 3)));
}
