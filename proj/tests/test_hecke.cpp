#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bcstar/error.hpp"
#include "bcstar/hecke.hpp"
#include "bcstar/qpolynomial.hpp"
#include "oracles.hpp"

using namespace bcstar;

TEST_CASE("polynomial arithmetic") {
    const QPolynomial a{1, 1};
    const QPolynomial b{1, 1, 1};
    CHECK((a * b) == QPolynomial{1, 2, 2, 1});
    CHECK((a + b) == QPolynomial{2, 2, 1});
    CHECK((a - a).is_zero());
    CHECK((a - a).degree() == -1);
    CHECK(QPolynomial{1, 0, 0}.coefficients().size() == 1);
    CHECK(a.shifted(2) == QPolynomial{0, 0, 1, 1});
    CHECK(QPolynomial::monomial(3, 2).to_string() == "2q^3");
    CHECK(QPolynomial{1, 2, 0, 1}.to_string() == "1 + 2q + q^3");
    CHECK(QPolynomial{-1, 1}.to_string() == "-1 + q");
    CHECK(QPolynomial().to_string() == "0");
    CHECK_FALSE(QPolynomial{1, -1}.has_nonnegative_coefficients());
}

TEST_CASE("q-integers and exact division") {
    CHECK(q_int(0).is_zero());
    CHECK(q_int(3) == QPolynomial{1, 1, 1});
    CHECK(q_factorial(0) == QPolynomial(1));
    CHECK(q_factorial(3) == QPolynomial{1, 2, 2, 1});
    const std::vector<int> m{2, 3};
    CHECK(r_of_v(m) == QPolynomial{1, 3, 4, 3, 1});
    CHECK(divide_exact(QPolynomial{1, 2, 2, 1}, QPolynomial{1, 1}) == QPolynomial{1, 1, 1});
    CHECK_THROWS_AS(divide_exact(QPolynomial{1, 2}, QPolynomial{1, 1}), Error);
    CHECK_THROWS_AS(divide_exact(QPolynomial{1}, QPolynomial{}), Error);
    CHECK(divide_exact(QPolynomial{}, QPolynomial{1, 1}).is_zero());
}

TEST_CASE("property: exact division inverts multiplication") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const QPolynomial a = oracle::random_poly(rng);
        QPolynomial b = oracle::random_poly(rng);
        b.add_monomial(static_cast<int>(rng() % 3), 1);
        if (b.is_zero()) continue;
        CHECK(divide_exact(a * b, b) == a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("overflow is reported") {
    const QPolynomial big(std::int64_t{1} << 62);
    CHECK_THROWS_AS(big * big, Error);
    CHECK_THROWS_AS(big + big, Error);
}

TEST_CASE("quadratic and braid relations") {
    for (int n = 1; n <= 3; ++n) {
        for (int i = 0; i < n; ++i) {
            const auto s = HeckeElement::basis(generator(n, i));
            HeckeElement expected = s.scaled(QPolynomial{-1, 1});
            expected += HeckeElement::basis(identity(n), QPolynomial{0, 1});
            CHECK(natural_product(s, s) == expected);
        }
    }
    const int n = 3;
    auto T = [&](std::vector<int> word) {
        HeckeElement h = HeckeElement::basis(identity(n));
        for (int i : word) h = multiply_by_generator(h, i);
        return h;
    };
    CHECK(T({0, 1, 0, 1}) == T({1, 0, 1, 0}));
    CHECK(T({1, 2, 1}) == T({2, 1, 2}));
    CHECK(T({0, 2}) == T({2, 0}));
    CHECK(T({0, 1, 0, 1}) == HeckeElement::basis(parse_signed_permutation("-1 -2 3")));
}

TEST_CASE("natural product: basis elements along reduced words") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const auto u = oracle::random_element(n, rng);
        const auto v = oracle::random_element(n, rng);
        const auto product = natural_product(HeckeElement::basis(u), HeckeElement::basis(v));
        if (length(u * v) == length(u) + length(v)) {
            CHECK(product == HeckeElement::basis(u * v));
        }
        CHECK(oracle::basis_by_word(u) == HeckeElement::basis(u));
        // T_u T_v has a T_{uv} term with nonzero coefficient.
        CHECK_FALSE(product.coefficient(u * v).is_zero());
    }
}

TEST_CASE("property: natural product is associative and bilinear") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 3);
        const auto a = oracle::random_hecke(n, rng, 3);
        const auto b = oracle::random_hecke(n, rng, 3);
        const auto c = oracle::random_hecke(n, rng, 3);
        CHECK(natural_product(natural_product(a, b), c) == natural_product(a, natural_product(b, c)));
        CHECK(natural_product(a, b + c) == natural_product(a, b) + natural_product(a, c));
        CHECK(natural_product(HeckeElement::basis(identity(n)), a) == a);
    }
}

TEST_CASE("reversal KL elements") {
    const auto c = kl_reversal(Interval::make(-1, 1, 1));
    CHECK(c.to_string() == "T[1] + T[-1]");
    CHECK(kl_reversal(Interval::make(-2, 2, 3)).size() == 8);
    CHECK(kl_reversal(Interval::make(2, 2, 3)) == HeckeElement::basis(identity(3)));
    // C_J^2 = (sum over W_J of q^l) C_J.
    for (const auto& iv : {Interval::make(-2, 2, 2), Interval::make(1, 3, 3), Interval::make(2, 3, 3)}) {
        QPolynomial poincare;
        for (const auto& w : ParabolicSubgroup(iv).elements()) poincare.add_monomial(length(w), 1);
        const auto cj = kl_reversal(iv);
        CHECK(natural_product(cj, cj) == cj.scaled(poincare));
    }
    const std::vector<Interval> none;
    CHECK(product_of_reversal_kls(2, none) == HeckeElement::basis(identity(2)));
}

TEST_CASE("coset expansion flattens back to the product") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 3);
        const auto iv = oracle::random_interval(n, rng);
        const auto prefix = oracle::random_hecke(n, rng, 3);
        const CosetSum c = coset_expansion(prefix, iv);
        CHECK(flatten(c) == natural_product(prefix, kl_reversal(iv)));
    }
}

TEST_CASE("coset action matches left multiplication") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 3);
        const auto iv = oracle::random_interval(n, rng);
        const auto prefix = oracle::random_hecke(n, rng, 3);
        const int i = static_cast<int>(rng() % n);
        const CosetSum c = coset_expansion(prefix, iv);
        const auto lhs = flatten(douglass_action(i, c));
        const auto rhs = natural_product(HeckeElement::basis(generator(n, i)), flatten(c));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("coset sums reject non-minimal representatives") {
    const auto iv = Interval::make(1, 2, 2);
    CosetSum c(iv);
    CHECK_NOTHROW(c.add(identity(2), QPolynomial(1)));
    CHECK_THROWS_AS(c.add(generator(2, 1), QPolynomial(1)), DomainError);
}

TEST_CASE("hecke element bookkeeping") {
    HeckeElement h(2);
    h.add(identity(2), QPolynomial{1, 1});
    h.add(identity(2), QPolynomial{-1, -1});
    CHECK(h.is_zero());
    CHECK(h.to_string() == "0");
    CHECK_THROWS_AS(h.add(identity(3), QPolynomial(1)), DomainError);
    CHECK_THROWS_AS(HeckeElement(0), DomainError);
    const auto g = HeckeElement::basis(generator(2, 0), QPolynomial{0, 2}) +
                   HeckeElement::basis(identity(2), QPolynomial{1, 1});
    CHECK(g.to_string() == "(1 + q) T[1 2] + 2q T[-1 2]");
    CHECK(g.scaled(QPolynomial{1, 1}).divided(QPolynomial{1, 1}) == g);
    CHECK_THROWS_AS(g.divided(QPolynomial{1, 1}), Error);
}
