#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hilbk/bases.hpp"
#include "hilbk/symfunc.hpp"
#include "support.hpp"

using namespace hilbk;
using namespace hilbk::testsupport;

namespace {
SymFunc<Rational> P(std::initializer_list<int> parts) {
    return SymFunc<Rational>::p(Partition(parts));
}
} // namespace

TEST_CASE("ring operations") {
    CHECK(P({1}) * P({1}) == P({1, 1}));
    CHECK(P({2, 1}) * SymFunc<Rational>::one() == P({2, 1}));
    CHECK((P({1}) + P({2})) * (P({1}) - P({2})) == P({1, 1}) - P({2, 2}));
}

TEST_CASE("omega") {
    CHECK(omega(P({3})) == -P({3}));
    CHECK(omega(P({2, 1})) == P({2, 1}));
    std::mt19937 rng(31);
    for (int it = 0; it < 20; ++it) {
        SymFunc<Rational> f = random_symfunc(static_cast<int>(rng() % 7), rng);
        CHECK(omega(omega(f)) == f);
    }
}

TEST_CASE("hall pairing") {
    CHECK(hall(P({2}), P({2})) == Rational(2));
    CHECK(hall(P({2}), P({1, 1})) == Rational(0));
    CHECK(hall(h_to_p(Partition{2}), m_to_p(Partition{2})) == Rational(1));
}

TEST_CASE("partial derivatives") {
    CHECK(partial(Partition{1, 1}, P({1, 1})) == Rational(2) * SymFunc<Rational>::one());
    CHECK(partial(Partition{2}, P({1, 1})).is_zero());
    CHECK(partial(Partition{1}, P({2, 1})) == P({2}));
}

TEST_CASE("h, m, s expansions") {
    SymFunc<Rational> h2;
    h2.add_term(Partition{1, 1}, Rational(1, 2));
    h2.add_term(Partition{2}, Rational(1, 2));
    CHECK(h_to_p(Partition{2}) == h2);

    CHECK(m_to_p(Partition{2}) == P({2}));
    SymFunc<Rational> m11;
    m11.add_term(Partition{1, 1}, Rational(1, 2));
    m11.add_term(Partition{2}, Rational(-1, 2));
    CHECK(m_to_p(Partition{1, 1}) == m11);

    CHECK(s_to_p(Partition{1, 1}) == m11); // s_(1,1) = e_2
    CHECK(s_to_p(Partition{2}) == h_to_p(Partition{2}));
    CHECK(s_to_p(Partition()) == SymFunc<Rational>::one());

    // <h_lambda, m_mu> = delta, n <= 7
    for (int n = 0; n <= 7; ++n) {
        auto parts = partitions_of(n);
        for (const auto& la : parts)
            for (const auto& mu : parts)
                CHECK(hall(h_to_p(la), m_to_p(mu)) ==
                      (la == mu ? Rational(1) : Rational(0)));
    }
}

TEST_CASE("plethysm by scale alphabets") {
    QFrac qm1(QPoly::q() - QPoly(Rational(1)));
    std::mt19937 rng(37);
    for (int it = 0; it < 20; ++it) {
        SymFunc<QFrac> f = random_symfunc_q(1 + static_cast<int>(rng() % 6), rng);
        CHECK(plethysm_scale(f, QFrac(1)) == f);                        // f[X] = f
        CHECK(plethysm_scale(f, QFrac(Rational(-1))) == omega(f));      // f[-X] = omega(f)
        CHECK(plethysm_scale(plethysm_scale(f, qm1), qm1.inverse()) == f);
    }
    // p_2[X(q-1)] = (q^2-1) p_2
    SymFunc<QFrac> p2 = SymFunc<QFrac>::p(Partition{2});
    SymFunc<QFrac> expected = QFrac(QPoly::q_pow(2) - QPoly(Rational(1))) * p2;
    CHECK(plethysm_scale(p2, qm1) == expected);
}

TEST_CASE("v basis") {
    QFrac one_minus_q(QPoly::one_minus_q_pow(1));
    SymFunc<QFrac> v1 = v_basis(Partition{1});
    SymFunc<QFrac> expected1;
    expected1.add_term(Partition{1}, one_minus_q.inverse());
    CHECK(v1 == expected1);

    CHECK(v_basis(Partition{1, 1}) == v1 * v1);

    SymFunc<QFrac> v2 = v_basis(Partition{2});
    SymFunc<QFrac> expected2;
    expected2.add_term(Partition{1, 1},
                       QFrac(Rational(1, 2)) / (one_minus_q * one_minus_q));
    expected2.add_term(Partition{2},
                       QFrac(Rational(1, 2)) / QFrac(QPoly::one_minus_q_pow(2)));
    CHECK(v2 == expected2);

    // multiplicative on random pairs
    std::mt19937 rng(41);
    for (int it = 0; it < 20; ++it) {
        auto pick = [&](int n) {
            auto list = partitions_of(n);
            return list[static_cast<std::size_t>(rng()) % list.size()];
        };
        Partition a = pick(1 + static_cast<int>(rng() % 4));
        Partition b = pick(1 + static_cast<int>(rng() % 4));
        CHECK(v_basis(product(a, b)) == v_basis(a) * v_basis(b));
    }
}

TEST_CASE("expand_in_basis") {
    // basis vectors expand to a single coordinate
    auto coords = expand_in_basis(v_basis(Partition{2, 1}), ExpansionBasis::v);
    REQUIRE(coords.size() == 1);
    CHECK(coords.begin()->first == Partition({2, 1}));
    CHECK(coords.begin()->second == QFrac(1));

    // p_1 = (1-q) v_(1)
    auto c1 = expand_in_basis(SymFunc<QFrac>::p(Partition{1}), ExpansionBasis::v);
    REQUIRE(c1.size() == 1);
    CHECK(c1.begin()->second == QFrac(QPoly::one_minus_q_pow(1)));

    // round-trip through both bases for random homogeneous inputs
    std::mt19937 rng(43);
    for (int n = 0; n <= 6; ++n) {
        SymFunc<QFrac> f = random_symfunc_q(n, rng);
        for (auto basis : {ExpansionBasis::v, ExpansionBasis::u}) {
            auto cs = expand_in_basis(f, basis);
            SymFunc<QFrac> recon;
            for (const auto& [lambda, x] : cs)
                recon += x * (basis == ExpansionBasis::v ? v_basis(lambda) : u_basis(lambda));
            CHECK(recon == f);
        }
    }
}

TEST_CASE("schur orthonormality (small degrees)") {
    for (int n = 0; n <= 5; ++n) {
        auto parts = partitions_of(n);
        for (const auto& la : parts)
            for (const auto& mu : parts)
                CHECK(hall(s_to_p(la), s_to_p(mu)) ==
                      (la == mu ? Rational(1) : Rational(0)));
    }
}

TEST_CASE("expand_in_basis rejects inhomogeneous input") {
    SymFunc<QFrac> f = SymFunc<QFrac>::p(Partition{2}) + SymFunc<QFrac>::p(Partition{1});
    CHECK_THROWS_AS(expand_in_basis(f, ExpansionBasis::v), std::invalid_argument);
}

TEST_CASE("inhomogeneous support and components") {
    SymFunc<Rational> f = P({2, 1}) + P({1}) + SymFunc<Rational>::constant(Rational(5));
    CHECK_FALSE(f.is_homogeneous());
    CHECK(f.degree() == 3);
    CHECK(f.component(1) == P({1}));
    CHECK(f.component(0) == SymFunc<Rational>::constant(Rational(5)));
    CHECK(f.component(2).is_zero());
}
