#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hilbk/errors.hpp"
#include "hilbk/qpoly.hpp"
#include "hilbk/qtpoly.hpp"
#include "hilbk/zseries.hpp"
#include "support.hpp"

using namespace hilbk;
using namespace hilbk::testsupport;

TEST_CASE("rationals are canonical") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational("2/4").str() == "1/2");
    CHECK(Rational("5").str() == "5");
    CHECK(Rational(7, 1).str() == "7");
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("qpoly basics") {
    QPoly q = QPoly::q();
    QPoly p = q * q - QPoly(Rational(1)); // q^2 - 1
    CHECK(p.degree() == 2);
    CHECK(p.coeff(0) == Rational(-1));
    CHECK(p.coeff(1) == Rational(0));
    CHECK(p.coeff(2) == Rational(1));
    CHECK(p.eval(Rational(3)) == Rational(8));
    CHECK((q + QPoly(Rational(1))).canonical_text() == "1*q^0 + 1*q^1");
    CHECK(QPoly().canonical_text() == "0");

    QPoly shifted = p.shifted_to_one(); // (1+u)^2 - 1 = 2u + u^2
    CHECK(shifted.coeff(0) == Rational(0));
    CHECK(shifted.coeff(1) == Rational(2));
    CHECK(shifted.coeff(2) == Rational(1));

    CHECK(q.dilated(3) == QPoly::q_pow(3));
    CHECK(p.order_at_one() == 1);
    CHECK(p.divided_by_q_minus_1(1) == q + QPoly(Rational(1)));
}

TEST_CASE("qpoly divrem and gcd") {
    std::mt19937 rng(7);
    for (int it = 0; it < 200; ++it) {
        QPoly a = random_qpoly(rng, 5);
        QPoly b = random_nonzero_qpoly(rng, 3);
        QPoly quot, rem;
        QPoly::divrem(a, b, quot, rem);
        CHECK(a == quot * b + rem);
        CHECK(rem.degree() < b.degree());
    }
    // gcd((q-1)(q+1), (q-1)q) = q-1 up to monic normalization
    QPoly qm1 = QPoly::q() - QPoly(Rational(1));
    QPoly g = QPoly::gcd(qm1 * (QPoly::q() + QPoly(Rational(1))), qm1 * QPoly::q());
    CHECK(g == qm1);
}

TEST_CASE("qfrac canonical form") {
    // (q^2-1)/(q-1) reduces to q+1
    QFrac r(QPoly::q_pow(2) - QPoly(Rational(1)), QPoly::q() - QPoly(Rational(1)));
    CHECK(r == QFrac(QPoly::q() + QPoly(Rational(1))));
    CHECK(r.is_polynomial());
    // denominators come out monic
    QFrac s(QPoly(Rational(1)), Rational(2) * QPoly::q());
    CHECK(s.den() == QPoly::q());
    CHECK(s.num() == QPoly(Rational(1, 2)));
}

TEST_CASE("qfrac field axioms (random)") {
    std::mt19937 rng(11);
    for (int it = 0; it < 60; ++it) {
        QFrac a = random_qfrac(rng), b = random_qfrac(rng), c = random_qfrac(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK(a * a.inverse() == QFrac(1));
    }
}

TEST_CASE("qtfrac field axioms (random, cross-multiplication equality)") {
    std::mt19937 rng(13);
    for (int it = 0; it < 40; ++it) {
        QTFrac a = random_qtfrac(rng), b = random_qtfrac(rng), c = random_qtfrac(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == QTFrac(Rational(1)));
    }
}

TEST_CASE("series_at_one examples") {
    auto s1 = series_at_one(QFrac(1), 2);
    CHECK(s1 == std::vector<Rational>{Rational(1), Rational(0), Rational(0)});

    QFrac r(QPoly::q_pow(2) - QPoly(Rational(1)), QPoly::q() - QPoly(Rational(1)));
    auto s2 = series_at_one(r, 1);
    CHECK(s2 == std::vector<Rational>{Rational(2), Rational(1)});

    CHECK_THROWS_AS(series_at_one(QFrac(QPoly(Rational(1)),
                                        QPoly::q() - QPoly(Rational(1))), 0),
                    PoleAtOne);
}

TEST_CASE("series reconstruction property") {
    std::mt19937 rng(17);
    QFrac qm1(QPoly::q() - QPoly(Rational(1)));
    for (int it = 0; it < 50; ++it) {
        // pole-free at q=1: random numerator over a denominator with den(1) != 0
        QPoly den = random_nonzero_qpoly(rng, 3);
        if (den.eval_one().is_zero()) den += QPoly(Rational(1));
        if (den.eval_one().is_zero()) continue;
        QFrac r(random_qpoly(rng, 4), den);
        int m = static_cast<int>(rng() % 4);
        auto coeffs = series_at_one(r, m);
        QFrac recon(0);
        for (int i = 0; i <= m; ++i) recon += QFrac(coeffs[static_cast<std::size_t>(i)]) * pow(qm1, i);
        QFrac diff = r - recon;
        if (diff.is_zero()) continue;
        // difference vanishes to order >= m+1 at q=1
        CHECK(diff.num().order_at_one() - diff.den().order_at_one() >= m + 1);
    }
}

TEST_CASE("coeff_q1 examples and negative index convention") {
    QFrac qp1(QPoly::q() + QPoly(Rational(1)));
    CHECK(coeff_q1(qp1, 0) == Rational(2));
    CHECK(coeff_q1(qp1, 1) == Rational(1));
    QFrac cube(pow(QPoly::q() - QPoly(Rational(1)), 3));
    CHECK(coeff_q1(cube, 2) == Rational(0));
    CHECK(coeff_q1(qp1, -3) == Rational(0));
}

TEST_CASE("limit_q1 examples") {
    QFrac a(QPoly::one_minus_q_pow(3), QPoly::one_minus_q_pow(1));
    CHECK(limit_q1(a) == Rational(3));
    QFrac b(QPoly::one_minus_q_pow(10), QPoly::one_minus_q_pow(2));
    CHECK(limit_q1(b) == Rational(5));
    CHECK_THROWS_AS(limit_q1(QFrac(QPoly(Rational(1)), QPoly::q() - QPoly(Rational(1)))),
                    PoleAtOne);
}

TEST_CASE("limit_q1 kills (q-1) multiples") {
    std::mt19937 rng(19);
    QFrac qm1(QPoly::q() - QPoly(Rational(1)));
    for (int it = 0; it < 40; ++it) {
        QPoly den = random_nonzero_qpoly(rng, 3);
        if (den.eval_one().is_zero()) den += QPoly(Rational(1));
        if (den.eval_one().is_zero()) continue;
        QFrac r(random_qpoly(rng, 4), den);
        CHECK(limit_q1(qm1 * r) == Rational(0));
    }
}

TEST_CASE("limit_t1 examples") {
    QTPoly one(Rational(1));
    QTPoly t = QTPoly::t();
    // (1 - t^4)/(1 - t) -> 4
    QTPoly t4 = QTPoly::monomial(Rational(1), 0, 4);
    CHECK(limit_t1(QTFrac(one - t4, one - t)) == QFrac(4));
    // (1-q^n)(1-t^n)/((1-q)(1-t)) for n=2: the whole thing is (1+q)(1+t),
    // so the limit is 2(1+q)
    QTPoly num = QTPoly(QPoly::one_minus_q_pow(2)) * (one - QTPoly::monomial(Rational(1), 0, 2));
    QTPoly den = QTPoly(QPoly::one_minus_q_pow(1)) * (one - t);
    CHECK(limit_t1(QTFrac(num, den)) ==
          QFrac(Rational(2) * (QPoly::q() + QPoly(Rational(1)))));
    // q^3 + t*0 -> q^3
    CHECK(limit_t1(QTFrac(QTPoly(QPoly::q_pow(3)))) == QFrac(QPoly::q_pow(3)));
    // genuine pole
    CHECK_THROWS_AS(limit_t1(QTFrac(one, one - t)), PoleAtTOne);
}

TEST_CASE("double limit commutes on pole-free inputs") {
    std::mt19937 rng(23);
    for (int it = 0; it < 60; ++it) {
        QTPoly den = random_nonzero_qtpoly(rng);
        if (den.at_t1().eval_one().is_zero()) den += QTPoly(Rational(1));
        if (den.at_t1().eval_one().is_zero()) continue;
        QTFrac r(random_qtpoly(rng), den);
        Rational via_t_first = limit_q1(limit_t1(r));
        Rational via_q_first = limit_q1(limit_t1(r.swapped()));
        CHECK(via_t_first == via_q_first);
    }
}

TEST_CASE("laurent series windowing and truncation") {
    QTFrac two(Rational(2)), three(Rational(3));
    ZSeries a = ZSeries::monomial(two, -2);
    ZSeries b = ZSeries::monomial(three, 2, 3); // truncated at z^3
    ZSeries p = a * b;                          // 6 z^0, truncation 3 + (-2) = 1
    CHECK(p.coeff_at(0) == QTFrac(Rational(6)));
    CHECK(p.truncation() == 1);
    CHECK_THROWS_AS(p.coeff_at(2), TruncationExceeded);

    ZSeries sum = ZSeries::monomial(two, 1) + ZSeries::monomial(three, 1);
    CHECK(sum.coeff_at(1) == QTFrac(Rational(5)));
    CHECK(sum.coeff_at(0).is_zero());
    CHECK((a - a).is_zero());
}
