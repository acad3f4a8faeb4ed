#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hilbk/product.hpp"
#include "hilbk/verify.hpp"
#include "support.hpp"

using namespace hilbk;
using namespace hilbk::testsupport;

namespace {

// Independent route for W: the defining pairing
// (q-1)^n <s_n, h_lambda[X/(q-1)]> with s_n = h_n.
QFrac W_via_pairing(const Partition& lambda) {
    const int n = lambda.sum();
    QFrac qm1(QPoly::q() - QPoly(Rational(1)));
    SymFunc<QFrac> sn = lift_q(h_to_p(n == 0 ? Partition() : Partition{n}));
    SymFunc<QFrac> hl = plethysm_scale(lift_q(h_to_p(lambda)), qm1.inverse());
    return pow(qm1, n) * hall(sn, hl);
}

} // namespace

TEST_CASE("W values") {
    CHECK(W_of(Partition{1}) == QFrac(1));
    CHECK(series_at_one(W_of(Partition{1}), 0) == std::vector<Rational>{Rational(1)});

    // two independent computations agree
    for (int n = 0; n <= 6; ++n)
        for (const auto& lambda : partitions_of(n))
            CHECK(W_of(lambda) == W_via_pairing(lambda));

    // frozen: W_(2) = q/(q+1)
    CHECK(W_of(Partition{2}) ==
          QFrac(QPoly::q(), QPoly::q() + QPoly(Rational(1))));

    // nonzero restriction at q = 1 for all lambda |- n <= 7
    for (int n = 1; n <= 7; ++n)
        for (const auto& lambda : partitions_of(n))
            CHECK_FALSE(limit_q1(W_of(lambda)).is_zero());
}

TEST_CASE("equivariant product basics") {
    // one-dimensional case
    SymFunc<QFrac> p1 = SymFunc<QFrac>::p(Partition{1});
    CHECK(odot_q(p1, p1, 1) == p1);

    // s_n neutral on random inputs
    std::mt19937 rng(59);
    for (int n = 0; n <= 5; ++n) {
        SymFunc<QFrac> sn = lift_q(h_to_p(n == 0 ? Partition() : Partition{n}));
        for (int it = 0; it < 4; ++it) {
            SymFunc<QFrac> f = random_symfunc_q(n, rng);
            CHECK(odot_q(sn, f, n) == f);
        }
    }
}

TEST_CASE("equivariant constants agree with the product coordinates") {
    for (int n = 0; n <= 4; ++n) {
        auto parts = partitions_of(n);
        for (const auto& l1 : parts)
            for (const auto& l2 : parts) {
                SymFunc<QFrac> prod =
                    odot_q(SymFunc<QFrac>::p(l1), SymFunc<QFrac>::p(l2), n);
                for (const auto& mu : parts)
                    CHECK(structure_const_q(l1, l2, mu) == prod.coeff(mu));
            }
    }
}

TEST_CASE("structure constants, frozen examples") {
    CHECK(structure_const(Partition{1}, Partition{1}, Partition{1}) == Rational(1));
    CHECK(structure_const_q(Partition{1}, Partition{1}, Partition{1}) == QFrac(1));

    // vanishing: p_2 odot p_2 = 0 because every index is negative
    for (const auto& mu : partitions_of(2))
        CHECK(structure_const(Partition{2}, Partition{2}, mu) == Rational(0));

    CHECK(structure_const(Partition{1, 1}, Partition{2}, Partition{2}) == Rational(2));
    CHECK(structure_const(Partition{1, 1}, Partition{2}, Partition{1, 1}) == Rational(0));

    // hand-checked equivariant value: c^{(2)}_{(1,1),(1,1)}(q) = -(1+q)/q
    CHECK(structure_const_q(Partition{1, 1}, Partition{1, 1}, Partition{2}) ==
          QFrac(-(QPoly::q() + QPoly(Rational(1))), QPoly::q()));
}

TEST_CASE("golden n=2 table via both routes") {
    SymFunc<Rational> p2 = SymFunc<Rational>::p(Partition{2});
    SymFunc<Rational> p11 = SymFunc<Rational>::p(Partition{1, 1});

    // route 1: coefficient formula through odot
    CHECK(odot(p2, p2, 2).is_zero());
    CHECK(odot(p11, p2, 2) == Rational(2) * p2);
    CHECK(odot(p11, p11, 2) == Rational(2) * p11 - Rational(2) * p2);

    // route 2: q -> 1 limit of the equivariant product
    auto limit_of = [](const SymFunc<QFrac>& f) {
        SymFunc<Rational> out;
        for (const auto& [lambda, c] : f.terms()) out.add_term(lambda, limit_q1(c));
        return out;
    };
    SymFunc<QFrac> q2 = SymFunc<QFrac>::p(Partition{2});
    SymFunc<QFrac> q11 = SymFunc<QFrac>::p(Partition{1, 1});
    CHECK(limit_of(odot_q(q2, q2, 2)).is_zero());
    CHECK(limit_of(odot_q(q11, q2, 2)) == Rational(2) * p2);
    CHECK(limit_of(odot_q(q11, q11, 2)) == Rational(2) * p11 - Rational(2) * p2);
}

TEST_CASE("two-route equality at small degrees") {
    for (int n = 0; n <= 4; ++n) CHECK(verify_product(n).ok());
}

TEST_CASE("structure table layout and symmetry") {
    StructureTable t = build_structure_table_serial(3, true);
    CHECK(t.n == 3);
    CHECK(t.parts.size() == 3);
    CHECK(t.rows.size() == 6); // pairs with i1 <= i2

    for (std::size_t i1 = 0; i1 < t.parts.size(); ++i1)
        for (std::size_t i2 = i1; i2 < t.parts.size(); ++i2) {
            const auto& row = t.row(i1, i2);
            CHECK(row.i1 == i1);
            CHECK(row.i2 == i2);
            CHECK(&t.row(i2, i1) == &row); // symmetry resolves to the stored row
            for (std::size_t im = 0; im < t.parts.size(); ++im) {
                CHECK(row.c[im] ==
                      structure_const(t.parts[i1], t.parts[i2], t.parts[im]));
                CHECK(row.c_q[im] ==
                      structure_const_q(t.parts[i1], t.parts[i2], t.parts[im]));
                CHECK(limit_q1(row.c_q[im]) == row.c[im]);
            }
        }
}

TEST_CASE("odot is the bilinear extension") {
    std::mt19937 rng(61);
    for (int n = 1; n <= 4; ++n) {
        SymFunc<Rational> f = random_symfunc(n, rng);
        SymFunc<Rational> g = random_symfunc(n, rng);
        SymFunc<Rational> expected;
        for (const auto& [l1, c1] : f.terms())
            for (const auto& [l2, c2] : g.terms())
                for (const auto& mu : partitions_of(n))
                    expected.add_term(mu, c1 * c2 * structure_const(l1, l2, mu));
        CHECK(odot(f, g, n) == expected);
    }
}
