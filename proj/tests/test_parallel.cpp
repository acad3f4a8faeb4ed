#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hilbk/operators.hpp"
#include "hilbk/product.hpp"

using namespace hilbk;

TEST_CASE("parallel matrix build matches the serial reference") {
    for (int k : {1, 2}) {
        LinearOp<QFrac> closed = [k](const SymFunc<QFrac>& f) { return nabla_q_closed(f, k); };
        CHECK(to_matrix(closed, 6) == to_matrix_serial(closed, 6));

        LinearOp<QFrac> oracle = [k](const SymFunc<QFrac>& f) { return nabla_q_oracle(f, k); };
        CHECK(to_matrix(oracle, 5) == to_matrix_serial(oracle, 5));
    }
    LinearOp<Rational> e3 = [](const SymFunc<Rational>& f) { return E_closed(f, 3); };
    CHECK(to_matrix(e3, 7) == to_matrix_serial(e3, 7));
}

TEST_CASE("parallel structure table matches the serial reference") {
    for (int n = 0; n <= 5; ++n) {
        StructureTable par = build_structure_table(n, n <= 4);
        StructureTable ser = build_structure_table_serial(n, n <= 4);
        REQUIRE(par.rows.size() == ser.rows.size());
        for (std::size_t i = 0; i < par.rows.size(); ++i) {
            CHECK(par.rows[i].i1 == ser.rows[i].i1);
            CHECK(par.rows[i].i2 == ser.rows[i].i2);
            CHECK(par.rows[i].c == ser.rows[i].c);
            CHECK(par.rows[i].c_q == ser.rows[i].c_q);
        }
    }
}
