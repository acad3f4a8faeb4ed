#pragma once

#include <vector>

#include "hilbk/bases.hpp"
#include "hilbk/symfunc.hpp"

namespace hilbk {

/// W_lambda(q) = (q-1)^n <s_n, h_lambda[X/(q-1)]>, computed through the
/// nu-sum expansion.  Regular and nonzero at q = 1.
QFrac W_of(const Partition& lambda);

/// The equivariant induced product on the degree-n component.  f and g must
/// be homogeneous of degree n.
SymFunc<QFrac> odot_q(const SymFunc<QFrac>& f, const SymFunc<QFrac>& g, int n);

/// Equivariant structure constant: the p_mu coordinate of
/// odot_q(p_lambda1, p_lambda2), via the direct closed expression.
QFrac structure_const_q(const Partition& lambda1, const Partition& lambda2,
                        const Partition& mu);

/// Non-equivariant structure constant, extracted as a (q-1)-adic
/// coefficient; identically 0 when the target index is negative.
Rational structure_const(const Partition& lambda1, const Partition& lambda2,
                         const Partition& mu);

/// The non-equivariant induced product, the bilinear extension of
/// structure_const.
SymFunc<Rational> odot(const SymFunc<Rational>& f, const SymFunc<Rational>& g, int n);

/// Structure constants of the degree-n component, stored for canonical
/// pairs lambda1 <= lambda2 only; symmetry fills the rest.
struct StructureTable {
    struct Row {
        std::size_t i1 = 0, i2 = 0;       // canonical indices, i1 <= i2
        std::vector<Rational> c;          // coefficient per mu, canonical order
        std::vector<QFrac> c_q;           // equivariant version (may be empty)
    };
    int n = 0;
    bool equivariant = false;
    std::vector<Partition> parts;
    std::vector<Row> rows;

    const Row& row(std::size_t i1, std::size_t i2) const;
};

/// Builds the full table; pairs are independent and run in parallel when
/// OpenMP is available.
StructureTable build_structure_table(int n, bool equivariant);

/// Serial reference implementation, kept for testing and benchmarks.
StructureTable build_structure_table_serial(int n, bool equivariant);

} // namespace hilbk
