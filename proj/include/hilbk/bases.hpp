#pragma once

#include <map>
#include <vector>

#include "hilbk/symfunc.hpp"

namespace hilbk {

/// Per-degree conversion data shared by basis expansions, operators and the
/// induced product.  Matrices are dense, indexed by partitions_of(n) in
/// canonical order, entry [row][col] = coefficient of p_{row partition} in
/// the col-th basis element.
struct DegreeTables {
    int n = 0;
    std::vector<Partition> parts;
    std::vector<std::vector<Rational>> h_in_p;     // columns h_lambda
    std::vector<std::vector<Rational>> h_in_p_inv; // inverse of h_in_p
    std::vector<std::vector<Rational>> m_in_p;     // columns m_lambda
    std::vector<Int> z;                            // z_lambda in canonical order
};

/// Cached tables for degree n; safe to call concurrently.
const DegreeTables& degree_tables(int n);

/// h_n expanded in power sums; h_lambda is the product over parts.
SymFunc<Rational> h_to_p(const Partition& lambda);

/// Monomial basis element in power sums (defined through Hall duality with
/// the h basis).
SymFunc<Rational> m_to_p(const Partition& lambda);

/// Schur function via the Jacobi-Trudi determinant in the h's.
SymFunc<Rational> s_to_p(const Partition& lambda);

/// v_lambda = h_lambda[X / (1-q)].
SymFunc<QFrac> v_basis(const Partition& lambda);

/// u_lambda = m_lambda[X (q-1)].
SymFunc<QFrac> u_basis(const Partition& lambda);

enum class ExpansionBasis { v, u };

/// Exact coordinates of a homogeneous f in the chosen basis, as a sparse
/// association.  Reconstruction (sum of coord * basis vector) reproduces f.
std::map<Partition, QFrac> expand_in_basis(const SymFunc<QFrac>& f, ExpansionBasis basis);

/// Coordinates of each homogeneous component of f in the named basis
/// ('p', 'h', 'm' or 's'), over any scalar ring via rational inverse
/// matrices.  Used for CLI output in non-p bases.
template <class K>
std::map<Partition, K> expand_in_named_basis(const SymFunc<K>& f, char basis);

/// Exact inverse of a square rational matrix (throws SingularSystem).
std::vector<std::vector<Rational>> invert_rational_matrix(
    const std::vector<std::vector<Rational>>& m);

namespace detail {
const std::vector<std::vector<Rational>>& named_basis_inverse(int n, char basis);
} // namespace detail

template <class K>
std::map<Partition, K> expand_in_named_basis(const SymFunc<K>& f, char basis) {
    std::map<Partition, K> out;
    for (int n = 0; n <= f.degree(); ++n) {
        SymFunc<K> comp = f.component(n);
        if (comp.is_zero()) continue;
        const DegreeTables& dt = degree_tables(n);
        const auto& inv = detail::named_basis_inverse(n, basis);
        for (std::size_t i = 0; i < dt.parts.size(); ++i) {
            K x{Rational(0)};
            for (std::size_t j = 0; j < dt.parts.size(); ++j) {
                K c = comp.coeff(dt.parts[j]);
                if (c.is_zero()) continue;
                x += K(inv[i][j]) * c;
            }
            if (!x.is_zero()) out.emplace(dt.parts[i], x);
        }
    }
    return out;
}

} // namespace hilbk
