#pragma once

#include <functional>
#include <vector>

#ifdef HILBK_OPENMP
#include <omp.h>
#endif

#include "hilbk/bases.hpp"
#include "hilbk/symfunc.hpp"

namespace hilbk {

/// Restriction of the k-th Adams power of the tautological bundle to the
/// fixed point indexed by lambda: a polynomial in q,t with one term per cell
/// of the Young diagram, together with its t = 1 specialization.
struct TautRestriction {
    Partition lambda;
    QTFrac value_qt;
    QFrac value_q;
};

TautRestriction taut_restriction(const Partition& lambda, int k);

/// The Macdonald eigenoperator D: plethystic shift of f by (1-q)(1-t)/z
/// followed by multiplication with exp(sum_k -z^k p_k / k) and extraction of
/// the z^0 coefficient.  f must be homogeneous.
SymFunc<QTFrac> op_D(const SymFunc<QTFrac>& f);

/// (1 - D) / ((1-q)(1-t)), applied per homogeneous input.
SymFunc<QTFrac> nabla1_qt(const SymFunc<QTFrac>& f);

/// Eigenbasis route: expand f in the v basis, scale coordinate lambda by the
/// t = 1 tautological restriction, reconstruct.
SymFunc<QFrac> nabla_q_oracle(const SymFunc<QFrac>& f, int k);

/// Closed one-parameter form of the same operator.
SymFunc<QFrac> nabla_q_closed(const SymFunc<QFrac>& f, int k);

/// Closed form over Q (the q -> 1 limit of nabla_q_closed).
SymFunc<Rational> nabla_closed(const SymFunc<Rational>& f, int k);

/// The induced multiplication operator in closed form.
SymFunc<Rational> E_closed(const SymFunc<Rational>& f, int k);

/// Hall adjoint of nabla in closed form (sign twist of E_closed).
SymFunc<Rational> nabla_star_closed(const SymFunc<Rational>& f, int k);

/// One-parameter equivariant version of E_closed.
SymFunc<QFrac> E_q_closed(const SymFunc<QFrac>& f, int k);

/// Dense matrix of a linear endomorphism of the degree-n component in the
/// p-basis; column j holds the image of p_{order[j]} in canonical order.
template <class K>
struct OperatorMatrix {
    int n = 0;
    std::vector<Partition> order;
    std::vector<K> e; // row-major

    std::size_t dim() const { return order.size(); }
    K& at(std::size_t i, std::size_t j) { return e[i * dim() + j]; }
    const K& at(std::size_t i, std::size_t j) const { return e[i * dim() + j]; }

    static OperatorMatrix make(int n) {
        OperatorMatrix m;
        m.n = n;
        m.order = partitions_of(n);
        m.e.assign(m.order.size() * m.order.size(), K(Rational(0)));
        return m;
    }

    friend bool operator==(const OperatorMatrix& a, const OperatorMatrix& b) {
        if (a.n != b.n || a.order.size() != b.order.size()) return false;
        for (std::size_t i = 0; i < a.e.size(); ++i)
            if (!(a.e[i] == b.e[i])) return false;
        return true;
    }
    friend bool operator!=(const OperatorMatrix& a, const OperatorMatrix& b) { return !(a == b); }
};

template <class K>
using LinearOp = std::function<SymFunc<K>(const SymFunc<K>&)>;

/// Matrix of a linear operator on the degree-n component; columns are
/// independent and computed in parallel when OpenMP is available.
template <class K>
OperatorMatrix<K> to_matrix(const LinearOp<K>& op, int n);

/// Serial reference implementation of to_matrix, kept for testing and for
/// the benchmark comparison.
template <class K>
OperatorMatrix<K> to_matrix_serial(const LinearOp<K>& op, int n);

/// Hall adjoint: A = Z^{-1} M^T Z with Z = diag(z_lambda).
template <class K>
OperatorMatrix<K> hall_adjoint(const OperatorMatrix<K>& m);

/// Conjugation by omega: entry (i,j) picks up (-1)^{l(lambda_i)+l(lambda_j)}.
template <class K>
OperatorMatrix<K> omega_conjugate(const OperatorMatrix<K>& m);

OperatorMatrix<Rational> limit_q1(const OperatorMatrix<QFrac>& m);
OperatorMatrix<QFrac> limit_t1(const OperatorMatrix<QTFrac>& m);

// ---- templates -----------------------------------------------------------

namespace detail {

template <class K>
void matrix_from_columns(OperatorMatrix<K>& m, const std::vector<SymFunc<K>>& cols) {
    const std::size_t d = m.order.size();
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i)
            m.at(i, j) = cols[j].coeff(m.order[i]);
}

} // namespace detail

template <class K>
OperatorMatrix<K> to_matrix_serial(const LinearOp<K>& op, int n) {
    OperatorMatrix<K> m = OperatorMatrix<K>::make(n);
    std::vector<SymFunc<K>> cols(m.order.size());
    for (std::size_t j = 0; j < m.order.size(); ++j)
        cols[j] = op(SymFunc<K>::p(m.order[j]));
    detail::matrix_from_columns(m, cols);
    return m;
}

template <class K>
OperatorMatrix<K> to_matrix(const LinearOp<K>& op, int n) {
    OperatorMatrix<K> m = OperatorMatrix<K>::make(n);
    degree_tables(n); // warm shared caches before fanning out
    std::vector<SymFunc<K>> cols(m.order.size());
    const long d = static_cast<long>(m.order.size());
#ifdef HILBK_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long j = 0; j < d; ++j)
        cols[static_cast<std::size_t>(j)] =
            op(SymFunc<K>::p(m.order[static_cast<std::size_t>(j)]));
    detail::matrix_from_columns(m, cols);
    return m;
}

template <class K>
OperatorMatrix<K> hall_adjoint(const OperatorMatrix<K>& m) {
    OperatorMatrix<K> a = OperatorMatrix<K>::make(m.n);
    const std::size_t d = a.order.size();
    std::vector<Rational> z;
    z.reserve(d);
    for (const auto& p : a.order) z.emplace_back(z_of(p));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            a.at(i, j) = K(z[j] / z[i]) * m.at(j, i);
    return a;
}

template <class K>
OperatorMatrix<K> omega_conjugate(const OperatorMatrix<K>& m) {
    OperatorMatrix<K> r = m;
    const std::size_t d = r.order.size();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if ((r.order[i].length() + r.order[j].length()) % 2 != 0)
                r.at(i, j) = -r.at(i, j);
    return r;
}

} // namespace hilbk
