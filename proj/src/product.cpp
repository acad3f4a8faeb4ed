#include "hilbk/product.hpp"

#include <mutex>
#include <stdexcept>

#ifdef HILBK_OPENMP
#include <omp.h>
#endif

#include "hilbk/errors.hpp"

namespace hilbk {

namespace {

// Per-degree data for the induced product.
struct ProductTables {
    int n = 0;
    std::vector<Partition> parts;
    std::vector<QFrac> w;                     // W_nu(q)
    std::vector<SymFunc<QFrac>> h_scaled;     // h_nu[X/(q-1)]
    std::vector<SymFunc<QFrac>> u;            // m_nu[X(q-1)]
    std::vector<std::vector<Rational>> ph;    // <p_lambda, h_nu>
    std::vector<std::vector<Rational>> pm;    // <p_mu, m_nu>
    QFrac q_minus_1_pow_n;
};

std::mutex g_prod_mutex;
std::map<int, ProductTables> g_prod;

ProductTables build_product_tables(int n) {
    const DegreeTables& dt = degree_tables(n);
    ProductTables pt;
    pt.n = n;
    pt.parts = dt.parts;
    const std::size_t d = dt.parts.size();

    QFrac scale_inv(QPoly(Rational(1)), QPoly::q() - QPoly(Rational(1)));
    pt.h_scaled.reserve(d);
    pt.u.reserve(d);
    pt.w.reserve(d);
    for (std::size_t j = 0; j < d; ++j) {
        pt.h_scaled.push_back(
            plethysm_scale(lift_q(h_to_p(dt.parts[j])), scale_inv));
        pt.u.push_back(u_basis(dt.parts[j]));
        pt.w.push_back(W_of(dt.parts[j]));
    }

    pt.ph.assign(d, std::vector<Rational>(d, Rational(0)));
    pt.pm.assign(d, std::vector<Rational>(d, Rational(0)));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            pt.ph[i][j] = Rational(dt.z[i]) * dt.h_in_p[i][j];
            pt.pm[i][j] = Rational(dt.z[i]) * dt.m_in_p[i][j];
        }

    pt.q_minus_1_pow_n = QFrac(pow(QPoly::q() - QPoly(Rational(1)), n));
    return pt;
}

const ProductTables& product_tables(int n) {
    std::lock_guard<std::mutex> lock(g_prod_mutex);
    auto it = g_prod.find(n);
    if (it == g_prod.end()) it = g_prod.emplace(n, build_product_tables(n)).first;
    return it->second;
}

std::size_t canonical_index(const std::vector<Partition>& parts, const Partition& p) {
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i] == p) return i;
    throw std::invalid_argument("partition of unexpected degree");
}

std::mutex g_table_mutex;
std::map<int, StructureTable> g_tables;

} // namespace

QFrac W_of(const Partition& lambda) {
    const int n = lambda.sum();
    const DegreeTables& dt = degree_tables(n);
    std::size_t col = canonical_index(dt.parts, lambda);
    QPoly q_minus_1 = QPoly::q() - QPoly(Rational(1));
    QFrac w(0);
    for (std::size_t i = 0; i < dt.parts.size(); ++i) {
        const Partition& nu = dt.parts[i];
        // <p_nu, h_lambda> / z_nu = coefficient of p_nu in h_lambda.
        Rational c = dt.h_in_p[i][col];
        if (c.is_zero()) continue;
        QFrac term = QFrac(c * pow(q_minus_1, n - nu.length())) / QFrac(q_part(nu));
        w += term;
    }
    return w;
}

SymFunc<QFrac> odot_q(const SymFunc<QFrac>& f, const SymFunc<QFrac>& g, int n) {
    int df = 0, dg = 0;
    if (!f.is_homogeneous(&df) || !g.is_homogeneous(&dg) ||
        (!f.is_zero() && df != n) || (!g.is_zero() && dg != n))
        throw std::invalid_argument("odot_q: inputs must be homogeneous of degree n");
    const ProductTables& pt = product_tables(n);
    SymFunc<QFrac> out;
    for (std::size_t nu = 0; nu < pt.parts.size(); ++nu) {
        QFrac a = hall(f, pt.h_scaled[nu]);
        if (a.is_zero()) continue;
        QFrac b = hall(g, pt.h_scaled[nu]);
        if (b.is_zero()) continue;
        out += (pt.q_minus_1_pow_n * a * b / pt.w[nu]) * pt.u[nu];
    }
    return out;
}

QFrac structure_const_q(const Partition& lambda1, const Partition& lambda2,
                        const Partition& mu) {
    const int n = mu.sum();
    if (lambda1.sum() != n || lambda2.sum() != n)
        throw std::invalid_argument("structure_const_q: partitions of different degrees");
    const ProductTables& pt = product_tables(n);
    std::size_t i1 = canonical_index(pt.parts, lambda1);
    std::size_t i2 = canonical_index(pt.parts, lambda2);
    std::size_t im = canonical_index(pt.parts, mu);

    QFrac s(0);
    for (std::size_t nu = 0; nu < pt.parts.size(); ++nu) {
        Rational c = pt.ph[i1][nu] * pt.ph[i2][nu] * pt.pm[im][nu];
        if (c.is_zero()) continue;
        s += QFrac(c) / pt.w[nu];
    }
    int e = n + mu.length() - lambda1.length() - lambda2.length();
    QFrac front = pow(QFrac(QPoly::q() - QPoly(Rational(1))), e) *
                  QFrac(q_part(mu), Rational(z_of(mu)) * (q_part(lambda1) * q_part(lambda2)));
    return front * s;
}

Rational structure_const(const Partition& lambda1, const Partition& lambda2,
                         const Partition& mu) {
    const int n = mu.sum();
    if (lambda1.sum() != n || lambda2.sum() != n)
        throw std::invalid_argument("structure_const: partitions of different degrees");
    int index = lambda1.length() + lambda2.length() - n - mu.length();
    if (index < 0) return Rational(0);

    const ProductTables& pt = product_tables(n);
    std::size_t i1 = canonical_index(pt.parts, lambda1);
    std::size_t i2 = canonical_index(pt.parts, lambda2);
    std::size_t im = canonical_index(pt.parts, mu);

    QFrac s(0);
    for (std::size_t nu = 0; nu < pt.parts.size(); ++nu) {
        Rational c = pt.ph[i1][nu] * pt.ph[i2][nu] * pt.pm[im][nu];
        if (c.is_zero()) continue;
        s += QFrac(c) / pt.w[nu];
    }
    QFrac r = QFrac(q_part(mu), Rational(z_of(mu)) * (q_part(lambda1) * q_part(lambda2))) * s;
    return coeff_q1(r, index);
}

const StructureTable::Row& StructureTable::row(std::size_t i1, std::size_t i2) const {
    if (i1 > i2) std::swap(i1, i2);
    // rows are stored in lexicographic (i1, i2) order with i1 <= i2
    std::size_t d = parts.size();
    std::size_t offset = i1 * d - i1 * (i1 - 1) / 2 + (i2 - i1);
    return rows[offset];
}

namespace {

StructureTable build_table_impl(int n, bool equivariant, bool parallel) {
    StructureTable st;
    st.n = n;
    st.equivariant = equivariant;
    st.parts = partitions_of(n);
    const std::size_t d = st.parts.size();

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i1 = 0; i1 < d; ++i1)
        for (std::size_t i2 = i1; i2 < d; ++i2) pairs.emplace_back(i1, i2);
    st.rows.resize(pairs.size());

    product_tables(n); // warm the shared cache before fanning out

    const long np = static_cast<long>(pairs.size());
#ifdef HILBK_OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#else
    (void)parallel;
#endif
    for (long pi = 0; pi < np; ++pi) {
        auto [i1, i2] = pairs[static_cast<std::size_t>(pi)];
        StructureTable::Row row;
        row.i1 = i1;
        row.i2 = i2;
        row.c.reserve(d);
        for (std::size_t im = 0; im < d; ++im)
            row.c.push_back(structure_const(st.parts[i1], st.parts[i2], st.parts[im]));
        if (equivariant) {
            row.c_q.reserve(d);
            for (std::size_t im = 0; im < d; ++im)
                row.c_q.push_back(structure_const_q(st.parts[i1], st.parts[i2], st.parts[im]));
        }
        st.rows[static_cast<std::size_t>(pi)] = std::move(row);
    }
    return st;
}

} // namespace

StructureTable build_structure_table(int n, bool equivariant) {
    return build_table_impl(n, equivariant, true);
}

StructureTable build_structure_table_serial(int n, bool equivariant) {
    return build_table_impl(n, equivariant, false);
}

SymFunc<Rational> odot(const SymFunc<Rational>& f, const SymFunc<Rational>& g, int n) {
    int df = 0, dg = 0;
    if (!f.is_homogeneous(&df) || !g.is_homogeneous(&dg) ||
        (!f.is_zero() && df != n) || (!g.is_zero() && dg != n))
        throw std::invalid_argument("odot: inputs must be homogeneous of degree n");

    const StructureTable* table = nullptr;
    {
        std::lock_guard<std::mutex> lock(g_table_mutex);
        auto it = g_tables.find(n);
        if (it == g_tables.end())
            it = g_tables.emplace(n, build_structure_table_serial(n, false)).first;
        table = &it->second;
    }

    SymFunc<Rational> out;
    for (const auto& [l1, c1] : f.terms())
        for (const auto& [l2, c2] : g.terms()) {
            std::size_t i1 = canonical_index(table->parts, l1);
            std::size_t i2 = canonical_index(table->parts, l2);
            const auto& row = table->row(i1, i2);
            Rational c = c1 * c2;
            for (std::size_t im = 0; im < table->parts.size(); ++im)
                out.add_term(table->parts[im], c * row.c[im]);
        }
    return out;
}

} // namespace hilbk
