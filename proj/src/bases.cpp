#include "hilbk/bases.hpp"

#include <mutex>

#include "hilbk/errors.hpp"

namespace hilbk {

std::vector<std::vector<Rational>> invert_rational_matrix(
    const std::vector<std::vector<Rational>>& m) {
    const std::size_t n = m.size();
    std::vector<std::vector<Rational>> a = m;
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) throw SingularSystem("singular basis matrix");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        Rational d = a[col][col].inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] *= d;
            inv[col][j] *= d;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col].is_zero()) continue;
            Rational f = a[row][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[row][j] -= f * a[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

namespace {

SymFunc<Rational> h_n_to_p(int n) {
    // h_n = sum_{mu |- n} p_mu / z_mu.
    SymFunc<Rational> f;
    for (const auto& mu : partitions_of(n))
        f.add_term(mu, Rational(Int(1), z_of(mu)));
    return f;
}

std::mutex g_tables_mutex;
std::map<int, DegreeTables> g_tables;

std::mutex g_schur_mutex;
std::map<Partition, SymFunc<Rational>> g_schur;

std::mutex g_named_mutex;
std::map<std::pair<int, char>, std::vector<std::vector<Rational>>> g_named_inv;

DegreeTables build_degree_tables(int n) {
    DegreeTables dt;
    dt.n = n;
    dt.parts = partitions_of(n);
    const std::size_t d = dt.parts.size();
    dt.z.reserve(d);
    for (const auto& p : dt.parts) dt.z.push_back(z_of(p));

    std::map<Partition, std::size_t> index;
    for (std::size_t i = 0; i < d; ++i) index.emplace(dt.parts[i], i);

    dt.h_in_p.assign(d, std::vector<Rational>(d, Rational(0)));
    for (std::size_t j = 0; j < d; ++j) {
        SymFunc<Rational> h = SymFunc<Rational>::one();
        for (int part : dt.parts[j].parts()) h *= h_n_to_p(part);
        for (const auto& [mu, c] : h.terms()) dt.h_in_p[index.at(mu)][j] = c;
    }
    dt.h_in_p_inv = invert_rational_matrix(dt.h_in_p);

    // Hall duality <h_lambda, m_mu> = delta pins the m matrix:
    // (h_in_p)^T * diag(z) * m_in_p = I, so m_in_p = diag(1/z) * (inv)^T.
    dt.m_in_p.assign(d, std::vector<Rational>(d, Rational(0)));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            dt.m_in_p[i][j] = dt.h_in_p_inv[j][i] / Rational(dt.z[i]);

    return dt;
}

} // namespace

const DegreeTables& degree_tables(int n) {
    std::lock_guard<std::mutex> lock(g_tables_mutex);
    auto it = g_tables.find(n);
    if (it == g_tables.end()) it = g_tables.emplace(n, build_degree_tables(n)).first;
    return it->second;
}

SymFunc<Rational> h_to_p(const Partition& lambda) {
    SymFunc<Rational> f = SymFunc<Rational>::one();
    for (int part : lambda.parts()) f *= h_n_to_p(part);
    return f;
}

SymFunc<Rational> m_to_p(const Partition& lambda) {
    const DegreeTables& dt = degree_tables(lambda.sum());
    std::size_t col = 0;
    while (dt.parts[col] != lambda) ++col;
    SymFunc<Rational> f;
    for (std::size_t i = 0; i < dt.parts.size(); ++i)
        f.add_term(dt.parts[i], dt.m_in_p[i][col]);
    return f;
}

namespace {

// Jacobi-Trudi: s_lambda = det(h_{lambda_i - i + j}), h_0 = 1, h_{<0} = 0.
// Laplace expansion along the first row, memoized per full lambda in g_schur.
SymFunc<Rational> jacobi_trudi(const std::vector<int>& rows) {
    const int l = static_cast<int>(rows.size());
    if (l == 0) return SymFunc<Rational>::one();

    // det over column subsets, expanding row by row.
    std::function<SymFunc<Rational>(int, std::vector<int>)> det =
        [&](int row, std::vector<int> cols) -> SymFunc<Rational> {
        if (cols.empty()) return SymFunc<Rational>::one();
        SymFunc<Rational> acc;
        for (std::size_t ci = 0; ci < cols.size(); ++ci) {
            int m = rows[static_cast<std::size_t>(row)] - row + cols[ci];
            if (m < 0) continue;
            SymFunc<Rational> entry =
                (m == 0) ? SymFunc<Rational>::one() : h_n_to_p(m);
            std::vector<int> rest = cols;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(ci));
            SymFunc<Rational> minor = det(row + 1, std::move(rest));
            SymFunc<Rational> contrib = entry * minor;
            if (ci % 2 == 1) contrib = -contrib;
            acc += contrib;
        }
        return acc;
    };

    std::vector<int> cols(static_cast<std::size_t>(l));
    for (int j = 0; j < l; ++j) cols[static_cast<std::size_t>(j)] = j;
    return det(0, std::move(cols));
}

} // namespace

SymFunc<Rational> s_to_p(const Partition& lambda) {
    std::lock_guard<std::mutex> lock(g_schur_mutex);
    auto it = g_schur.find(lambda);
    if (it == g_schur.end())
        it = g_schur.emplace(lambda, jacobi_trudi(lambda.parts())).first;
    return it->second;
}

SymFunc<QFrac> v_basis(const Partition& lambda) {
    // h_lambda[X/(1-q)]: p_k picks up 1/(1-q^k).
    QFrac scale(QPoly(Rational(1)), QPoly::one_minus_q_pow(1));
    return plethysm_scale(lift_q(h_to_p(lambda)), scale);
}

SymFunc<QFrac> u_basis(const Partition& lambda) {
    // m_lambda[X(q-1)]: p_k picks up (q^k - 1).
    QFrac scale(QPoly::q() - QPoly(Rational(1)));
    return plethysm_scale(lift_q(m_to_p(lambda)), scale);
}

std::map<Partition, QFrac> expand_in_basis(const SymFunc<QFrac>& f, ExpansionBasis basis) {
    int n = 0;
    if (!f.is_homogeneous(&n))
        throw std::invalid_argument("expand_in_basis: input must be homogeneous");
    const DegreeTables& dt = degree_tables(n);
    const std::size_t d = dt.parts.size();

    // Both bases factor as (row-diagonal plethysm scaling) x (rational
    // matrix), so the linear system in the p-basis reduces to the cached
    // rational inverse:
    //   v: g_mu = f_mu * prod(1 - q^{mu_i}),  x = h_in_p_inv * g
    //   u: g_mu = f_mu / prod(q^{mu_i} - 1),  x = (h_in_p)^T * diag(z) * g
    std::vector<QFrac> g(d, QFrac(0));
    for (std::size_t i = 0; i < d; ++i) {
        QFrac c = f.coeff(dt.parts[i]);
        if (c.is_zero()) continue;
        QPoly factor(Rational(1));
        for (int part : dt.parts[i].parts()) {
            if (basis == ExpansionBasis::v)
                factor *= QPoly::one_minus_q_pow(part);
            else
                factor *= QPoly::q_pow(part) - QPoly(Rational(1));
        }
        g[i] = (basis == ExpansionBasis::v) ? c * QFrac(factor) : c / QFrac(factor);
    }

    std::map<Partition, QFrac> out;
    for (std::size_t i = 0; i < d; ++i) {
        QFrac x(0);
        for (std::size_t j = 0; j < d; ++j) {
            if (g[j].is_zero()) continue;
            if (basis == ExpansionBasis::v)
                x += QFrac(dt.h_in_p_inv[i][j]) * g[j];
            else
                x += QFrac(dt.h_in_p[j][i] * Rational(dt.z[j])) * g[j];
        }
        if (!x.is_zero()) out.emplace(dt.parts[i], x);
    }
    return out;
}

namespace detail {

const std::vector<std::vector<Rational>>& named_basis_inverse(int n, char basis) {
    std::lock_guard<std::mutex> lock(g_named_mutex);
    auto key = std::make_pair(n, basis);
    auto it = g_named_inv.find(key);
    if (it != g_named_inv.end()) return it->second;

    const DegreeTables& dt = degree_tables(n);
    const std::size_t d = dt.parts.size();
    std::vector<std::vector<Rational>> basis_in_p;
    switch (basis) {
        case 'p': {
            basis_in_p.assign(d, std::vector<Rational>(d, Rational(0)));
            for (std::size_t i = 0; i < d; ++i) basis_in_p[i][i] = Rational(1);
            break;
        }
        case 'h': basis_in_p = dt.h_in_p; break;
        case 'm': basis_in_p = dt.m_in_p; break;
        case 's': {
            basis_in_p.assign(d, std::vector<Rational>(d, Rational(0)));
            std::map<Partition, std::size_t> index;
            for (std::size_t i = 0; i < d; ++i) index.emplace(dt.parts[i], i);
            for (std::size_t j = 0; j < d; ++j) {
                SymFunc<Rational> s = s_to_p(dt.parts[j]);
                for (const auto& [mu, c] : s.terms()) basis_in_p[index.at(mu)][j] = c;
            }
            break;
        }
        default:
            throw std::invalid_argument("unknown basis letter");
    }
    auto inv = invert_rational_matrix(basis_in_p);
    it = g_named_inv.emplace(key, std::move(inv)).first;
    return it->second;
}

} // namespace detail

} // namespace hilbk
