#include "hilbk/operators.hpp"

#include <stdexcept>

namespace hilbk {

namespace {

QTPoly one_minus_q_one_minus_t() {
    return QTPoly(QPoly::one_minus_q_pow(1)) * (QTPoly(Rational(1)) - QTPoly::t());
}

// Enumerates the nonempty sub-multisets lambda of mu.  Calls
// visit(lambda, mu \ lambda, ff) where ff is the falling-factorial
// coefficient of the iterated derivative d_lambda applied to p_mu.
template <class Visit>
void for_each_submultiset(const Partition& mu, Visit&& visit) {
    const auto mults = mu.multiplicities();
    std::vector<int> lam, rest;

    std::function<void(std::size_t, Int)> rec = [&](std::size_t i, Int ff) {
        if (i == mults.size()) {
            if (lam.empty()) return;
            visit(Partition(std::vector<int>(lam)), Partition(std::vector<int>(rest)), ff);
            return;
        }
        auto [value, count] = mults[i];
        Int f = ff;
        for (int c = 0; c <= count; ++c) {
            if (c > 0) f *= (count - c + 1);
            std::size_t lam_before = lam.size(), rest_before = rest.size();
            for (int j = 0; j < c; ++j) lam.push_back(value);
            for (int j = 0; j < count - c; ++j) rest.push_back(value);
            rec(i + 1, f);
            lam.resize(lam_before);
            rest.resize(rest_before);
        }
    };
    rec(0, Int(1));
}

// Applies sum over nonempty lambda of coef(lambda) * p_lambda d/dp_{s(lambda)}.
template <class K, class CoefFn>
SymFunc<K> apply_pick_one(const SymFunc<K>& f, CoefFn&& coef) {
    SymFunc<K> out;
    for (const auto& [mu, c] : f.terms()) {
        for (auto [value, count] : mu.multiplicities()) {
            K base = K(Rational(count)) * c;
            Partition rest = mu.with_one_removed(value);
            for (const auto& lambda : partitions_of(value))
                out.add_term(product(lambda, rest), coef(lambda) * base);
        }
    }
    return out;
}

// Applies sum over nonempty lambda of coef(lambda) * p_{s(lambda)} d_lambda.
template <class K, class CoefFn>
SymFunc<K> apply_pack_one(const SymFunc<K>& f, CoefFn&& coef) {
    SymFunc<K> out;
    for (const auto& [mu, c] : f.terms()) {
        const K& fc = c; // clang rejects implicit lambda capture of structured bindings
        for_each_submultiset(mu, [&](const Partition& lambda, const Partition& rest, const Int& ff) {
            Partition key = product(rest, Partition{lambda.sum()});
            out.add_term(key, coef(lambda) * K(Rational(ff)) * fc);
        });
    }
    return out;
}

// (1-q^{s(lambda)})/(1-q^k) * prod_i (1-q^{k*lambda_i})/(1-q^{lambda_i}).
QFrac q_eigen_factor(const Partition& lambda, int k) {
    QPoly num = QPoly::one_minus_q_pow(lambda.sum());
    QPoly den = QPoly::one_minus_q_pow(k);
    for (int p : lambda.parts()) {
        num *= QPoly::one_minus_q_pow(k * p);
        den *= QPoly::one_minus_q_pow(p);
    }
    return QFrac(num, den);
}

int sign_pow(int e) { return (e % 2 == 0) ? 1 : -1; }

} // namespace

TautRestriction taut_restriction(const Partition& lambda, int k) {
    if (k < 1) throw std::invalid_argument("taut_restriction: k must be positive");
    TautRestriction r;
    r.lambda = lambda;
    QTPoly qt;
    QPoly qq;
    for (int i = 1; i <= lambda.length(); ++i) {
        for (int j = 1; j <= lambda.part(i - 1); ++j) {
            qt += QTPoly::monomial(Rational(1), k * (j - 1), k * (i - 1));
            qq += QPoly::monomial(Rational(1), k * (j - 1));
        }
    }
    r.value_qt = QTFrac(qt);
    r.value_q = QFrac(qq);
    return r;
}

SymFunc<QTFrac> op_D(const SymFunc<QTFrac>& f) {
    int n = 0;
    if (!f.is_homogeneous(&n))
        throw std::invalid_argument("op_D: input must be homogeneous");

    AlphabetDescriptor shift;
    shift.scale = QTFrac(Rational(1));
    shift.extras.emplace_back(QTFrac(one_minus_q_one_minus_t()), -1);
    SymFunc<ZSeries> g = plethysm(f, shift);

    // exp(sum_{k>=1} -z^k p_k / k) = sum_mu (-1)^{l(mu)} z^{s(mu)} p_mu / z_mu,
    // truncated at z^n.
    SymFunc<ZSeries> expser;
    for (int m = 0; m <= n; ++m)
        for (const auto& mu : partitions_of(m)) {
            Rational c = Rational(Int(sign_pow(mu.length())), z_of(mu));
            expser.add_term(mu, ZSeries::monomial(QTFrac(c), m, n));
        }

    SymFunc<ZSeries> prod = g * expser;
    SymFunc<QTFrac> out;
    for (const auto& [lambda, series] : prod.terms())
        out.add_term(lambda, series.coeff_at(0));
    return out;
}

SymFunc<QTFrac> nabla1_qt(const SymFunc<QTFrac>& f) {
    QTFrac m(one_minus_q_one_minus_t());
    SymFunc<QTFrac> diff = f - op_D(f);
    return diff.map_coeffs<QTFrac>([&](const QTFrac& c) { return c / m; });
}

SymFunc<QFrac> nabla_q_oracle(const SymFunc<QFrac>& f, int k) {
    if (f.is_zero()) return f;
    auto coords = expand_in_basis(f, ExpansionBasis::v);
    SymFunc<QFrac> out;
    for (const auto& [lambda, x] : coords) {
        QFrac eig = taut_restriction(lambda, k).value_q;
        if (eig.is_zero()) continue;
        out += (x * eig) * v_basis(lambda);
    }
    return out;
}

SymFunc<QFrac> nabla_q_closed(const SymFunc<QFrac>& f, int k) {
    return apply_pick_one(f, [k](const Partition& lambda) {
        Rational c(Int(sign_pow(lambda.length() - 1)) * lambda.sum(), z_of(lambda));
        return QFrac(c) * q_eigen_factor(lambda, k);
    });
}

SymFunc<Rational> nabla_closed(const SymFunc<Rational>& f, int k) {
    return apply_pick_one(f, [k](const Partition& lambda) {
        Int num = int_pow(Int(-k), lambda.length() - 1) * lambda.sum() * lambda.sum();
        return Rational(num, z_of(lambda));
    });
}

SymFunc<Rational> E_closed(const SymFunc<Rational>& f, int k) {
    return apply_pack_one(f, [k](const Partition& lambda) {
        Int num = int_pow(Int(k), lambda.length() - 1) * lambda.sum();
        return Rational(num, mult_factorial(lambda));
    });
}

SymFunc<Rational> nabla_star_closed(const SymFunc<Rational>& f, int k) {
    return apply_pack_one(f, [k](const Partition& lambda) {
        Int num = int_pow(Int(-k), lambda.length() - 1) * lambda.sum();
        return Rational(num, mult_factorial(lambda));
    });
}

SymFunc<QFrac> E_q_closed(const SymFunc<QFrac>& f, int k) {
    return apply_pack_one(f, [k](const Partition& lambda) {
        return QFrac(Rational(Int(1), mult_factorial(lambda))) * q_eigen_factor(lambda, k);
    });
}

OperatorMatrix<Rational> limit_q1(const OperatorMatrix<QFrac>& m) {
    OperatorMatrix<Rational> r = OperatorMatrix<Rational>::make(m.n);
    for (std::size_t i = 0; i < m.e.size(); ++i) r.e[i] = limit_q1(m.e[i]);
    return r;
}

OperatorMatrix<QFrac> limit_t1(const OperatorMatrix<QTFrac>& m) {
    OperatorMatrix<QFrac> r = OperatorMatrix<QFrac>::make(m.n);
    for (std::size_t i = 0; i < m.e.size(); ++i) r.e[i] = limit_t1(m.e[i]);
    return r;
}

} // namespace hilbk
