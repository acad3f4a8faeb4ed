#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hilbk/partition.hpp"
#include "hilbk/qtpoly.hpp"
#include "hilbk/zseries.hpp"

namespace hilbk {

/// Symmetric function in the power-sum basis over a scalar ring K: a sparse
/// association Partition -> K where the key records the exponent multiset of
/// a p-monomial.  May be inhomogeneous; the empty partition carries the
/// constant term.  No zero coefficients are stored.
///
/// K is one of Rational, QFrac, QTFrac or ZSeries; it must provide ring
/// operations, is_zero(), equality, and construction from Rational.
template <class K>
class SymFunc {
public:
    SymFunc() = default;

    static SymFunc zero() { return SymFunc(); }
    static SymFunc constant(const K& c) {
        SymFunc f;
        f.add_term(Partition(), c);
        return f;
    }
    static SymFunc one() { return constant(K(Rational(1))); }
    /// The basis monomial p_lambda.
    static SymFunc p(const Partition& lambda) {
        SymFunc f;
        f.add_term(lambda, K(Rational(1)));
        return f;
    }

    const std::map<Partition, K>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    K coeff(const Partition& lambda) const {
        auto it = t_.find(lambda);
        return it == t_.end() ? K(Rational(0)) : it->second;
    }

    void add_term(const Partition& lambda, const K& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = t_.emplace(lambda, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    /// Largest term degree (0 for the zero function).
    int degree() const {
        int d = 0;
        for (const auto& [lambda, c] : t_) d = std::max(d, lambda.sum());
        return d;
    }

    bool is_homogeneous(int* deg = nullptr) const {
        int d = -1;
        for (const auto& [lambda, c] : t_) {
            if (d < 0) d = lambda.sum();
            else if (lambda.sum() != d) return false;
        }
        if (deg) *deg = (d < 0 ? 0 : d);
        return true;
    }

    /// Degree-n graded component.
    SymFunc component(int n) const {
        SymFunc f;
        for (const auto& [lambda, c] : t_)
            if (lambda.sum() == n) f.t_.emplace(lambda, c);
        return f;
    }

    friend SymFunc operator-(const SymFunc& a) {
        SymFunc r;
        for (const auto& [lambda, c] : a.t_) r.t_.emplace(lambda, -c);
        return r;
    }

    friend SymFunc operator+(const SymFunc& a, const SymFunc& b) {
        SymFunc r = a;
        for (const auto& [lambda, c] : b.t_) r.add_term(lambda, c);
        return r;
    }

    friend SymFunc operator-(const SymFunc& a, const SymFunc& b) { return a + (-b); }

    friend SymFunc operator*(const K& c, const SymFunc& a) {
        SymFunc r;
        for (const auto& [lambda, x] : a.t_) r.add_term(lambda, c * x);
        return r;
    }

    /// Ring product: partition keys merge via the multiset product.
    friend SymFunc operator*(const SymFunc& a, const SymFunc& b) {
        SymFunc r;
        for (const auto& [la, ca] : a.t_)
            for (const auto& [lb, cb] : b.t_)
                r.add_term(product(la, lb), ca * cb);
        return r;
    }

    SymFunc& operator+=(const SymFunc& b) {
        for (const auto& [lambda, c] : b.t_) add_term(lambda, c);
        return *this;
    }
    SymFunc& operator-=(const SymFunc& b) { return *this += (-b); }
    SymFunc& operator*=(const SymFunc& b) { *this = *this * b; return *this; }

    friend bool operator==(const SymFunc& a, const SymFunc& b) {
        if (a.t_.size() != b.t_.size()) return false;
        auto ia = a.t_.begin();
        auto ib = b.t_.begin();
        for (; ia != a.t_.end(); ++ia, ++ib) {
            if (ia->first != ib->first) return false;
            if (!(ia->second == ib->second)) return false;
        }
        return true;
    }
    friend bool operator!=(const SymFunc& a, const SymFunc& b) { return !(a == b); }

    /// Applies fn to every coefficient, producing a function over K2.
    template <class K2, class Fn>
    SymFunc<K2> map_coeffs(Fn&& fn) const {
        SymFunc<K2> r;
        for (const auto& [lambda, c] : t_) r.add_term(lambda, fn(c));
        return r;
    }

private:
    std::map<Partition, K> t_;
};

/// omega involution: multiplies the coefficient of p_lambda by (-1)^l(lambda).
template <class K>
SymFunc<K> omega(const SymFunc<K>& f) {
    SymFunc<K> r;
    for (const auto& [lambda, c] : f.terms())
        r.add_term(lambda, (lambda.length() % 2 == 0) ? c : -c);
    return r;
}

/// Hall inner product: <p_lambda, p_mu> = delta * z_lambda, extended
/// bilinearly over K.
template <class K>
K hall(const SymFunc<K>& f, const SymFunc<K>& g) {
    K s{Rational(0)};
    for (const auto& [lambda, c] : f.terms()) {
        auto it = g.terms().find(lambda);
        if (it == g.terms().end()) continue;
        s += c * it->second * K(Rational(z_of(lambda)));
    }
    return s;
}

/// Single formal derivative d/dp_r.
template <class K>
SymFunc<K> partial_one(int r, const SymFunc<K>& f) {
    SymFunc<K> out;
    for (const auto& [lambda, c] : f.terms()) {
        int a = lambda.mult(r);
        if (a == 0) continue;
        out.add_term(lambda.with_one_removed(r), K(Rational(a)) * c);
    }
    return out;
}

/// Iterated derivative: d/dp_{mu_1} o ... o d/dp_{mu_l}.
template <class K>
SymFunc<K> partial(const Partition& mu, const SymFunc<K>& f) {
    SymFunc<K> out = f;
    for (int r : mu.parts()) out = partial_one(r, out);
    return out;
}

/// Plethysm by the alphabet scale * X: the algebra morphism with
/// p_k -> scale(q^k, t^k) * p_k.  scale = 1 is the identity, scale = -1 is
/// omega.
template <class K>
SymFunc<K> plethysm_scale(const SymFunc<K>& f, const K& scale) {
    SymFunc<K> r;
    for (const auto& [lambda, c] : f.terms()) {
        K factor = c;
        for (int p : lambda.parts()) factor *= scale.frobenius(p);
        r.add_term(lambda, factor);
    }
    return r;
}

/// Virtual alphabet scale * X + sum_j coeff_j * z^{e_j}: plethysm substitutes
/// p_k -> scale(q^k,t^k) * p_k + sum_j coeff_j(q^k,t^k) * z^{k*e_j}.
struct AlphabetDescriptor {
    QTFrac scale;
    std::vector<std::pair<QTFrac, int>> extras;
};

/// Plethysm by an alphabet with z-terms; the result lives over Laurent
/// series in z.  The coefficients produced here are exact Laurent
/// polynomials; truncation enters once they are multiplied with genuinely
/// truncated series.
inline SymFunc<ZSeries> plethysm(const SymFunc<QTFrac>& f, const AlphabetDescriptor& A) {
    SymFunc<ZSeries> out;
    for (const auto& [lambda, c] : f.terms()) {
        SymFunc<ZSeries> acc = SymFunc<ZSeries>::constant(ZSeries(c));
        for (int p : lambda.parts()) {
            SymFunc<ZSeries> image;
            image.add_term(Partition{p}, ZSeries(A.scale.frobenius(p)));
            for (const auto& [coeff, zexp] : A.extras)
                image.add_term(Partition(), ZSeries::monomial(coeff.frobenius(p), p * zexp));
            acc = acc * image;
        }
        out += acc;
    }
    return out;
}

// ---- scalar lifts ------------------------------------------------------

inline QFrac to_qfrac(const Rational& c) { return QFrac(c); }
inline QTFrac to_qtfrac(const Rational& c) { return QTFrac(c); }
inline QTFrac to_qtfrac(const QFrac& c) { return QTFrac(c); }

inline SymFunc<QFrac> lift_q(const SymFunc<Rational>& f) {
    return f.map_coeffs<QFrac>([](const Rational& c) { return QFrac(c); });
}
inline SymFunc<QTFrac> lift_qt(const SymFunc<Rational>& f) {
    return f.map_coeffs<QTFrac>([](const Rational& c) { return QTFrac(c); });
}
inline SymFunc<QTFrac> lift_qt(const SymFunc<QFrac>& f) {
    return f.map_coeffs<QTFrac>([](const QFrac& c) { return QTFrac(c); });
}

} // namespace hilbk
