#pragma once

#include <string>
#include <vector>

#include "hilbk/errors.hpp"
#include "hilbk/rational.hpp"

namespace hilbk {

/// Univariate polynomial in q over the rationals.
///
/// Coefficients are stored ascending by degree with the trailing coefficient
/// nonzero; the zero polynomial has an empty coefficient vector.
class QPoly {
public:
    QPoly() = default;
    QPoly(const Rational& c) { if (!c.is_zero()) c_.push_back(c); }
    QPoly(long n) : QPoly(Rational(n)) {}
    explicit QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static QPoly monomial(const Rational& c, int deg);
    /// The variable q itself.
    static QPoly q() { return monomial(Rational(1), 1); }
    /// q^n
    static QPoly q_pow(int n) { return monomial(Rational(1), n); }
    /// 1 - q^n
    static QPoly one_minus_q_pow(int n);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    /// Degree of the polynomial; -1 for zero.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(int d) const {
        if (d < 0 || d >= static_cast<int>(c_.size())) return Rational(0);
        return c_[d];
    }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational leading() const { return is_zero() ? Rational(0) : c_.back(); }
    bool is_constant() const { return c_.size() <= 1; }

    friend QPoly operator-(const QPoly& a);
    friend QPoly operator+(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const Rational& c, const QPoly& a);
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

    QPoly& operator+=(const QPoly& b) { *this = *this + b; return *this; }
    QPoly& operator-=(const QPoly& b) { *this = *this - b; return *this; }
    QPoly& operator*=(const QPoly& b) { *this = *this * b; return *this; }

    Rational eval(const Rational& x) const;
    /// Value at q = 1 (sum of coefficients).
    Rational eval_one() const;

    /// Coefficients of p(1+u) as a polynomial in u.
    QPoly shifted_to_one() const;
    /// p(q^k): spreads exponents by the factor k.
    QPoly dilated(int k) const;

    QPoly monic() const;

    /// Largest m such that (q-1)^m divides the polynomial.  Undefined for
    /// zero (returns a large sentinel).
    int order_at_one() const;
    /// Exact division by (q-1)^m; requires divisibility.
    QPoly divided_by_q_minus_1(int m) const;

    static void divrem(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem);
    static QPoly gcd(const QPoly& a, const QPoly& b);
    /// Exact division; throws std::domain_error on nonzero remainder.
    static QPoly div_exact(const QPoly& a, const QPoly& b);

    /// Canonical text: terms "c*q^d" ascending, joined by " + ", c as "a/b".
    std::string canonical_text() const;

private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

QPoly pow(const QPoly& base, int e);

/// Rational function in q: a fully reduced fraction of QPoly with monic
/// denominator (the canonical form used for serialization and equality).
class QFrac {
public:
    QFrac() : num_(), den_(Rational(1)) {}
    QFrac(const QPoly& num) : num_(num), den_(Rational(1)) {}
    QFrac(const Rational& c) : num_(c), den_(Rational(1)) {}
    QFrac(long n) : num_(Rational(n)), den_(Rational(1)) {}
    QFrac(QPoly num, QPoly den);

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_rational_constant() const { return num_.is_constant() && den_.is_one(); }

    friend QFrac operator-(const QFrac& a);
    friend QFrac operator+(const QFrac& a, const QFrac& b);
    friend QFrac operator-(const QFrac& a, const QFrac& b);
    friend QFrac operator*(const QFrac& a, const QFrac& b);
    friend QFrac operator/(const QFrac& a, const QFrac& b);
    friend bool operator==(const QFrac& a, const QFrac& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const QFrac& a, const QFrac& b) { return !(a == b); }

    QFrac& operator+=(const QFrac& b) { *this = *this + b; return *this; }
    QFrac& operator-=(const QFrac& b) { *this = *this - b; return *this; }
    QFrac& operator*=(const QFrac& b) { *this = *this * b; return *this; }
    QFrac& operator/=(const QFrac& b) { *this = *this / b; return *this; }

    QFrac inverse() const;

    /// q -> q^k.  Preserves the canonical form (coprimality survives
    /// dilation, and the dilated denominator stays monic).
    QFrac frobenius(int k) const { return QFrac(num_.dilated(k), den_.dilated(k)); }

private:
    QPoly num_, den_;
};

QFrac pow(const QFrac& base, int e);

/// Coefficients c_0..c_order of the (q-1)-adic expansion of r, exact.
/// Throws PoleAtOne when r is not regular at q = 1.
std::vector<Rational> series_at_one(const QFrac& r, int order);

/// Single coefficient of the (q-1)-adic expansion; m < 0 returns 0.
Rational coeff_q1(const QFrac& r, int m);

/// Exact limit of r as q -> 1.
Rational limit_q1(const QFrac& r);

} // namespace hilbk
