#pragma once

#include <string>
#include <vector>

#include "hilbk/errors.hpp"
#include "hilbk/qpoly.hpp"

namespace hilbk {

/// Bivariate polynomial in q and t, stored as a vector of QPoly indexed by
/// t-degree (ascending), trailing zero entries stripped.
class QTPoly {
public:
    QTPoly() = default;
    QTPoly(const Rational& c) { if (!c.is_zero()) tc_.push_back(QPoly(c)); }
    QTPoly(long n) : QTPoly(Rational(n)) {}
    QTPoly(const QPoly& p) { if (!p.is_zero()) tc_.push_back(p); }
    explicit QTPoly(std::vector<QPoly> tcoeffs) : tc_(std::move(tcoeffs)) { normalize(); }

    static QTPoly monomial(const Rational& c, int qdeg, int tdeg);
    static QTPoly t() { return monomial(Rational(1), 0, 1); }

    bool is_zero() const { return tc_.empty(); }
    bool is_one() const { return tc_.size() == 1 && tc_[0].is_one(); }
    /// Degree in t; -1 for zero.
    int t_degree() const { return static_cast<int>(tc_.size()) - 1; }
    QPoly t_coeff(int d) const {
        if (d < 0 || d >= static_cast<int>(tc_.size())) return QPoly();
        return tc_[d];
    }
    const std::vector<QPoly>& t_coeffs() const { return tc_; }
    bool is_t_free() const { return tc_.size() <= 1; }
    bool is_constant() const { return is_t_free() && (tc_.empty() || tc_[0].is_constant()); }

    friend QTPoly operator-(const QTPoly& a);
    friend QTPoly operator+(const QTPoly& a, const QTPoly& b);
    friend QTPoly operator-(const QTPoly& a, const QTPoly& b);
    friend QTPoly operator*(const QTPoly& a, const QTPoly& b);
    friend QTPoly operator*(const Rational& c, const QTPoly& a);
    friend bool operator==(const QTPoly& a, const QTPoly& b) { return a.tc_ == b.tc_; }
    friend bool operator!=(const QTPoly& a, const QTPoly& b) { return !(a == b); }

    QTPoly& operator+=(const QTPoly& b) { *this = *this + b; return *this; }
    QTPoly& operator-=(const QTPoly& b) { *this = *this - b; return *this; }
    QTPoly& operator*=(const QTPoly& b) { *this = *this * b; return *this; }

    /// Substitution t = 1.
    QPoly at_t1() const;
    /// Formal derivative in t.
    QTPoly t_derivative() const;
    /// Swap the roles of q and t.
    QTPoly swapped() const;
    /// q -> q^k, t -> t^k.
    QTPoly frobenius(int k) const;

    /// Largest m with (t-1)^m dividing the polynomial (sentinel for zero).
    int order_at_t1() const;
    /// Exact division by (t-1)^m.
    QTPoly divided_by_t_minus_1(int m) const;

    /// Terms "c*q^a*t^b" ascending by (b, a), joined by " + ".
    std::string canonical_text() const;

private:
    void normalize() {
        while (!tc_.empty() && tc_.back().is_zero()) tc_.pop_back();
    }
    std::vector<QPoly> tc_;
};

/// Rational function in q and t.
///
/// The fraction is NOT reduced to lowest terms (no bivariate gcd); equality
/// is decided by cross-multiplication, and powers of (t-1) are stripped by
/// exact division when a limit is taken.
class QTFrac {
public:
    QTFrac() : num_(), den_(Rational(1)) {}
    QTFrac(const QTPoly& num) : num_(num), den_(Rational(1)) {}
    QTFrac(const QPoly& num) : num_(num), den_(Rational(1)) {}
    QTFrac(const Rational& c) : num_(c), den_(Rational(1)) {}
    QTFrac(long n) : num_(Rational(n)), den_(Rational(1)) {}
    QTFrac(QTPoly num, QTPoly den);
    QTFrac(const QFrac& f) : num_(f.num()), den_(f.den()) {}

    const QTPoly& num() const { return num_; }
    const QTPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }

    friend QTFrac operator-(const QTFrac& a);
    friend QTFrac operator+(const QTFrac& a, const QTFrac& b);
    friend QTFrac operator-(const QTFrac& a, const QTFrac& b);
    friend QTFrac operator*(const QTFrac& a, const QTFrac& b);
    friend QTFrac operator/(const QTFrac& a, const QTFrac& b);
    friend bool operator==(const QTFrac& a, const QTFrac& b) {
        return (a.num_ * b.den_) == (b.num_ * a.den_);
    }
    friend bool operator!=(const QTFrac& a, const QTFrac& b) { return !(a == b); }

    QTFrac& operator+=(const QTFrac& b) { *this = *this + b; return *this; }
    QTFrac& operator-=(const QTFrac& b) { *this = *this - b; return *this; }
    QTFrac& operator*=(const QTFrac& b) { *this = *this * b; return *this; }
    QTFrac& operator/=(const QTFrac& b) { *this = *this / b; return *this; }

    QTFrac inverse() const;
    QTFrac swapped() const { return QTFrac(num_.swapped(), den_.swapped()); }
    QTFrac frobenius(int k) const { return QTFrac(num_.frobenius(k), den_.frobenius(k)); }

    /// True when the represented value does not depend on t (decided via the
    /// quotient-rule identity, valid for unreduced fractions).
    bool is_t_free_value() const;

private:
    QTPoly num_, den_;
};

QTFrac pow(const QTFrac& base, int e);

/// Exact substitution t = 1 after cancelling the maximal common power of
/// (t-1).  Throws PoleAtTOne when a genuine pole remains.
QFrac limit_t1(const QTFrac& r);

} // namespace hilbk
