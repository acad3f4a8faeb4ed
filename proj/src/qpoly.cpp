#include "hilbk/qpoly.hpp"

#include <sstream>

namespace hilbk {

QPoly QPoly::monomial(const Rational& c, int deg) {
    QPoly p;
    if (c.is_zero()) return p;
    p.c_.assign(static_cast<std::size_t>(deg) + 1, Rational(0));
    p.c_[static_cast<std::size_t>(deg)] = c;
    return p;
}

QPoly QPoly::one_minus_q_pow(int n) {
    return QPoly(Rational(1)) - q_pow(n);
}

QPoly operator-(const QPoly& a) {
    QPoly r = a;
    for (auto& c : r.c_) c = -c;
    return r;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    QPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.normalize();
    return r;
}

QPoly operator-(const QPoly& a, const QPoly& b) {
    return a + (-b);
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.normalize();
    return r;
}

QPoly operator*(const Rational& c, const QPoly& a) {
    QPoly r;
    if (c.is_zero()) return r;
    r.c_ = a.c_;
    for (auto& x : r.c_) x *= c;
    return r;
}

Rational QPoly::eval(const Rational& x) const {
    Rational r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

Rational QPoly::eval_one() const {
    Rational r(0);
    for (const auto& c : c_) r += c;
    return r;
}

QPoly QPoly::shifted_to_one() const {
    // Horner in (u+1): result = (...(c_d*(u+1) + c_{d-1})*(u+1) ...) + c_0.
    QPoly r;
    QPoly u_plus_1(std::vector<Rational>{Rational(1), Rational(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * u_plus_1 + QPoly(*it);
    return r;
}

QPoly QPoly::dilated(int k) const {
    if (is_zero() || k == 1) return *this;
    QPoly r;
    r.c_.assign((c_.size() - 1) * static_cast<std::size_t>(k) + 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        r.c_[i * static_cast<std::size_t>(k)] = c_[i];
    return r;
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    return leading().inverse() * *this;
}

int QPoly::order_at_one() const {
    if (is_zero()) return 1 << 28;
    int order = 0;
    QPoly p = *this;
    while (p.eval_one().is_zero()) {
        p = p.divided_by_q_minus_1(1);
        ++order;
    }
    return order;
}

QPoly QPoly::divided_by_q_minus_1(int m) const {
    QPoly p = *this;
    for (int step = 0; step < m; ++step) {
        // Synthetic division by (q-1): p = (q-1)*h + p(1).
        if (p.is_zero()) throw std::domain_error("QPoly: (q-1) does not divide 0 exactly here");
        std::vector<Rational> h(p.c_.size() - 1, Rational(0));
        Rational carry(0);
        for (std::size_t i = p.c_.size(); i-- > 1;) {
            carry = p.c_[i] + carry;
            h[i - 1] = carry;
        }
        Rational rem = p.c_[0] + carry;
        if (!rem.is_zero()) throw std::domain_error("QPoly: not divisible by (q-1)");
        p.c_ = std::move(h);
        p.normalize();
    }
    return p;
}

void QPoly::divrem(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem) {
    if (b.is_zero()) throw std::domain_error("QPoly: division by zero polynomial");
    quot = QPoly();
    rem = a;
    const int db = b.degree();
    const Rational lb = b.leading();
    while (!rem.is_zero() && rem.degree() >= db) {
        int shift = rem.degree() - db;
        Rational c = rem.leading() / lb;
        QPoly term = monomial(c, shift);
        quot += term;
        rem -= term * b;
    }
}

QPoly QPoly::gcd(const QPoly& a, const QPoly& b) {
    QPoly x = a, y = b;
    // Keep remainders monic so coefficients stay small during Euclid.
    while (!y.is_zero()) {
        QPoly q, r;
        divrem(x, y, q, r);
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

QPoly QPoly::div_exact(const QPoly& a, const QPoly& b) {
    QPoly q, r;
    divrem(a, b, q, r);
    if (!r.is_zero()) throw std::domain_error("QPoly: inexact division");
    return q;
}

std::string QPoly::canonical_text() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t d = 0; d < c_.size(); ++d) {
        if (c_[d].is_zero()) continue;
        if (!first) os << " + ";
        os << c_[d].str() << "*q^" << d;
        first = false;
    }
    return os.str();
}

QPoly pow(const QPoly& base, int e) {
    QPoly r(Rational(1)), b = base;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

QFrac::QFrac(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("QFrac: zero denominator");
    if (num_.is_zero()) {
        den_ = QPoly(Rational(1));
        return;
    }
    QPoly g = QPoly::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = QPoly::div_exact(num_, g);
        den_ = QPoly::div_exact(den_, g);
    }
    Rational lead = den_.leading();
    if (!lead.is_one()) {
        Rational inv = lead.inverse();
        num_ = inv * num_;
        den_ = inv * den_;
    }
}

QFrac operator-(const QFrac& a) { return QFrac(-a.num_, a.den_); }

QFrac operator+(const QFrac& a, const QFrac& b) {
    return QFrac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QFrac operator-(const QFrac& a, const QFrac& b) {
    return QFrac(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

QFrac operator*(const QFrac& a, const QFrac& b) {
    return QFrac(a.num_ * b.num_, a.den_ * b.den_);
}

QFrac operator/(const QFrac& a, const QFrac& b) {
    if (b.is_zero()) throw std::domain_error("QFrac: division by zero");
    return QFrac(a.num_ * b.den_, a.den_ * b.num_);
}

QFrac QFrac::inverse() const {
    if (is_zero()) throw std::domain_error("QFrac: inverse of zero");
    return QFrac(den_, num_);
}

QFrac pow(const QFrac& base, int e) {
    if (e < 0) return pow(base.inverse(), -e);
    QFrac r(1), b = base;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

std::vector<Rational> series_at_one(const QFrac& r, int order) {
    if (order < 0) throw std::domain_error("series_at_one: negative order");
    std::vector<Rational> out(static_cast<std::size_t>(order) + 1, Rational(0));
    if (r.is_zero()) return out;

    QPoly num = r.num().shifted_to_one();
    QPoly den = r.den().shifted_to_one();

    // u-orders after the substitution q = 1 + u.
    int a = 0;
    while (num.coeff(a).is_zero()) ++a;
    int b = 0;
    while (den.coeff(b).is_zero()) ++b;
    if (a < b) throw PoleAtOne("pole of order " + std::to_string(b - a) + " at q = 1");

    // Strip u^b from both; the numerator keeps u-order a-b >= 0.
    const int shift = b;
    auto num_at = [&](int i) { return num.coeff(i + shift); };
    auto den_at = [&](int i) { return den.coeff(i + shift); };

    // Invert the unit part of the denominator as a truncated power series.
    std::vector<Rational> inv(static_cast<std::size_t>(order) + 1, Rational(0));
    Rational d0 = den_at(0);
    inv[0] = d0.inverse();
    for (int m = 1; m <= order; ++m) {
        Rational s(0);
        for (int j = 1; j <= m; ++j) s += den_at(j) * inv[static_cast<std::size_t>(m - j)];
        inv[static_cast<std::size_t>(m)] = -s / d0;
    }

    for (int m = 0; m <= order; ++m) {
        Rational s(0);
        for (int j = 0; j <= m; ++j) s += num_at(j) * inv[static_cast<std::size_t>(m - j)];
        out[static_cast<std::size_t>(m)] = s;
    }
    return out;
}

Rational coeff_q1(const QFrac& r, int m) {
    if (m < 0) return Rational(0);
    return series_at_one(r, m).back();
}

Rational limit_q1(const QFrac& r) {
    return series_at_one(r, 0).front();
}

} // namespace hilbk
