#include "hilbk/qtpoly.hpp"

#include <sstream>

namespace hilbk {

QTPoly QTPoly::monomial(const Rational& c, int qdeg, int tdeg) {
    QTPoly p;
    if (c.is_zero()) return p;
    p.tc_.assign(static_cast<std::size_t>(tdeg) + 1, QPoly());
    p.tc_[static_cast<std::size_t>(tdeg)] = QPoly::monomial(c, qdeg);
    return p;
}

QTPoly operator-(const QTPoly& a) {
    QTPoly r = a;
    for (auto& c : r.tc_) c = -c;
    return r;
}

QTPoly operator+(const QTPoly& a, const QTPoly& b) {
    QTPoly r;
    r.tc_.resize(std::max(a.tc_.size(), b.tc_.size()), QPoly());
    for (std::size_t i = 0; i < a.tc_.size(); ++i) r.tc_[i] += a.tc_[i];
    for (std::size_t i = 0; i < b.tc_.size(); ++i) r.tc_[i] += b.tc_[i];
    r.normalize();
    return r;
}

QTPoly operator-(const QTPoly& a, const QTPoly& b) { return a + (-b); }

QTPoly operator*(const QTPoly& a, const QTPoly& b) {
    QTPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.tc_.assign(a.tc_.size() + b.tc_.size() - 1, QPoly());
    for (std::size_t i = 0; i < a.tc_.size(); ++i) {
        if (a.tc_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.tc_.size(); ++j)
            r.tc_[i + j] += a.tc_[i] * b.tc_[j];
    }
    r.normalize();
    return r;
}

QTPoly operator*(const Rational& c, const QTPoly& a) {
    QTPoly r;
    if (c.is_zero()) return r;
    r.tc_ = a.tc_;
    for (auto& x : r.tc_) x = c * x;
    return r;
}

QPoly QTPoly::at_t1() const {
    QPoly r;
    for (const auto& c : tc_) r += c;
    return r;
}

QTPoly QTPoly::t_derivative() const {
    QTPoly r;
    if (tc_.size() <= 1) return r;
    r.tc_.resize(tc_.size() - 1);
    for (std::size_t i = 1; i < tc_.size(); ++i)
        r.tc_[i - 1] = Rational(static_cast<long>(i)) * tc_[i];
    r.normalize();
    return r;
}

QTPoly QTPoly::swapped() const {
    QTPoly r;
    int qdeg = -1;
    for (const auto& c : tc_) qdeg = std::max(qdeg, c.degree());
    if (qdeg < 0) return r;
    r.tc_.assign(static_cast<std::size_t>(qdeg) + 1, QPoly());
    for (std::size_t b = 0; b < tc_.size(); ++b) {
        const auto& row = tc_[b].coeffs();
        for (std::size_t a = 0; a < row.size(); ++a) {
            if (row[a].is_zero()) continue;
            r.tc_[a] += QPoly::monomial(row[a], static_cast<int>(b));
        }
    }
    r.normalize();
    return r;
}

QTPoly QTPoly::frobenius(int k) const {
    QTPoly r;
    if (is_zero() || k == 1) return *this;
    r.tc_.assign((tc_.size() - 1) * static_cast<std::size_t>(k) + 1, QPoly());
    for (std::size_t i = 0; i < tc_.size(); ++i)
        r.tc_[i * static_cast<std::size_t>(k)] = tc_[i].dilated(k);
    r.normalize();
    return r;
}

int QTPoly::order_at_t1() const {
    if (is_zero()) return 1 << 28;
    int order = 0;
    QTPoly p = *this;
    while (p.at_t1().is_zero()) {
        p = p.divided_by_t_minus_1(1);
        ++order;
    }
    return order;
}

QTPoly QTPoly::divided_by_t_minus_1(int m) const {
    QTPoly p = *this;
    for (int step = 0; step < m; ++step) {
        if (p.is_zero()) throw std::domain_error("QTPoly: (t-1) does not divide 0 exactly here");
        std::vector<QPoly> h(p.tc_.size() - 1, QPoly());
        QPoly carry;
        for (std::size_t i = p.tc_.size(); i-- > 1;) {
            carry = p.tc_[i] + carry;
            h[i - 1] = carry;
        }
        QPoly rem = p.tc_[0] + carry;
        if (!rem.is_zero()) throw std::domain_error("QTPoly: not divisible by (t-1)");
        p.tc_ = std::move(h);
        p.normalize();
    }
    return p;
}

std::string QTPoly::canonical_text() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t b = 0; b < tc_.size(); ++b) {
        const auto& row = tc_[b].coeffs();
        for (std::size_t a = 0; a < row.size(); ++a) {
            if (row[a].is_zero()) continue;
            if (!first) os << " + ";
            os << row[a].str() << "*q^" << a << "*t^" << b;
            first = false;
        }
    }
    return os.str();
}

QTFrac::QTFrac(QTPoly num, QTPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("QTFrac: zero denominator");
    if (num_.is_zero()) {
        den_ = QTPoly(Rational(1));
        return;
    }
    // fold constant denominators into the numerator
    if (den_.is_constant()) {
        Rational c = den_.t_coeff(0).coeff(0);
        if (!c.is_one()) num_ = c.inverse() * num_;
        den_ = QTPoly(Rational(1));
    }
}

QTFrac operator-(const QTFrac& a) { return QTFrac(-a.num_, a.den_); }

QTFrac operator+(const QTFrac& a, const QTFrac& b) {
    return QTFrac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QTFrac operator-(const QTFrac& a, const QTFrac& b) {
    return QTFrac(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

QTFrac operator*(const QTFrac& a, const QTFrac& b) {
    if (a.is_zero() || b.is_zero()) return QTFrac();
    return QTFrac(a.num_ * b.num_, a.den_ * b.den_);
}

QTFrac operator/(const QTFrac& a, const QTFrac& b) {
    if (b.is_zero()) throw std::domain_error("QTFrac: division by zero");
    return QTFrac(a.num_ * b.den_, a.den_ * b.num_);
}

QTFrac QTFrac::inverse() const {
    if (is_zero()) throw std::domain_error("QTFrac: inverse of zero");
    return QTFrac(den_, num_);
}

bool QTFrac::is_t_free_value() const {
    // d/dt (num/den) = 0  <=>  num' * den == num * den'.
    return num_.t_derivative() * den_ == num_ * den_.t_derivative();
}

QTFrac pow(const QTFrac& base, int e) {
    if (e < 0) return pow(base.inverse(), -e);
    QTFrac r(1), b = base;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

QFrac limit_t1(const QTFrac& r) {
    if (r.is_zero()) return QFrac();
    QTPoly num = r.num();
    QTPoly den = r.den();
    int a = num.order_at_t1();
    int b = den.order_at_t1();
    if (a < b) throw PoleAtTOne("pole of order " + std::to_string(b - a) + " at t = 1");
    int s = std::min(a, b);
    if (s > 0) {
        num = num.divided_by_t_minus_1(s);
        den = den.divided_by_t_minus_1(s);
    }
    // After stripping the common power, b was maximal, so den(t=1) != 0.
    return QFrac(num.at_t1(), den.at_t1());
}

} // namespace hilbk
