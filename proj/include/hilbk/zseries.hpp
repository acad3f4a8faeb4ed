#pragma once

#include <algorithm>
#include <vector>

#include "hilbk/errors.hpp"
#include "hilbk/qtpoly.hpp"

namespace hilbk {

/// Truncated Laurent polynomial in an auxiliary variable z with coefficients
/// in Q(q,t).
///
/// Coefficients above `truncation()` are discarded and unknown, never assumed
/// zero; reading one throws TruncationExceeded.  Values built from finitely
/// many exact terms carry the `exact_truncation` sentinel and behave as exact
/// Laurent polynomials.
class ZSeries {
public:
    static constexpr int exact_truncation = 1 << 28;

    ZSeries() = default;
    ZSeries(const QTFrac& c) { *this = monomial(c, 0); }
    ZSeries(const Rational& c) : ZSeries(QTFrac(c)) {}
    ZSeries(long n) : ZSeries(QTFrac(n)) {}

    static ZSeries monomial(const QTFrac& c, int deg, int trunc = exact_truncation) {
        ZSeries s;
        s.trunc_ = trunc;
        if (!c.is_zero() && deg <= trunc) {
            s.low_ = deg;
            s.c_.push_back(c);
        }
        return s;
    }

    int truncation() const { return trunc_; }
    int low_degree() const { return low_; }
    int high_degree() const { return low_ + static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    /// Coefficient of z^d; throws if d lies beyond the truncation order.
    QTFrac coeff_at(int d) const {
        if (d > trunc_)
            throw TruncationExceeded("z^" + std::to_string(d) + " beyond truncation order " +
                                     std::to_string(trunc_));
        if (is_zero() || d < low_ || d > high_degree()) return QTFrac();
        return c_[static_cast<std::size_t>(d - low_)];
    }

    friend ZSeries operator-(const ZSeries& a) {
        ZSeries r = a;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend ZSeries operator+(const ZSeries& a, const ZSeries& b) {
        ZSeries r;
        r.trunc_ = std::min(a.trunc_, b.trunc_);
        if (a.is_zero() && b.is_zero()) return r;
        int low = a.is_zero() ? b.low_ : (b.is_zero() ? a.low_ : std::min(a.low_, b.low_));
        int high = std::min(std::max(a.high_degree(), b.high_degree()), r.trunc_);
        if (high < low) return r;
        r.low_ = low;
        r.c_.assign(static_cast<std::size_t>(high - low) + 1, QTFrac());
        for (int d = low; d <= high; ++d) {
            QTFrac v;
            if (!a.is_zero() && d >= a.low_ && d <= a.high_degree()) v += a.c_[static_cast<std::size_t>(d - a.low_)];
            if (!b.is_zero() && d >= b.low_ && d <= b.high_degree()) v += b.c_[static_cast<std::size_t>(d - b.low_)];
            r.c_[static_cast<std::size_t>(d - low)] = v;
        }
        r.normalize();
        return r;
    }

    friend ZSeries operator-(const ZSeries& a, const ZSeries& b) { return a + (-b); }

    friend ZSeries operator*(const ZSeries& a, const ZSeries& b) {
        ZSeries r;
        if (a.is_zero() || b.is_zero()) {
            // Exact zero annihilates; only the partner's unknown tail matters.
            r.trunc_ = std::min(a.trunc_, b.trunc_) == exact_truncation
                           ? exact_truncation
                           : mul_trunc(a, b);
            return r;
        }
        r.trunc_ = mul_trunc(a, b);
        int low = a.low_ + b.low_;
        int high = std::min(a.high_degree() + b.high_degree(), r.trunc_);
        if (high < low) return r;
        r.low_ = low;
        r.c_.assign(static_cast<std::size_t>(high - low) + 1, QTFrac());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                int d = a.low_ + static_cast<int>(i) + b.low_ + static_cast<int>(j);
                if (d > high) break;
                r.c_[static_cast<std::size_t>(d - low)] += a.c_[i] * b.c_[j];
            }
        }
        r.normalize();
        return r;
    }

    ZSeries& operator+=(const ZSeries& b) { *this = *this + b; return *this; }
    ZSeries& operator-=(const ZSeries& b) { *this = *this - b; return *this; }
    ZSeries& operator*=(const ZSeries& b) { *this = *this * b; return *this; }

    /// Window equality: both series must agree on coefficients and carry the
    /// same truncation order.
    friend bool operator==(const ZSeries& a, const ZSeries& b) {
        if (a.trunc_ != b.trunc_) return false;
        int low = std::min(a.is_zero() ? 0 : a.low_, b.is_zero() ? 0 : b.low_);
        int high = std::max(a.is_zero() ? 0 : a.high_degree(), b.is_zero() ? 0 : b.high_degree());
        for (int d = low; d <= high; ++d) {
            QTFrac x = (a.is_zero() || d < a.low_ || d > a.high_degree()) ? QTFrac() : a.c_[static_cast<std::size_t>(d - a.low_)];
            QTFrac y = (b.is_zero() || d < b.low_ || d > b.high_degree()) ? QTFrac() : b.c_[static_cast<std::size_t>(d - b.low_)];
            if (x != y) return false;
        }
        return true;
    }
    friend bool operator!=(const ZSeries& a, const ZSeries& b) { return !(a == b); }

private:
    static int mul_trunc(const ZSeries& a, const ZSeries& b) {
        if (a.trunc_ == exact_truncation && b.trunc_ == exact_truncation) return exact_truncation;
        // The product coefficient at degree d needs a up to d - low(b) and b
        // up to d - low(a).
        long ta = (a.trunc_ == exact_truncation) ? exact_truncation
                                                  : static_cast<long>(a.trunc_) + (b.is_zero() ? 0 : b.low_);
        long tb = (b.trunc_ == exact_truncation) ? exact_truncation
                                                  : static_cast<long>(b.trunc_) + (a.is_zero() ? 0 : a.low_);
        return static_cast<int>(std::min({ta, tb, static_cast<long>(exact_truncation)}));
    }

    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
        while (!c_.empty() && c_.front().is_zero()) {
            c_.erase(c_.begin());
            ++low_;
        }
        if (c_.empty()) low_ = 0;
    }

    int low_ = 0;
    std::vector<QTFrac> c_;
    int trunc_ = exact_truncation;
};

} // namespace hilbk
