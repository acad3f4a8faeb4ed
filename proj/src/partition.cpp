#include "hilbk/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hilbk {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be nonincreasing");
    }
    sum_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::mult(int value) const {
    int c = 0;
    for (int p : parts_)
        if (p == value) ++c;
    return c;
}

std::vector<std::pair<int, int>> Partition::multiplicities() const {
    std::vector<std::pair<int, int>> m;
    for (int p : parts_) {
        if (!m.empty() && m.back().first == p)
            ++m.back().second;
        else
            m.emplace_back(p, 1);
    }
    return m;
}

Partition Partition::with_one_removed(int value) const {
    std::vector<int> out;
    out.reserve(parts_.size() - 1);
    bool removed = false;
    for (int p : parts_) {
        if (!removed && p == value) {
            removed = true;
            continue;
        }
        out.push_back(p);
    }
    if (!removed) throw std::invalid_argument("Partition: part not present");
    Partition r;
    r.parts_ = std::move(out);
    r.sum_ = sum_ - value;
    return r;
}

bool Partition::contains(const Partition& sub) const {
    auto m = multiplicities();
    for (auto [v, c] : sub.multiplicities()) {
        bool found = false;
        for (auto [w, d] : m)
            if (w == v && d >= c) { found = true; break; }
        if (!found) return false;
    }
    return true;
}

Partition Partition::minus(const Partition& sub) const {
    std::vector<int> out = parts_;
    for (int v : sub.parts_) {
        auto it = std::find(out.begin(), out.end(), v);
        if (it == out.end()) throw std::invalid_argument("Partition: minus of non-subset");
        out.erase(it);
    }
    Partition r;
    r.parts_ = std::move(out);
    r.sum_ = sum_ - sub.sum_;
    return r;
}

bool operator<(const Partition& a, const Partition& b) {
    if (a.sum_ != b.sum_) return a.sum_ < b.sum_;
    // Reverse-lexicographic within a degree: (n) first, (1^n) last, i.e.
    // lexicographically larger part sequences come first.
    return std::lexicographical_compare(b.parts_.begin(), b.parts_.end(),
                                        a.parts_.begin(), a.parts_.end());
}

std::string Partition::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    return os.str();
}

namespace {

void enumerate(int remaining, int maxPart, std::vector<int>& acc,
               std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (int p = std::min(remaining, maxPart); p >= 1; --p) {
        acc.push_back(p);
        enumerate(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> acc;
    enumerate(n, n, acc, out);
    return out;
}

long partition_count(int n) {
    return static_cast<long>(partitions_of(n).size());
}

Int z_of(const Partition& lambda) {
    Int z = mult_factorial(lambda);
    for (int p : lambda.parts()) z *= p;
    return z;
}

Int mult_factorial(const Partition& lambda) {
    Int z = 1;
    for (auto [value, count] : lambda.multiplicities()) {
        (void)value;
        z *= factorial(count);
    }
    return z;
}

Partition product(const Partition& a, const Partition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

Partition transpose(const Partition& lambda) {
    if (lambda.empty()) return Partition();
    std::vector<int> out(static_cast<std::size_t>(lambda.part(0)), 0);
    for (int p : lambda.parts())
        for (int j = 0; j < p; ++j) ++out[static_cast<std::size_t>(j)];
    return Partition(std::move(out));
}

QPoly q_int(int n) {
    if (n < 1) throw std::invalid_argument("q_int: n must be positive");
    std::vector<Rational> coeffs(static_cast<std::size_t>(n), Rational(1));
    return QPoly(std::move(coeffs));
}

QPoly q_part(const Partition& lambda) {
    QPoly r(Rational(1));
    for (int p : lambda.parts()) r *= q_int(p);
    return r;
}

QPoly c_lambda(const Partition& lambda) {
    QPoly r(Rational(1));
    for (int p : lambda.parts())
        for (int j = 1; j <= p; ++j) r *= QPoly::one_minus_q_pow(j);
    return r;
}

} // namespace hilbk
