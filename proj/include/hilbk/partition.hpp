#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "hilbk/qpoly.hpp"
#include "hilbk/rational.hpp"

namespace hilbk {

/// Integer partition: a nonincreasing sequence of positive integers.  The
/// empty sequence is the unique partition of 0.
///
/// Partitions are value types with structural equality.  The ordering is the
/// canonical indexing order used everywhere for matrices and tables: graded
/// by sum, then reverse-lexicographic within a degree ((n) first, (1,...,1)
/// last).
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int sum() const { return sum_; }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return parts_[static_cast<std::size_t>(i)]; }

    /// Multiplicity a_j: the number of parts equal to j.
    int mult(int value) const;
    /// (value, multiplicity) pairs, decreasing by value.
    std::vector<std::pair<int, int>> multiplicities() const;

    /// Partition with a single copy of `value` removed; value must occur.
    Partition with_one_removed(int value) const;
    /// Multiset inclusion.
    bool contains(const Partition& sub) const;
    /// Multiset difference (requires contains(sub)).
    Partition minus(const Partition& sub) const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b);
    friend bool operator>(const Partition& a, const Partition& b) { return b < a; }

    /// "2,1" (empty string for the empty partition).
    std::string str() const;

private:
    std::vector<int> parts_;
    int sum_ = 0;
};

/// All partitions of n, each exactly once, in canonical order.
std::vector<Partition> partitions_of(int n);

/// The number of partitions of n (size of partitions_of(n)).
long partition_count(int n);

/// z_lambda = prod a_i(lambda)! * i^{a_i(lambda)}.
Int z_of(const Partition& lambda);

/// prod_i a_i(lambda)!
Int mult_factorial(const Partition& lambda);

/// Multiset union of the parts, re-sorted nonincreasing.
Partition product(const Partition& a, const Partition& b);

/// Conjugate partition (Young diagram transpose).
Partition transpose(const Partition& lambda);

/// [n]_q = (q^n - 1)/(q - 1) = 1 + q + ... + q^{n-1}, n >= 1.
QPoly q_int(int n);

/// [lambda]_q = prod [lambda_i]_q; empty product is 1.
QPoly q_part(const Partition& lambda);

/// c_lambda(q) = prod_{i} prod_{j=1}^{lambda_i} (1 - q^j); empty product is 1.
QPoly c_lambda(const Partition& lambda);

} // namespace hilbk
