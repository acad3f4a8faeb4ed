#pragma once

#include <random>

#include "hilbk/qpoly.hpp"
#include "hilbk/qtpoly.hpp"
#include "hilbk/symfunc.hpp"

namespace hilbk::testsupport {

// Independent partition-count oracle: p(n) by the restricted-size recursion,
// no shared code with partitions_of.
inline long count_partitions_brute(int n, int max_part) {
    if (n == 0) return 1;
    if (n < 0 || max_part == 0) return 0;
    return count_partitions_brute(n - max_part, max_part) +
           count_partitions_brute(n, max_part - 1);
}
inline long count_partitions_brute(int n) { return count_partitions_brute(n, n); }

inline Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(std::mt19937& rng) {
    Rational r = random_rational(rng);
    return r.is_zero() ? Rational(1) : r;
}

inline QPoly random_qpoly(std::mt19937& rng, int max_degree = 3) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    int d = deg(rng);
    std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
    for (auto& x : c) x = random_rational(rng);
    return QPoly(std::move(c));
}

inline QPoly random_nonzero_qpoly(std::mt19937& rng, int max_degree = 3) {
    QPoly p = random_qpoly(rng, max_degree);
    return p.is_zero() ? QPoly(Rational(1)) : p;
}

inline QFrac random_qfrac(std::mt19937& rng) {
    return QFrac(random_qpoly(rng), random_nonzero_qpoly(rng));
}

inline QTPoly random_qtpoly(std::mt19937& rng, int max_tdeg = 2, int max_qdeg = 2) {
    std::uniform_int_distribution<int> deg(0, max_tdeg);
    int d = deg(rng);
    std::vector<QPoly> rows(static_cast<std::size_t>(d) + 1);
    for (auto& row : rows) row = random_qpoly(rng, max_qdeg);
    return QTPoly(std::move(rows));
}

inline QTPoly random_nonzero_qtpoly(std::mt19937& rng) {
    QTPoly p = random_qtpoly(rng);
    return p.is_zero() ? QTPoly(Rational(1)) : p;
}

inline QTFrac random_qtfrac(std::mt19937& rng) {
    return QTFrac(random_qtpoly(rng), random_nonzero_qtpoly(rng));
}

inline SymFunc<Rational> random_symfunc(int degree, std::mt19937& rng) {
    SymFunc<Rational> f;
    std::uniform_int_distribution<int> coin(0, 2);
    for (const auto& lambda : partitions_of(degree))
        if (coin(rng) != 0) f.add_term(lambda, random_rational(rng));
    if (f.is_zero()) {
        auto parts = partitions_of(degree);
        f.add_term(parts[static_cast<std::size_t>(rng()) % parts.size()], Rational(1));
    }
    return f;
}

inline SymFunc<QFrac> random_symfunc_q(int degree, std::mt19937& rng) {
    SymFunc<QFrac> f;
    std::uniform_int_distribution<int> coin(0, 2);
    for (const auto& lambda : partitions_of(degree))
        if (coin(rng) != 0) f.add_term(lambda, QFrac(random_qpoly(rng, 1)));
    if (f.is_zero()) {
        auto parts = partitions_of(degree);
        f.add_term(parts[static_cast<std::size_t>(rng()) % parts.size()], QFrac(1));
    }
    return f;
}

} // namespace hilbk::testsupport
