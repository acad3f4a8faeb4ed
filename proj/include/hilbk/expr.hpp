#pragma once

#include <string>
#include <vector>

#include "hilbk/symfunc.hpp"

namespace hilbk {

/// Abstract syntax tree for symmetric-function expressions.
///
/// Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := base ['^' uint]
///   base   := atom | number | 'q' | 't' | '(' expr ')' | '-' base
///   atom   := ('p'|'h'|'m'|'s') '[' int (',' int)* ']'
///
/// Scalar literals ("3/2", "((q^2-1)/(q-1))") fall out of number/'q'/'t'
/// plus the arithmetic; division requires a scalar divisor.
struct SymExpr {
    enum class Kind { Sum, Diff, Prod, Quot, Pow, Neg, Atom, Scalar };
    Kind kind = Kind::Scalar;
    std::vector<SymExpr> children;
    char basis = 'p';      // Atom
    Partition partition;   // Atom
    QTFrac scalar;         // Scalar
    int exponent = 0;      // Pow
};

/// Parses expression text.  Partition literals are auto-sorted nonincreasing
/// unless strict_partitions is set, in which case unsorted input is
/// rejected.  Throws SyntaxError (with position) or InvalidPartition.
SymExpr parse_expr(const std::string& text, bool strict_partitions = false);

/// Lowers the AST into a symmetric function over Q(q,t); non-p atoms go
/// through the basis conversions.
SymFunc<QTFrac> evaluate(const SymExpr& e);

/// True when f has no terms outside the empty partition.
bool is_scalar_value(const SymFunc<QTFrac>& f);

/// Narrowing helpers for operators defined over smaller scalar fields.
/// Both throw EvalError when the value genuinely involves t (resp. q).
SymFunc<QFrac> narrow_to_q(const SymFunc<QTFrac>& f);
SymFunc<Rational> narrow_to_rational(const SymFunc<QFrac>& f);

} // namespace hilbk
