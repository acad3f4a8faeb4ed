#include "hilbk/expr.hpp"

#include <algorithm>
#include <cctype>

#include "hilbk/bases.hpp"
#include "hilbk/errors.hpp"

namespace hilbk {

namespace {

class Parser {
public:
    Parser(const std::string& text, bool strict) : s_(text), strict_(strict) {}

    SymExpr run() {
        SymExpr e = parse_sum();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    SymExpr parse_sum() {
        SymExpr lhs = parse_term();
        for (;;) {
            if (eat('+')) {
                SymExpr node;
                node.kind = SymExpr::Kind::Sum;
                node.children = {std::move(lhs), parse_term()};
                lhs = std::move(node);
            } else if (eat('-')) {
                SymExpr node;
                node.kind = SymExpr::Kind::Diff;
                node.children = {std::move(lhs), parse_term()};
                lhs = std::move(node);
            } else {
                return lhs;
            }
        }
    }

    SymExpr parse_term() {
        SymExpr lhs = parse_factor();
        for (;;) {
            if (eat('*')) {
                SymExpr node;
                node.kind = SymExpr::Kind::Prod;
                node.children = {std::move(lhs), parse_factor()};
                lhs = std::move(node);
            } else if (eat('/')) {
                SymExpr node;
                node.kind = SymExpr::Kind::Quot;
                node.children = {std::move(lhs), parse_factor()};
                lhs = std::move(node);
            } else {
                return lhs;
            }
        }
    }

    SymExpr parse_factor() {
        SymExpr base = parse_base();
        if (eat('^')) {
            SymExpr node;
            node.kind = SymExpr::Kind::Pow;
            node.exponent = parse_uint();
            node.children = {std::move(base)};
            return node;
        }
        return base;
    }

    SymExpr parse_base() {
        char c = peek();
        if (c == '-') {
            ++pos_;
            SymExpr node;
            node.kind = SymExpr::Kind::Neg;
            node.children = {parse_base()};
            return node;
        }
        if (c == '(') {
            ++pos_;
            SymExpr inner = parse_sum();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            SymExpr node;
            node.kind = SymExpr::Kind::Scalar;
            node.scalar = QTFrac(Rational(static_cast<long>(parse_uint())));
            return node;
        }
        if (c == 'q' || c == 't') {
            // variable, unless it opens a basis atom (only p,h,m,s do)
            ++pos_;
            SymExpr node;
            node.kind = SymExpr::Kind::Scalar;
            node.scalar = (c == 'q') ? QTFrac(QPoly::q()) : QTFrac(QTPoly::t());
            return node;
        }
        if (c == 'p' || c == 'h' || c == 'm' || c == 's') {
            ++pos_;
            return parse_atom(c);
        }
        fail("expected expression");
    }

    SymExpr parse_atom(char basis) {
        if (!eat('[')) fail("expected '[' after basis letter");
        std::vector<int> parts;
        parts.push_back(parse_int());
        while (eat(',')) parts.push_back(parse_int());
        if (!eat(']')) fail("expected ']'");

        for (int p : parts)
            if (p <= 0)
                throw InvalidPartition("partition parts must be positive, got " +
                                       std::to_string(p));
        if (!std::is_sorted(parts.rbegin(), parts.rend())) {
            if (strict_)
                throw InvalidPartition("partition parts must be nonincreasing in strict mode");
            std::sort(parts.begin(), parts.end(), std::greater<int>());
        }
        SymExpr node;
        node.kind = SymExpr::Kind::Atom;
        node.basis = basis;
        node.partition = Partition(std::move(parts));
        return node;
    }

    int parse_uint() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected number");
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1000000) fail("number too large");
            ++pos_;
        }
        return static_cast<int>(v);
    }

    int parse_int() {
        skip_ws();
        bool neg = false;
        if (pos_ < s_.size() && s_[pos_] == '-') {
            neg = true;
            ++pos_;
        }
        int v = parse_uint();
        return neg ? -v : v;
    }

    const std::string& s_;
    bool strict_;
    std::size_t pos_ = 0;
};

} // namespace

SymExpr parse_expr(const std::string& text, bool strict_partitions) {
    return Parser(text, strict_partitions).run();
}

bool is_scalar_value(const SymFunc<QTFrac>& f) {
    for (const auto& [lambda, c] : f.terms())
        if (!lambda.empty()) return false;
    return true;
}

SymFunc<QTFrac> evaluate(const SymExpr& e) {
    switch (e.kind) {
        case SymExpr::Kind::Scalar:
            return SymFunc<QTFrac>::constant(e.scalar);
        case SymExpr::Kind::Atom: {
            switch (e.basis) {
                case 'p': return SymFunc<QTFrac>::p(e.partition);
                case 'h': return lift_qt(h_to_p(e.partition));
                case 'm': return lift_qt(m_to_p(e.partition));
                case 's': return lift_qt(s_to_p(e.partition));
            }
            throw EvalError("unknown basis letter");
        }
        case SymExpr::Kind::Neg:
            return -evaluate(e.children[0]);
        case SymExpr::Kind::Sum:
            return evaluate(e.children[0]) + evaluate(e.children[1]);
        case SymExpr::Kind::Diff:
            return evaluate(e.children[0]) - evaluate(e.children[1]);
        case SymExpr::Kind::Prod:
            return evaluate(e.children[0]) * evaluate(e.children[1]);
        case SymExpr::Kind::Quot: {
            SymFunc<QTFrac> num = evaluate(e.children[0]);
            SymFunc<QTFrac> den = evaluate(e.children[1]);
            if (!is_scalar_value(den)) throw EvalError("division by a non-scalar expression");
            QTFrac d = den.coeff(Partition());
            if (d.is_zero()) throw EvalError("division by zero");
            return num.map_coeffs<QTFrac>([&](const QTFrac& c) { return c / d; });
        }
        case SymExpr::Kind::Pow: {
            SymFunc<QTFrac> base = evaluate(e.children[0]);
            SymFunc<QTFrac> r = SymFunc<QTFrac>::one();
            for (int i = 0; i < e.exponent; ++i) r = r * base;
            return r;
        }
    }
    throw EvalError("corrupt expression tree");
}

SymFunc<QFrac> narrow_to_q(const SymFunc<QTFrac>& f) {
    SymFunc<QFrac> out;
    for (const auto& [lambda, c] : f.terms()) {
        if (!c.is_t_free_value())
            throw EvalError("coefficient involves t where a Q(q) value is required");
        out.add_term(lambda, limit_t1(c));
    }
    return out;
}

SymFunc<Rational> narrow_to_rational(const SymFunc<QFrac>& f) {
    SymFunc<Rational> out;
    for (const auto& [lambda, c] : f.terms()) {
        if (!c.is_rational_constant())
            throw EvalError("coefficient involves q where a rational value is required");
        out.add_term(lambda, c.num().coeff(0));
    }
    return out;
}

} // namespace hilbk
