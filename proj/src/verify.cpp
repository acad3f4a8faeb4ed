#include "hilbk/verify.hpp"

#include <random>
#include <sstream>

#include "hilbk/operators.hpp"
#include "hilbk/product.hpp"
#include "hilbk/serialize.hpp"

namespace hilbk {

namespace {

void record(CheckResult& c, bool pass, const std::string& detail) {
    ++c.checked;
    if (!pass) {
        ++c.failed;
        if (c.counterexample.empty()) c.counterexample = detail;
    }
}

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    return Rational(num(rng), den(rng));
}

SymFunc<Rational> random_symfunc(int degree, std::mt19937& rng) {
    SymFunc<Rational> f;
    std::uniform_int_distribution<int> coin(0, 2);
    for (const auto& lambda : partitions_of(degree))
        if (coin(rng) != 0) f.add_term(lambda, random_rational(rng));
    if (f.is_zero() && degree >= 0) {
        auto parts = partitions_of(degree);
        f.add_term(parts[static_cast<std::size_t>(rng()) % parts.size()], Rational(1));
    }
    return f;
}

SymFunc<QFrac> random_symfunc_q(int degree, std::mt19937& rng) {
    SymFunc<QFrac> f;
    std::uniform_int_distribution<int> coin(0, 2);
    for (const auto& lambda : partitions_of(degree)) {
        if (coin(rng) == 0) continue;
        QPoly p = QPoly(random_rational(rng)) + random_rational(rng) * QPoly::q();
        f.add_term(lambda, QFrac(p));
    }
    if (f.is_zero()) {
        auto parts = partitions_of(degree);
        f.add_term(parts[static_cast<std::size_t>(rng()) % parts.size()], QFrac(1));
    }
    return f;
}

template <class K>
std::string matrix_mismatch(const OperatorMatrix<K>& a, const OperatorMatrix<K>& b) {
    for (std::size_t i = 0; i < a.order.size(); ++i)
        for (std::size_t j = 0; j < a.order.size(); ++j)
            if (!(a.at(i, j) == b.at(i, j))) {
                std::ostringstream os;
                os << "entry (" << a.order[i].str() << "; " << a.order[j].str()
                   << "): " << scalar_text(a.at(i, j)) << " vs " << scalar_text(b.at(i, j));
                return os.str();
            }
    return "matrices differ in shape";
}

} // namespace

SuiteResult verify_main1(int n, int k) {
    SuiteResult r;
    r.suite = "main1(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")";
    CheckResult check("closed E equals q->1 limit of omega-adjoint eigenbasis route");

    LinearOp<QFrac> oracle = [k](const SymFunc<QFrac>& f) { return nabla_q_oracle(f, k); };
    OperatorMatrix<QFrac> eq = omega_conjugate(hall_adjoint(to_matrix(oracle, n)));
    OperatorMatrix<Rational> lhs = limit_q1(eq);
    LinearOp<Rational> closed = [k](const SymFunc<Rational>& f) { return E_closed(f, k); };
    OperatorMatrix<Rational> rhs = to_matrix(closed, n);

    bool pass = (lhs == rhs);
    check.checked = static_cast<long>(lhs.order.size() * lhs.order.size());
    if (!pass) {
        check.failed = 1;
        check.counterexample = matrix_mismatch(lhs, rhs);
    }
    r.checks.push_back(std::move(check));
    return r;
}

SuiteResult verify_nabla(int n, int k) {
    SuiteResult r;
    r.suite = "nabla(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")";

    LinearOp<QFrac> closed_q = [k](const SymFunc<QFrac>& f) { return nabla_q_closed(f, k); };
    LinearOp<QFrac> oracle = [k](const SymFunc<QFrac>& f) { return nabla_q_oracle(f, k); };
    OperatorMatrix<QFrac> mc = to_matrix(closed_q, n);
    OperatorMatrix<QFrac> mo = to_matrix(oracle, n);

    CheckResult c1("closed q-operator equals eigenbasis oracle");
    c1.checked = static_cast<long>(mc.order.size() * mc.order.size());
    if (!(mc == mo)) {
        c1.failed = 1;
        c1.counterexample = matrix_mismatch(mc, mo);
    }
    r.checks.push_back(std::move(c1));

    CheckResult c2("q->1 limit of closed q-operator equals rational closed form");
    OperatorMatrix<Rational> lim = limit_q1(mc);
    LinearOp<Rational> closed = [k](const SymFunc<Rational>& f) { return nabla_closed(f, k); };
    OperatorMatrix<Rational> mr = to_matrix(closed, n);
    c2.checked = static_cast<long>(lim.order.size() * lim.order.size());
    if (!(lim == mr)) {
        c2.failed = 1;
        c2.counterexample = matrix_mismatch(lim, mr);
    }
    r.checks.push_back(std::move(c2));

    CheckResult c3("closed equivariant E equals omega-adjoint of closed q-operator");
    LinearOp<QFrac> eq_closed = [k](const SymFunc<QFrac>& f) { return E_q_closed(f, k); };
    OperatorMatrix<QFrac> me = to_matrix(eq_closed, n);
    OperatorMatrix<QFrac> madj = omega_conjugate(hall_adjoint(mc));
    c3.checked = static_cast<long>(me.order.size() * me.order.size());
    if (!(me == madj)) {
        c3.failed = 1;
        c3.counterexample = matrix_mismatch(me, madj);
    }
    r.checks.push_back(std::move(c3));

    return r;
}

SuiteResult verify_product(int n, unsigned seed) {
    SuiteResult r;
    r.suite = "product(n=" + std::to_string(n) + ")";
    const auto parts = partitions_of(n);
    const std::size_t d = parts.size();

    CheckResult two_route("q->1 limit of equivariant product equals coefficient formula");
    CheckResult vanishing("vanishing when l(l1)+l(l2)-n-l(mu) < 0");
    CheckResult commut("commutativity (exhaustive pairs)");
    CheckResult neutral("s_n neutral for both products");

    for (std::size_t i1 = 0; i1 < d; ++i1) {
        for (std::size_t i2 = 0; i2 < d; ++i2) {
            SymFunc<QFrac> pq =
                odot_q(SymFunc<QFrac>::p(parts[i1]), SymFunc<QFrac>::p(parts[i2]), n);
            SymFunc<QFrac> pq_swapped =
                odot_q(SymFunc<QFrac>::p(parts[i2]), SymFunc<QFrac>::p(parts[i1]), n);
            record(commut, pq == pq_swapped,
                   "pair (" + parts[i1].str() + ")(" + parts[i2].str() + ")");
            for (std::size_t im = 0; im < d; ++im) {
                Rational via_limit = limit_q1(pq.coeff(parts[im]));
                Rational via_formula = structure_const(parts[i1], parts[i2], parts[im]);
                record(two_route, via_limit == via_formula,
                       "c^{" + parts[im].str() + "}_{" + parts[i1].str() + ";" +
                           parts[i2].str() + "}: " + via_limit.str() + " vs " +
                           via_formula.str());
                int index = parts[i1].length() + parts[i2].length() - n - parts[im].length();
                if (index < 0) {
                    Rational lim = limit_q1(structure_const_q(parts[i1], parts[i2], parts[im]));
                    record(vanishing, lim.is_zero() && via_formula.is_zero(),
                           "negative index triple (" + parts[i1].str() + ";" + parts[i2].str() +
                               ";" + parts[im].str() + ") -> " + lim.str());
                }
            }
        }
    }

    SymFunc<Rational> sn = h_to_p(Partition(n == 0 ? std::vector<int>{} : std::vector<int>{n}));
    SymFunc<QFrac> sn_q = lift_q(sn);
    for (std::size_t i = 0; i < d; ++i) {
        SymFunc<QFrac> fq = SymFunc<QFrac>::p(parts[i]);
        record(neutral, odot_q(sn_q, fq, n) == fq,
               "equivariant neutrality on p[" + parts[i].str() + "]");
        SymFunc<Rational> f = SymFunc<Rational>::p(parts[i]);
        record(neutral, odot(sn, f, n) == f, "neutrality on p[" + parts[i].str() + "]");
    }

    CheckResult eigen("eigenbasis product law for u_lambda");
    QFrac qm1n = pow(QFrac(QPoly::q() - QPoly(Rational(1))), n);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            SymFunc<QFrac> lhs = odot_q(u_basis(parts[i]), u_basis(parts[j]), n);
            SymFunc<QFrac> rhs;
            if (i == j) rhs = (qm1n / W_of(parts[i])) * u_basis(parts[i]);
            record(eigen, lhs == rhs,
                   "u pair (" + parts[i].str() + ")(" + parts[j].str() + ")");
        }
    }

    CheckResult assoc("associativity on random triples");
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, d - 1);
    const int triples = 100;
    for (int it = 0; it < triples; ++it) {
        const Partition &a = parts[pick(rng)], &b = parts[pick(rng)], &c = parts[pick(rng)];
        SymFunc<Rational> fa = SymFunc<Rational>::p(a), fb = SymFunc<Rational>::p(b),
                          fc = SymFunc<Rational>::p(c);
        bool pass = odot(odot(fa, fb, n), fc, n) == odot(fa, odot(fb, fc, n), n);
        SymFunc<QFrac> ga = SymFunc<QFrac>::p(a), gb = SymFunc<QFrac>::p(b),
                       gc = SymFunc<QFrac>::p(c);
        bool pass_q = odot_q(odot_q(ga, gb, n), gc, n) == odot_q(ga, odot_q(gb, gc, n), n);
        record(assoc, pass && pass_q,
               "triple (" + a.str() + ")(" + b.str() + ")(" + c.str() + ")");
    }

    r.checks.push_back(std::move(two_route));
    r.checks.push_back(std::move(vanishing));
    r.checks.push_back(std::move(commut));
    r.checks.push_back(std::move(neutral));
    r.checks.push_back(std::move(eigen));
    r.checks.push_back(std::move(assoc));
    return r;
}

SuiteResult verify_leibniz(int max_total_degree, int k, int count, unsigned seed) {
    SuiteResult r;
    r.suite = "leibniz(deg<=" + std::to_string(max_total_degree) + ",k=" + std::to_string(k) + ")";
    std::mt19937 rng(seed);

    CheckResult leib("Leibniz rule on random products");
    std::uniform_int_distribution<int> degree_pick(1, std::max(1, max_total_degree - 1));
    for (int it = 0; it < count; ++it) {
        int df = degree_pick(rng);
        std::uniform_int_distribution<int> rest(1, std::max(1, max_total_degree - df));
        int dg = rest(rng);
        SymFunc<QFrac> f = random_symfunc_q(df, rng);
        SymFunc<QFrac> g = random_symfunc_q(dg, rng);
        SymFunc<QFrac> lhs = nabla_q_closed(f * g, k);
        SymFunc<QFrac> rhs = nabla_q_closed(f, k) * g + f * nabla_q_closed(g, k);
        record(leib, lhs == rhs,
               "f=" + symfunc_text(f) + "  g=" + symfunc_text(g));
    }
    r.checks.push_back(std::move(leib));

    CheckResult split("per-part splitting on p_lambda");
    for (int m = 1; m <= std::min(max_total_degree, 8); ++m) {
        for (const auto& lambda : partitions_of(m)) {
            SymFunc<QFrac> lhs = nabla_q_closed(SymFunc<QFrac>::p(lambda), k);
            SymFunc<QFrac> rhs;
            for (int i = 0; i < lambda.length(); ++i) {
                Partition rest = lambda.with_one_removed(lambda.part(i));
                rhs += nabla_q_closed(SymFunc<QFrac>::p(Partition{lambda.part(i)}), k) *
                       SymFunc<QFrac>::p(rest);
            }
            record(split, lhs == rhs, "lambda=(" + lambda.str() + ")");
        }
    }
    r.checks.push_back(std::move(split));
    return r;
}

SuiteResult verify_d_operator(int n) {
    SuiteResult r;
    r.suite = "d-operator(n=" + std::to_string(n) + ")";

    CheckResult display("value on p_n matches the closed display");
    if (n >= 1) {
        SymFunc<QTFrac> lhs = nabla1_qt(SymFunc<QTFrac>::p(Partition{n}));
        QTFrac factor = QTFrac(QTPoly(QPoly::one_minus_q_pow(n)) *
                                   (QTPoly(Rational(1)) - QTPoly::monomial(Rational(1), 0, n)),
                               QTPoly(QPoly::one_minus_q_pow(1)) *
                                   (QTPoly(Rational(1)) - QTPoly::t()));
        SymFunc<QTFrac> rhs;
        for (const auto& lambda : partitions_of(n)) {
            Rational c(Int(lambda.length() % 2 == 1 ? 1 : -1), z_of(lambda));
            rhs.add_term(lambda, factor * QTFrac(c));
        }
        record(display, lhs == rhs, "nabla1_qt(p_" + std::to_string(n) + ")");
    } else {
        SymFunc<QTFrac> one = SymFunc<QTFrac>::one();
        record(display, op_D(one) == one, "D(1) = 1");
    }
    r.checks.push_back(std::move(display));

    CheckResult restr("t=1 restriction matrix equals eigenbasis route (k=1)");
    LinearOp<QTFrac> d_op = [](const SymFunc<QTFrac>& f) { return nabla1_qt(f); };
    OperatorMatrix<QFrac> lhs = limit_t1(to_matrix(d_op, n));
    LinearOp<QFrac> oracle = [](const SymFunc<QFrac>& f) { return nabla_q_oracle(f, 1); };
    OperatorMatrix<QFrac> rhs = to_matrix(oracle, n);
    restr.checked = static_cast<long>(lhs.order.size() * lhs.order.size());
    if (!(lhs == rhs)) {
        restr.failed = 1;
        restr.counterexample = matrix_mismatch(lhs, rhs);
    }
    r.checks.push_back(std::move(restr));
    return r;
}

SuiteResult verify_foundations(int nmax, unsigned seed) {
    SuiteResult r;
    r.suite = "foundations(n<=" + std::to_string(nmax) + ")";
    std::mt19937 rng(seed);

    CheckResult adjoint("multiplication by p_m/m adjoint to d/dp_m");
    const int adjoint_bound = std::max(1, std::min(nmax, 8));
    for (int it = 0; it < 60; ++it) {
        std::uniform_int_distribution<int> mpick(1, adjoint_bound);
        int m = mpick(rng);
        std::uniform_int_distribution<int> dpick(0, adjoint_bound - m);
        int df = dpick(rng);
        SymFunc<Rational> f = random_symfunc(df, rng);
        SymFunc<Rational> g = random_symfunc(df + m, rng);
        Rational lhs = hall(f * SymFunc<Rational>::p(Partition{m}), g) / Rational(m);
        Rational rhs = hall(f, partial_one(m, g));
        record(adjoint, lhs == rhs, "m=" + std::to_string(m));

        // iterated version: <f * p_lambda / prod(lambda_i), g> = <f, d_lambda g>
        auto lams = partitions_of(m);
        const Partition& lambda = lams[static_cast<std::size_t>(rng()) % lams.size()];
        Rational denom(1);
        for (int part : lambda.parts()) denom *= Rational(part);
        Rational lhs_it = hall(f * SymFunc<Rational>::p(lambda), g) / denom;
        Rational rhs_it = hall(f, partial(lambda, g));
        record(adjoint, lhs_it == rhs_it, "lambda=(" + lambda.str() + ")");
    }
    r.checks.push_back(std::move(adjoint));

    QFrac q_minus_1(QPoly::q() - QPoly(Rational(1)));
    QFrac inv_q_minus_1 = q_minus_1.inverse();

    CheckResult roundtrip("plethysm by X(q-1) then X/(q-1) is the identity");
    CheckResult selfadj("scaling plethysm is self-adjoint");
    CheckResult omega_check("omega equals plethysm by -X");
    for (int it = 0; it < 40; ++it) {
        std::uniform_int_distribution<int> dpick(1, std::max(1, nmax));
        int dd = dpick(rng);
        SymFunc<QFrac> f = random_symfunc_q(dd, rng);
        SymFunc<QFrac> g = random_symfunc_q(dd, rng);
        record(roundtrip,
               plethysm_scale(plethysm_scale(f, q_minus_1), inv_q_minus_1) == f,
               "f=" + symfunc_text(f));
        record(selfadj,
               hall(f, plethysm_scale(g, q_minus_1)) == hall(plethysm_scale(f, q_minus_1), g),
               "f,g degree " + std::to_string(dd));
        record(omega_check, omega(f) == plethysm_scale(f, QFrac(Rational(-1))),
               "f=" + symfunc_text(f));
    }
    r.checks.push_back(std::move(roundtrip));
    r.checks.push_back(std::move(selfadj));
    r.checks.push_back(std::move(omega_check));

    CheckResult pairing("(q-1)^l(lambda) [lambda]_q pairing identity");
    for (int n = 1; n <= nmax; ++n) {
        SymFunc<QFrac> f = random_symfunc_q(n, rng);
        SymFunc<QFrac> fq = plethysm_scale(f, q_minus_1);
        for (const auto& lambda : partitions_of(n)) {
            SymFunc<QFrac> pl = SymFunc<QFrac>::p(lambda);
            QFrac lhs = hall(pl, fq);
            QFrac rhs = pow(q_minus_1, lambda.length()) * QFrac(q_part(lambda)) * hall(pl, f);
            record(pairing, lhs == rhs, "lambda=(" + lambda.str() + ")");
        }
    }
    r.checks.push_back(std::move(pairing));

    CheckResult duality("<h_l[X/(q-1)], m_m[X(q-1)]> = delta");
    for (int n = 0; n <= std::min(nmax, 7); ++n) {
        auto parts = partitions_of(n);
        for (const auto& la : parts) {
            SymFunc<QFrac> hl = plethysm_scale(lift_q(h_to_p(la)), inv_q_minus_1);
            for (const auto& mu : parts) {
                QFrac val = hall(hl, u_basis(mu));
                QFrac expect = (la == mu) ? QFrac(1) : QFrac(0);
                record(duality, val == expect,
                       "(" + la.str() + ")(" + mu.str() + ") -> " + scalar_text(val));
            }
        }
    }
    r.checks.push_back(std::move(duality));

    CheckResult schur("<s_lambda, s_mu> = delta");
    for (int n = 0; n <= std::min(nmax, 6); ++n) {
        auto parts = partitions_of(n);
        for (const auto& la : parts)
            for (const auto& mu : parts) {
                Rational val = hall(s_to_p(la), s_to_p(mu));
                Rational expect = (la == mu) ? Rational(1) : Rational(0);
                record(schur, val == expect, "(" + la.str() + ")(" + mu.str() + ")");
            }
    }
    r.checks.push_back(std::move(schur));

    CheckResult adams("Adams additivity of t=1 restrictions");
    CheckResult transp("q,t swap equals transpose");
    for (int k = 1; k <= 4; ++k) {
        for (int a = 0; a <= 5; ++a)
            for (int b = 0; a + b <= 5; ++b)
                for (const auto& la : partitions_of(a))
                    for (const auto& mu : partitions_of(b)) {
                        QFrac sum = taut_restriction(la, k).value_q +
                                    taut_restriction(mu, k).value_q;
                        QFrac joint = taut_restriction(product(la, mu), k).value_q;
                        record(adams, sum == joint,
                               "k=" + std::to_string(k) + " (" + la.str() + ")(" + mu.str() + ")");
                    }
        for (int n = 0; n <= std::min(nmax, 7); ++n)
            for (const auto& la : partitions_of(n)) {
                QTFrac swapped = taut_restriction(la, k).value_qt.swapped();
                QTFrac transposed = taut_restriction(transpose(la), k).value_qt;
                record(transp, swapped == transposed,
                       "k=" + std::to_string(k) + " lambda=(" + la.str() + ")");
            }
        // the q=1 additivity that follows: restricting at q=1 is additive
        // only after the transpose twist
        auto value_t = [k](const Partition& la) {
            return limit_t1(taut_restriction(la, k).value_qt.swapped());
        };
        for (int a = 0; a <= 4; ++a)
            for (int b = 0; a + b <= 4; ++b)
                for (const auto& la : partitions_of(a))
                    for (const auto& mu : partitions_of(b)) {
                        Partition twisted =
                            transpose(product(transpose(la), transpose(mu)));
                        record(transp, value_t(twisted) == value_t(la) + value_t(mu),
                               "q=1 additivity k=" + std::to_string(k) + " (" + la.str() +
                                   ")(" + mu.str() + ")");
                    }
    }
    r.checks.push_back(std::move(adams));
    r.checks.push_back(std::move(transp));

    CheckResult distinct("t=1 eigenvalues pairwise distinct");
    for (int n = 0; n <= std::min(nmax, 8); ++n) {
        auto parts = partitions_of(n);
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = i + 1; j < parts.size(); ++j)
                record(distinct,
                       !(taut_restriction(parts[i], 1).value_q ==
                         taut_restriction(parts[j], 1).value_q),
                       "(" + parts[i].str() + ") vs (" + parts[j].str() + ")");
    }
    r.checks.push_back(std::move(distinct));

    return r;
}

std::string format_report(const SuiteResult& r) {
    std::ostringstream os;
    os << "suite " << r.suite << "\n";
    for (const auto& c : r.checks) {
        os << "  [" << (c.ok() ? "ok" : "FAIL") << "] " << c.name << " (" << c.checked
           << " checks";
        if (!c.ok()) os << ", " << c.failed << " failed; first: " << c.counterexample;
        os << ")\n";
    }
    os << (r.ok() ? "PASS" : "FAIL") << ": " << r.total_checked() << " checks\n";
    return os.str();
}

} // namespace hilbk
