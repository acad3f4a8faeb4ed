// hilbk: exact operators and products on symmetric functions from the
// K-theory of Hilbert schemes of points in the plane.
//
// Subcommands:
//   verify <suite> --n N [--k K] [--json]
//   apply <op> [--k K] [--n N] <expr> [<expr2>]
//   table <kind> --n N [--k K] --out PATH --format json|csv

#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "hilbk/errors.hpp"
#include "hilbk/expr.hpp"
#include "hilbk/operators.hpp"
#include "hilbk/product.hpp"
#include "hilbk/serialize.hpp"
#include "hilbk/verify.hpp"

namespace {

using namespace hilbk;

constexpr int exit_ok = 0;
constexpr int exit_verification_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_computation = 3;

Json suite_json(const SuiteResult& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json jc;
        jc["name"] = c.name;
        jc["checked"] = c.checked;
        jc["failed"] = c.failed;
        if (!c.ok()) jc["counterexample"] = c.counterexample;
        checks.push_back(std::move(jc));
    }
    Json j;
    j["suite"] = r.suite;
    j["pass"] = r.ok();
    j["checks"] = std::move(checks);
    return j;
}

int run_verify(const std::string& suite, int n, int k, bool as_json) {
    SuiteResult r;
    if (suite == "main1") r = verify_main1(n, k);
    else if (suite == "nabla") r = verify_nabla(n, k);
    else if (suite == "product") r = verify_product(n);
    else if (suite == "leibniz") r = verify_leibniz(n, k);
    else if (suite == "d-operator") r = verify_d_operator(n);
    else {
        std::cerr << "unknown suite '" << suite << "'\n";
        return exit_usage;
    }
    if (as_json)
        std::cout << suite_json(r).dump(2) << "\n";
    else
        std::cout << format_report(r);
    return r.ok() ? exit_ok : exit_verification_failed;
}

void print_symfunc(const SymFunc<QTFrac>& f, char out_basis, bool as_json) {
    if (as_json) {
        std::cout << symfunc_json(f).dump(2) << "\n";
        return;
    }
    if (out_basis == 'p') {
        std::cout << symfunc_text(f) << "\n";
        return;
    }
    std::cout << terms_text(expand_in_named_basis(f, out_basis), out_basis) << "\n";
}

template <class K, class Op>
SymFunc<K> apply_per_component(const SymFunc<K>& f, Op&& op) {
    SymFunc<K> out;
    for (int d = 0; d <= f.degree(); ++d) {
        SymFunc<K> comp = f.component(d);
        if (!comp.is_zero()) out += op(comp);
    }
    return out;
}

int run_apply(const std::string& op, int k, int n, bool has_n,
              const std::string& expr_text, const std::string& expr2_text,
              bool strict, char out_basis, bool as_json) {
    SymFunc<QTFrac> input = evaluate(parse_expr(expr_text, strict));
    SymFunc<QTFrac> result;

    if (op == "E" || op == "nabla") {
        SymFunc<Rational> f = narrow_to_rational(narrow_to_q(input));
        SymFunc<Rational> g = (op == "E") ? E_closed(f, k) : nabla_closed(f, k);
        result = lift_qt(g);
    } else if (op == "nabla_q" || op == "E_q") {
        SymFunc<QFrac> f = narrow_to_q(input);
        SymFunc<QFrac> g = (op == "nabla_q") ? nabla_q_closed(f, k) : E_q_closed(f, k);
        result = lift_qt(g);
    } else if (op == "D") {
        result = apply_per_component(input, [](const SymFunc<QTFrac>& f) { return op_D(f); });
    } else if (op == "odot" || op == "odot_q") {
        if (expr2_text.empty()) {
            std::cerr << "op '" << op << "' needs two expressions\n";
            return exit_usage;
        }
        SymFunc<QTFrac> input2 = evaluate(parse_expr(expr2_text, strict));
        int degree = n;
        if (!has_n) {
            int d1 = 0, d2 = 0;
            if (!input.is_homogeneous(&d1) || !input2.is_homogeneous(&d2) ||
                (!input.is_zero() && !input2.is_zero() && d1 != d2)) {
                std::cerr << "odot inputs must be homogeneous of one degree (or pass --n)\n";
                return exit_usage;
            }
            degree = input.is_zero() ? d2 : d1;
        }
        if (op == "odot") {
            SymFunc<Rational> f = narrow_to_rational(narrow_to_q(input));
            SymFunc<Rational> g = narrow_to_rational(narrow_to_q(input2));
            result = lift_qt(odot(f, g, degree));
        } else {
            SymFunc<QFrac> f = narrow_to_q(input);
            SymFunc<QFrac> g = narrow_to_q(input2);
            result = lift_qt(odot_q(f, g, degree));
        }
    } else {
        std::cerr << "unknown op '" << op << "'\n";
        return exit_usage;
    }

    print_symfunc(result, out_basis, as_json);
    return exit_ok;
}

int run_table(const std::string& kind, int n, int k, const std::string& out_path,
              const std::string& format) {
    std::string payload;
    if (kind == "structure" || kind == "structure-q") {
        StructureTable t = build_structure_table(n, kind == "structure-q");
        payload = (format == "json") ? structure_table_json(t).dump(2) + "\n"
                                     : structure_table_csv(t);
    } else if (kind == "operator-E" || kind == "operator-nabla") {
        LinearOp<Rational> op = (kind == "operator-E")
            ? LinearOp<Rational>([k](const SymFunc<Rational>& f) { return E_closed(f, k); })
            : LinearOp<Rational>([k](const SymFunc<Rational>& f) { return nabla_closed(f, k); });
        OperatorMatrix<Rational> m = to_matrix(op, n);
        payload = (format == "json") ? matrix_json(m).dump(2) + "\n" : matrix_csv(m);
    } else if (kind == "taut-restrictions") {
        payload = (format == "json") ? taut_table_json(n, k).dump(2) + "\n"
                                     : taut_table_csv(n, k);
    } else {
        std::cerr << "unknown table kind '" << kind << "'\n";
        return exit_usage;
    }

    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open '" << out_path << "' for writing\n";
        return exit_computation;
    }
    out << payload;
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hilbert-scheme K-theory operators on symmetric functions"};
    app.require_subcommand(1);

    std::string suite, op, kind, expr_text, expr2_text, out_path, format = "csv";
    int n = 0, k = 1;
    bool as_json = false, strict = false, allow_large = false;
    std::string out_basis = "p";

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "main1 | nabla | product | leibniz | d-operator")
        ->required();
    verify->add_option("--n", n, "degree (leibniz: max total degree)")->required();
    verify->add_option("--k", k, "Adams power")->check(CLI::PositiveNumber);
    verify->add_flag("--json", as_json, "emit a JSON report");

    auto* apply = app.add_subcommand("apply", "apply an operator to an expression");
    apply->add_option("op", op, "E | nabla | nabla_q | E_q | D | odot | odot_q")->required();
    auto* n_opt = apply->add_option("--n", n, "degree for odot / odot_q");
    apply->add_option("--k", k, "Adams power")->check(CLI::PositiveNumber);
    apply->add_option("expr", expr_text, "expression, e.g. \"p[2,1] + 1/2*h[2]\"")->required();
    apply->add_option("expr2", expr2_text, "second expression (odot, odot_q)");
    apply->add_flag("--strict-partitions", strict, "reject unsorted partition literals");
    apply->add_option("--out-basis", out_basis, "p | h | m | s (default p)");
    apply->add_flag("--json", as_json, "emit JSON");

    auto* table = app.add_subcommand("table", "emit a deterministic table file");
    table->add_option("kind", kind,
                      "structure | structure-q | operator-E | operator-nabla | taut-restrictions")
        ->required();
    table->add_option("--n", n, "degree")->required();
    table->add_option("--k", k, "Adams power")->check(CLI::PositiveNumber);
    table->add_option("--out", out_path, "output path")->required();
    table->add_option("--format", format, "json | csv");
    table->add_flag("--allow-large", allow_large, "lift the default size guard (n <= 10)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (app.got_subcommand(verify)) {
            if (n < 0 || k < 1) {
                std::cerr << "need n >= 0 and k >= 1\n";
                return exit_usage;
            }
            return run_verify(suite, n, k, as_json);
        }
        if (app.got_subcommand(apply)) {
            if (out_basis.size() != 1 || std::string("phms").find(out_basis) == std::string::npos) {
                std::cerr << "--out-basis must be one of p,h,m,s\n";
                return exit_usage;
            }
            return run_apply(op, k, n, n_opt->count() > 0, expr_text, expr2_text, strict,
                             out_basis[0], as_json);
        }
        if (app.got_subcommand(table)) {
            if (n < 0 || k < 1) {
                std::cerr << "need n >= 0 and k >= 1\n";
                return exit_usage;
            }
            if (n > 10 && !allow_large) {
                std::cerr << "n > 10 refused (pass --allow-large to override)\n";
                return exit_usage;
            }
            if (format != "json" && format != "csv") {
                std::cerr << "--format must be json or csv\n";
                return exit_usage;
            }
            return run_table(kind, n, k, out_path, format);
        }
    } catch (const SyntaxError& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return exit_usage;
    } catch (const InvalidPartition& e) {
        std::cerr << "invalid partition: " << e.what() << "\n";
        return exit_usage;
    } catch (const EvalError& e) {
        std::cerr << "evaluation error: " << e.what() << "\n";
        return exit_usage;
    } catch (const PoleAtOne& e) {
        std::cerr << "pole at q=1: " << e.what() << "\n";
        return exit_computation;
    } catch (const PoleAtTOne& e) {
        std::cerr << "pole at t=1: " << e.what() << "\n";
        return exit_computation;
    } catch (const TruncationExceeded& e) {
        std::cerr << "truncation exceeded: " << e.what() << "\n";
        return exit_computation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_computation;
    }
    return exit_usage;
}
