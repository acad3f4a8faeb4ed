// Acceptance suite: runs every gate criterion at full size and prints one
// pass/fail line per criterion.  All comparisons are exact (tolerance zero).
//
// Usage: acceptance [path-to-cli-binary]
// When the CLI path is given, the determinism criterion re-runs the table
// emitter in two fresh processes and compares bytes.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hilbk/operators.hpp"
#include "hilbk/product.hpp"
#include "hilbk/serialize.hpp"
#include "hilbk/verify.hpp"

using namespace hilbk;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& label, bool pass, const std::string& detail = "") {
    std::printf("%s criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", criterion, label.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++g_failures;
}

bool run_suites(std::vector<SuiteResult>& all, std::string& first_failure) {
    bool ok = true;
    for (const auto& r : all) {
        if (!r.ok()) {
            ok = false;
            for (const auto& c : r.checks)
                if (!c.ok() && first_failure.empty())
                    first_failure = r.suite + " / " + c.name + ": " + c.counterexample;
        }
    }
    return ok;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    auto t0 = std::chrono::steady_clock::now();

    // 1. closed induced-multiplication operator against the eigenbasis
    //    route, n <= 8, k <= 4
    {
        std::vector<SuiteResult> rs;
        for (int n = 0; n <= 8; ++n)
            for (int k = 1; k <= 4; ++k) rs.push_back(verify_main1(n, k));
        std::string why;
        bool ok = run_suites(rs, why);
        report(1, "closed E formula equals eigenbasis route (n<=8, k<=4)", ok, why);
    }

    // 2. closed one-parameter operator against the oracle and its q->1 limit
    {
        std::vector<SuiteResult> rs;
        for (int n = 0; n <= 8; ++n)
            for (int k = 1; k <= 4; ++k) rs.push_back(verify_nabla(n, k));
        std::string why;
        bool ok = run_suites(rs, why);
        report(2, "closed nabla formulas, equivariant and rational (n<=8, k<=4)", ok, why);
    }

    // 3. D operator: closed display on p_n and t=1 restriction, n <= 6
    {
        std::vector<SuiteResult> rs;
        for (int n = 0; n <= 6; ++n) rs.push_back(verify_d_operator(n));
        std::string why;
        bool ok = run_suites(rs, why);
        report(3, "D operator display and t=1 restriction (n<=6)", ok, why);
    }

    // 4. Leibniz on 200 random pairs, deg f + deg g <= 8
    {
        std::vector<SuiteResult> rs;
        for (int k = 1; k <= 4; ++k)
            rs.push_back(verify_leibniz(8, k, 50, 0xACCE55 + static_cast<unsigned>(k)));
        std::string why;
        bool ok = run_suites(rs, why);
        report(4, "Leibniz rule, 200 randomized pairs (deg <= 8, k <= 4)", ok, why);
    }

    // 5. structure constants, two routes + ring axioms + vanishing, n <= 6
    {
        std::vector<SuiteResult> rs;
        for (int n = 0; n <= 6; ++n) rs.push_back(verify_product(n));
        std::string why;
        bool ok = run_suites(rs, why);
        report(5, "structure constants and ring axioms (n<=6)", ok, why);
    }

    // 6. frozen n=2 table, double-computed
    {
        SymFunc<Rational> p2 = SymFunc<Rational>::p(Partition{2});
        SymFunc<Rational> p11 = SymFunc<Rational>::p(Partition{1, 1});
        auto limit_of = [](const SymFunc<QFrac>& f) {
            SymFunc<Rational> out;
            for (const auto& [lambda, c] : f.terms()) out.add_term(lambda, limit_q1(c));
            return out;
        };
        SymFunc<QFrac> q2 = SymFunc<QFrac>::p(Partition{2});
        SymFunc<QFrac> q11 = SymFunc<QFrac>::p(Partition{1, 1});

        bool ok = odot(p2, p2, 2).is_zero() &&
                  odot(p11, p2, 2) == Rational(2) * p2 &&
                  odot(p11, p11, 2) == Rational(2) * p11 - Rational(2) * p2 &&
                  limit_of(odot_q(q2, q2, 2)).is_zero() &&
                  limit_of(odot_q(q11, q2, 2)) == Rational(2) * p2 &&
                  limit_of(odot_q(q11, q11, 2)) == Rational(2) * p11 - Rational(2) * p2;
        report(6, "frozen n=2 products via both routes", ok);
    }

    // 7. foundation suites, n <= 7
    {
        std::vector<SuiteResult> rs{verify_foundations(7)};
        std::string why;
        bool ok = run_suites(rs, why);
        report(7, "foundation identities (adjointness, plethysm, duality, restrictions)", ok, why);
    }

    // 8. determinism of table outputs
    {
        bool ok = true;
        std::string detail;
        if (!cli.empty()) {
            struct Job {
                const char* args;
                const char* name;
            };
            const std::vector<Job> jobs = {
                {"table structure --n 4 --format csv", "structure4.csv"},
                {"table structure-q --n 3 --format json", "structureq3.json"},
                {"table operator-E --n 5 --k 2 --format json", "opE5.json"},
                {"table taut-restrictions --n 4 --k 2 --format csv", "taut4.csv"},
            };
            for (const auto& job : jobs) {
                std::string a = std::string("/tmp/hilbk_det_a_") + job.name;
                std::string b = std::string("/tmp/hilbk_det_b_") + job.name;
                std::string cmd1 = cli + " " + job.args + " --out " + a;
                std::string cmd2 = cli + " " + job.args + " --out " + b;
                if (std::system(cmd1.c_str()) != 0 || std::system(cmd2.c_str()) != 0) {
                    ok = false;
                    detail = std::string("emitter failed for ") + job.args;
                    break;
                }
                std::string ca = read_file(a), cb = read_file(b);
                if (ca.empty() || ca != cb) {
                    ok = false;
                    detail = std::string("bytes differ for ") + job.args;
                    break;
                }
            }
        } else {
            ok = structure_table_csv(build_structure_table(4, false)) ==
                     structure_table_csv(build_structure_table(4, false)) &&
                 matrix_json(to_matrix(LinearOp<Rational>(
                                           [](const SymFunc<Rational>& f) { return E_closed(f, 2); }),
                                       5))
                         .dump(2) ==
                     matrix_json(to_matrix(LinearOp<Rational>(
                                               [](const SymFunc<Rational>& f) { return E_closed(f, 2); }),
                                           5))
                         .dump(2);
            detail = "in-process comparison (no CLI path given)";
        }
        report(8, "table outputs byte-identical across two runs", ok, detail);
    }

    auto t1 = std::chrono::steady_clock::now();
    std::printf("acceptance: %s (%d failed) in %.1fs\n", g_failures == 0 ? "PASS" : "FAIL",
                g_failures, std::chrono::duration<double>(t1 - t0).count());
    return g_failures == 0 ? 0 : 1;
}
