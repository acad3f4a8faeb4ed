#pragma once

#include <string>
#include <vector>

#include "hilbk/symfunc.hpp"

namespace hilbk {

struct CheckResult {
    CheckResult() = default;
    explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}
    std::string name;
    long checked = 0;
    long failed = 0;
    std::string counterexample; // first failure, if any
    bool ok() const { return failed == 0; }
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    bool ok() const {
        for (const auto& c : checks)
            if (!c.ok()) return false;
        return true;
    }
    long total_checked() const {
        long t = 0;
        for (const auto& c : checks) t += c.checked;
        return t;
    }
};

/// Induced-multiplication closed form against the eigenbasis route through
/// the Hall adjoint and omega, compared after the q -> 1 limit.  Exact.
SuiteResult verify_main1(int n, int k);

/// Closed one-parameter operator against the eigenbasis oracle, its q -> 1
/// limit, and the adjoint reformulation.
SuiteResult verify_nabla(int n, int k);

/// Structure constants: two-route equality (exhaustive), neutral element,
/// commutativity, vanishing criterion, eigen-product law and associativity
/// samples for the induced products at degree n.
SuiteResult verify_product(int n, unsigned seed = 0xB1550);

/// Leibniz rule for the one-parameter operator on random products, plus the
/// per-part splitting identity on p_lambda.
SuiteResult verify_leibniz(int max_total_degree, int k, int count = 200,
                           unsigned seed = 0x5EED);

/// The z-coefficient operator: value on p_n against the closed display, and
/// the t = 1 restriction of its matrix against the eigenbasis route.
SuiteResult verify_d_operator(int n);

/// Foundation identities: adjointness, plethysm round-trips and
/// self-adjointness, the (q-1) pairing identity, h/m duality, Schur
/// orthonormality, Adams additivity, transpose symmetry, eigenvalue
/// distinctness.
SuiteResult verify_foundations(int nmax, unsigned seed = 0xF00D);

/// Plain-text report; one line per check.
std::string format_report(const SuiteResult& r);

} // namespace hilbk
