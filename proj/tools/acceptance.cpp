// Prints one line per acceptance criterion.  Exit status 0 iff every criterion has its expected
// outcome; criteria that reproduce documented discrepancies are expected to fail.
#include "uqf4/straightening.hpp"
#include "uqf4/suites.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

using namespace uqf4;

namespace {

struct Outcome {
    int checks = 0;
    int failed = 0;
    int unknown_failures = 0;  // failures not flagged as known discrepancies
    std::string first_failure;
};

void absorb(Outcome& o, const SuiteResult& s, const std::function<bool(const CheckRecord&)>& keep = {}) {
    for (const auto& r : s.records) {
        if (keep && !keep(r)) continue;
        if (r.status == CheckStatus::skipped) continue;
        ++o.checks;
        if (r.status == CheckStatus::fail) {
            ++o.failed;
            if (!r.known) ++o.unknown_failures;
            if (o.first_failure.empty()) o.first_failure = r.check_id;
        }
    }
}

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

struct Criterion {
    int number;
    std::string title;
    bool expect_known_failure;
    double budget_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    SuiteContext ctx;
    ctx.spec = SpecParams{5, 1, 2};
    ctx.max_height = 6;

    double build_seconds = 0;
    BuildReport build;
    auto suite = [&](const std::string& name) { return run_suite(name, ctx); };

    const std::vector<Criterion> criteria{
        {1, "root data invariants", false, 1,
         [&] {
             Outcome o;
             absorb(o, suite("rootdata"));
             return o;
         }},
        {2, "straightening table: 276 rules, windows, adjacent corrections zero", false, 600,
         [&] {
             auto t0 = std::chrono::steady_clock::now();
             ctx.table = build_straightening_table(&build);
             build_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
             Outcome o;
             ++o.checks;
             if (build.records.size() != 276) ++o.failed, ++o.unknown_failures, o.first_failure = "build records";
             absorb(o, suite("associativity"), [](const CheckRecord& r) { return starts_with(r.check_id, "associativity.table."); });
             return o;
         }},
        {3, "reference commutation identities and alternative Lyndon factorizations", true, 300,
         [&] {
             Outcome o;
             absorb(o, suite("golden"));
             absorb(o, suite("lemma31"));
             return o;
         }},
        {4, "associativity on all 2024 triples", false, 900,
         [&] {
             Outcome o;
             absorb(o, suite("associativity"), [](const CheckRecord& r) { return starts_with(r.check_id, "associativity.triples"); });
             return o;
         }},
        {5, "oracle: dimensions and rules up to height 6", false, 600,
         [&] {
             Outcome o;
             absorb(o, suite("oracle"));
             return o;
         }},
        {6, "nilpotency of the q-adjoint action within cap 12", false, 600,
         [&] {
             Outcome o;
             absorb(o, suite("nilpotency"));
             return o;
         }},
        {7, "defining relations, tau exchange, adjoint Serre relations", false, 60,
         [&] {
             Outcome o;
             absorb(o, suite("serre"));
             return o;
         }},
        {8, "centrality of ell-th powers at (5,1,2), height <= 6", false, 1800,
         [&] {
             Outcome o;
             absorb(o, suite("centrality"));
             return o;
         }},
        {9, "Hopf axioms and power coproduct collapses", false, 600,
         [&] {
             Outcome o;
             absorb(o, suite("hopf-axioms"));
             absorb(o, suite("hopf-ideal"), [](const CheckRecord& r) { return !starts_with(r.check_id, "hopf-ideal.quotient"); });
             return o;
         }},
        {10, "skew pairing: generator values, antipode symmetry, Serre vanishing", false, 300,
         [&] {
             Outcome o;
             absorb(o, suite("pairing"));
             return o;
         }},
        {11, "integrals at ell = 5", false, 3600,
         [&] {
             Outcome o;
             absorb(o, suite("integrals"));
             absorb(o, suite("distinguished"));
             return o;
         }},
        {12, "ribbon conditions and double solvability at ell = 5", false, 60,
         [&] {
             Outcome o;
             absorb(o, suite("ribbon"));
             absorb(o, suite("double"));
             return o;
         }},
        {13, "isomorphisms for zeta = +-1, same and swapped parameters", true, 300,
         [&] {
             Outcome o;
             absorb(o, suite("iso"));
             return o;
         }},
        {14, "desk-scale replacements for the full dimension count and high-root coproducts", false, 600,
         [&] {
             Outcome o;
             absorb(o, suite("hopf-ideal"), [](const CheckRecord& r) {
                 return starts_with(r.check_id, "hopf-ideal.quotient") || starts_with(r.check_id, "hopf-ideal.power");
             });
             return o;
         }},
    };

    bool all_as_expected = true;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        std::string error;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            error = e.what();
            o.failed = o.unknown_failures = 1;
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool pass = o.failed == 0 && o.checks > 0;
        const bool over_budget = secs > c.budget_seconds;
        std::string status;
        bool expected;
        if (pass) {
            status = "PASS";
            expected = !c.expect_known_failure;
        } else if (o.unknown_failures == 0 && c.expect_known_failure) {
            status = "FAIL (known)";
            expected = true;
        } else {
            status = "FAIL";
            expected = false;
        }
        expected = expected && !over_budget;
        all_as_expected = all_as_expected && expected;
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2f s", secs);
        std::cout << "criterion " << c.number << ": " << status << "  " << c.title << "  [" << o.checks << " checks, "
                  << o.failed << " failed, " << timing << "]";
        if (!o.first_failure.empty()) std::cout << " first failure: " << o.first_failure;
        if (!error.empty()) std::cout << " error: " << error;
        if (over_budget) std::cout << " over time budget";
        if (!expected) std::cout << " UNEXPECTED";
        std::cout << "\n";
        if (c.number == 14)
            std::cout << "  not reproduced at desk scale: enumeration of all ell^56 basis monomials; the coproduct of\n"
                         "  E_beta^ell for roots of height > 2; integrals of the dual Borel part\n";
    }
    std::cout << "table build: " << build_seconds << " s\n";
    std::cout << (all_as_expected ? "all criteria have their expected outcome\n" : "UNEXPECTED outcomes present\n");
    return all_as_expected ? 0 : 1;
}
