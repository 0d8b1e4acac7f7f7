#include "doctest.h"

#include "uqf4/straightening.hpp"
#include "uqf4/suites.hpp"

#include <set>

using namespace uqf4;

namespace {

SuiteContext desk_context() {
    static std::shared_ptr<GenericTable> t = build_straightening_table();
    SuiteContext ctx;
    ctx.table = t;
    ctx.spec = SpecParams{5, 1, 2};
    return ctx;
}

}  // namespace

TEST_CASE("suite registry") {
    CHECK(suite_names().size() == 16);
    CHECK(suite_names().front() == "rootdata");
    CHECK(suite_needs_spec("ribbon"));
    CHECK_FALSE(suite_needs_spec("golden"));
    SuiteContext ctx = desk_context();
    CHECK_THROWS_AS(run_suite("nonsense", ctx), std::invalid_argument);
    ctx.spec.reset();
    CHECK_THROWS_AS(run_suite("double", ctx), std::invalid_argument);
    ctx.spec = SpecParams{9, 1, 4};
    CHECK_THROWS(run_suite("double", ctx));
    SuiteContext bare;
    CHECK(run_suite("rootdata", bare).failed() == 0);
    CHECK_THROWS_AS(run_suite("golden", bare), std::invalid_argument);
}

TEST_CASE("records are unique and prefixed by their suite") {
    SuiteContext ctx = desk_context();
    for (const char* name : {"rootdata", "serre", "lemma31", "pairing", "double", "ribbon"}) {
        SuiteResult r = run_suite(name, ctx);
        CHECK(r.suite == name);
        std::set<std::string> ids;
        for (const auto& rec : r.records) {
            CHECK(rec.check_id.rfind(std::string(name) + ".", 0) == 0);
            CHECK(ids.insert(rec.check_id).second);
            CHECK_FALSE(rec.ref.empty());
        }
        CHECK(r.failed() == 0);
        CHECK(r.passed() > 0);
    }
}

TEST_CASE("known discrepancies are flagged and nothing else fails") {
    SuiteContext ctx = desk_context();
    SuiteResult golden = run_suite("golden", ctx);
    CHECK(golden.failed() == 4);
    for (const auto& r : golden.records)
        if (r.status == CheckStatus::fail) CHECK(r.known);
    SuiteResult iso = run_suite("iso", ctx);
    CHECK(iso.failed() == 6);
    for (const auto& r : iso.records) {
        if (r.status == CheckStatus::fail) CHECK(r.known);
        if (r.check_id == "iso.same.zeta=1.relations" || r.check_id == "iso.swapped.zeta=1.inverse-group.coproduct")
            CHECK(r.status == CheckStatus::pass);
    }
}

TEST_CASE("height bound and extended flag") {
    SuiteContext ctx = desk_context();
    ctx.max_height = 3;
    SuiteResult c = run_suite("centrality", ctx);
    CHECK(c.skipped() > 0);
    CHECK(c.failed() == 0);
    ctx.extended = true;
    CHECK(run_suite("centrality", ctx).skipped() == 0);
    SuiteContext seven = desk_context();
    seven.spec = SpecParams{7, 1, 3};
    SuiteResult ribbon = run_suite("ribbon", seven);
    CHECK(ribbon.skipped() == 1);
    CHECK(ribbon.passed() == 0);
}
