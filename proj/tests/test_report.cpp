#include "quadmod/report.hpp"

#include <nlohmann/json.hpp>

#include <doctest.h>

using namespace quadmod;

namespace {

const CheckResult* find_check(const std::vector<CheckResult>& checks, const std::string& id) {
    for (const auto& c : checks)
        if (c.id == id) return &c;
    return nullptr;
}

} // namespace

TEST_CASE("stratum registry arithmetic") {
    const auto& reg = stratum_registry();
    REQUIRE(reg.size() == 6);
    const long long dims[] = {17, 15, 15, 13, 13, 13};
    const long long codims[] = {0, 2, 2, 4, 4, 4};
    for (size_t i = 0; i < reg.size(); ++i) {
        CHECK(reg[i].expected_dim == dims[i]);
        CHECK(reg[i].expected_codim == codims[i]);
        CHECK(reg[i].expected_dim + reg[i].expected_codim == 17);
    }

    auto checks = stratum_report();
    for (const auto& c : checks) {
        INFO(c.id, ": ", c.computed, " vs ", c.expected);
        CHECK(c.status != CheckStatus::Fail);
        CHECK_FALSE(c.citation.empty());
    }

    const CheckResult* bn = find_check(checks, "stratum.M_2.h0.brill_noether");
    REQUIRE(bn != nullptr);
    CHECK(bn->status == CheckStatus::NotForced);
    CHECK(bn->computed == "2");
    CHECK(bn->expected == "3");
    CHECK(bn->citation.find("Brill-Noether") != std::string::npos);

    const CheckResult* forced = find_check(checks, "stratum.M_2.h0.forced");
    REQUIRE(forced != nullptr);
    CHECK(forced->status == CheckStatus::Pass);
    CHECK(forced->computed == "2");
}

TEST_CASE("verify_all passes with the documented discrepancy and nothing else open") {
    auto checks = verify_all();
    ReportSummary s = summarize(checks);
    CHECK(s.fail == 0);
    CHECK(s.pass >= 40);
    CHECK(s.not_forced == 1);
    for (const auto& c : checks) CHECK_FALSE(c.citation.empty());

    // deterministic and idempotent
    auto again = verify_all();
    CHECK(report_json(checks) == report_json(again));
    CHECK(report_exit_code(checks) == 0);
}

TEST_CASE("dropping the emptiness fact flags the wall list against the expected one") {
    ModuliTable table = ModuliTable::standard();
    REQUIRE(table.remove({2, 0, 1}, {}));
    auto checks = verify_all(table);
    const CheckResult* walls = find_check(checks, "walls.4m+2n+1");
    REQUIRE(walls != nullptr);
    CHECK(walls->status == CheckStatus::Fail);
    CHECK(walls->computed == "{2, 5, 11}");
    CHECK(walls->expected == "{5, 11}");
    CHECK(report_exit_code(checks) == 1);
}

TEST_CASE("tampering with the surface Betti numbers fails the comparison with an exponent") {
    ModuliTable table;
    for (ModuliFact f : ModuliTable::standard().entries()) {
        if (f.P == LinPoly{4, 2, 1} && f.chamber == Chamber::Infinity)
            f.desc = desc_bundle(desc_proj(11), desc_hilb(3, {1, 0, 3, 0, 1}));
        table.add(std::move(f));
    }
    auto checks = verify_all(table);
    const CheckResult* eq = find_check(checks, "poincare.moduli.equality");
    REQUIRE(eq != nullptr);
    CHECK(eq->status == CheckStatus::Fail);
    CHECK(eq->computed.find("first mismatch at exponent") != std::string::npos);
    CHECK(report_exit_code(checks) == 1);
}

TEST_CASE("report serialization carries the full schema") {
    auto checks = verify_all();
    auto doc = nlohmann::json::parse(report_json(checks));
    REQUIRE(doc.contains("checks"));
    REQUIRE(doc.contains("summary"));
    CHECK(doc["checks"].size() == checks.size());
    for (const auto& c : doc["checks"]) {
        CHECK(c.contains("id"));
        CHECK(c.contains("description"));
        CHECK(c.contains("status"));
        CHECK(c.contains("computed"));
        CHECK(c.contains("expected"));
        CHECK(c.contains("citation"));
    }
    ReportSummary s = summarize(checks);
    CHECK(doc["summary"]["pass"] == s.pass);
    CHECK(doc["summary"]["fail"] == s.fail);
    CHECK(doc["summary"]["not_forced"] == s.not_forced);

    std::string text = report_text(checks);
    CHECK(text.find("NOT_FORCED") != std::string::npos);
    CHECK(text.find("summary:") != std::string::npos);
}
