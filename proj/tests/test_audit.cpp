#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyfib/audit.hpp"

using namespace hyfib;

namespace {

const std::map<std::string, ClaimStatus>& expected_verdicts() {
    static const std::map<std::string, ClaimStatus> table = {
        {"C00", ClaimStatus::PASS},           {"C01", ClaimStatus::FAIL},
        {"C02", ClaimStatus::PASS},           {"C03a", ClaimStatus::PASS},
        {"C03b", ClaimStatus::MISMATCH},      {"C04", ClaimStatus::MISMATCH},
        {"C05", ClaimStatus::PASS},           {"C06", ClaimStatus::MISMATCH},
        {"C07", ClaimStatus::MISMATCH},       {"C08", ClaimStatus::PASS},
        {"C09", ClaimStatus::PASS},           {"C-SEED", ClaimStatus::MISMATCH},
        {"C10", ClaimStatus::FAIL},           {"C11", ClaimStatus::MISMATCH},
        {"C12", ClaimStatus::MISMATCH},       {"C13", ClaimStatus::NOT_CHECKABLE},
        {"C14", ClaimStatus::MISMATCH},       {"C15a", ClaimStatus::PASS},
        {"C15b", ClaimStatus::PASS},          {"C15c", ClaimStatus::FAIL},
    };
    return table;
}

}  // namespace

TEST_CASE("registry lists every claim once, in document order") {
    std::vector<std::string> ids = claim_ids();
    std::vector<std::string> want = {"C00",  "C01", "C02", "C03a", "C03b", "C04", "C05",
                                     "C06",  "C07", "C08", "C09",  "C-SEED", "C10", "C11",
                                     "C12",  "C13", "C14", "C15a", "C15b", "C15c"};
    CHECK(ids == want);
    CHECK(expected_verdicts().size() == ids.size());
}

TEST_CASE("every verdict matches the derived expectation") {
    AuditReport report = run_all(AuditProfile::FULL);
    REQUIRE(report.claims.size() == expected_verdicts().size());
    for (const auto& claim : report.claims) {
        INFO("claim " << claim.id);
        CHECK(claim.status == expected_verdicts().at(claim.id));
        CHECK_FALSE(claim.anchor.empty());
        CHECK_FALSE(claim.range.empty());
        // structural invariants of the result record
        if (claim.status == ClaimStatus::FAIL) CHECK(claim.counterexample.has_value());
        if (claim.status == ClaimStatus::PASS) CHECK_FALSE(claim.counterexample.has_value());
        if (claim.status == ClaimStatus::MISMATCH) CHECK(claim.derived_form.has_value());
    }
    CHECK(report.count(ClaimStatus::PASS) == 8);
    CHECK(report.count(ClaimStatus::FAIL) == 3);
    CHECK(report.count(ClaimStatus::MISMATCH) == 8);
    CHECK(report.count(ClaimStatus::NOT_CHECKABLE) == 1);
}

TEST_CASE("quick profile reaches the same verdicts") {
    AuditReport report = run_all(AuditProfile::QUICK);
    REQUIRE(report.claims.size() == expected_verdicts().size());
    for (const auto& claim : report.claims)
        CHECK(claim.status == expected_verdicts().at(claim.id));
}

TEST_CASE("single-claim runs and error handling") {
    ClaimResult c05 = run_claim("C05");
    CHECK(c05.status == ClaimStatus::PASS);
    CHECK(c05.range == "1..50");
    ClaimResult c01 = run_claim("C01", AuditProfile::QUICK);
    REQUIRE(c01.counterexample.has_value());
    CHECK(c01.counterexample->lhs == "[1; 0]");
    CHECK(c01.counterexample->rhs == "[-h; 0]");
    CHECK_THROWS_AS(run_claim("C99"), UnknownClaim);
    CHECK_THROWS_AS(run_claim(""), UnknownClaim);
}

TEST_CASE("JSON report shape") {
    CHECK(render_report(AuditReport{}, ReportFormat::JSON) ==
          R"({"claims":[],"summary":{"pass":0,"fail":0,"mismatch":0,"not_checkable":0}})");

    AuditReport report;
    report.claims.push_back(run_claim("C05"));
    report.claims.push_back(run_claim("C01", AuditProfile::QUICK));
    std::string text = render_report(report, ReportFormat::JSON);
    nlohmann::json parsed = nlohmann::json::parse(text);
    REQUIRE(parsed.at("claims").size() == 2);
    CHECK(parsed["claims"][0]["id"] == "C05");
    CHECK(parsed["claims"][0]["status"] == "pass");
    CHECK_FALSE(parsed["claims"][0].contains("counterexample"));
    CHECK(parsed["claims"][1]["status"] == "fail");
    CHECK(parsed["claims"][1]["counterexample"]["lhs"] == "[1; 0]");
    CHECK(parsed["summary"]["pass"] == 1);
    CHECK(parsed["summary"]["fail"] == 1);
}

TEST_CASE("markdown report shape") {
    AuditReport report;
    report.claims.push_back(run_claim("C05"));
    std::string text = render_report(report, ReportFormat::MARKDOWN);
    CHECK(text.find("| id | status | range | details |") != std::string::npos);
    CHECK(text.find("| C05 | PASS | 1..50 |") != std::string::npos);
}

TEST_CASE("reports are deterministic") {
    AuditReport first = run_all(AuditProfile::QUICK);
    AuditReport second = run_all(AuditProfile::QUICK);
    CHECK(render_report(first, ReportFormat::JSON) == render_report(second, ReportFormat::JSON));
    CHECK(render_report(first, ReportFormat::MARKDOWN) ==
          render_report(second, ReportFormat::MARKDOWN));
}

TEST_CASE("status names") {
    CHECK(to_string(ClaimStatus::PASS) == "PASS");
    CHECK(to_string(ClaimStatus::FAIL) == "FAIL");
    CHECK(to_string(ClaimStatus::MISMATCH) == "MISMATCH");
    CHECK(to_string(ClaimStatus::NOT_CHECKABLE) == "NOT_CHECKABLE");
}
