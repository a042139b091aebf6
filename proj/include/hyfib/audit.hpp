// Registry of audited claims: each printed statement bound to an
// executable checker that compares it against derived ground truth and
// produces a structured verdict.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyfib {

enum class ClaimStatus { PASS, FAIL, MISMATCH, NOT_CHECKABLE };

struct Counterexample {
    std::string input;
    std::string lhs;
    std::string rhs;
};

struct ClaimResult {
    std::string id;
    std::string anchor;
    ClaimStatus status = ClaimStatus::PASS;
    std::string range;
    std::optional<Counterexample> counterexample;  // present whenever status == FAIL
    std::optional<std::string> derived_form;       // present whenever status == MISMATCH
    std::string notes;
};

struct AuditReport {
    std::vector<ClaimResult> claims;
    int count(ClaimStatus s) const {
        int n = 0;
        for (const auto& c : claims)
            if (c.status == s) ++n;
        return n;
    }
};

enum class AuditProfile { QUICK, FULL };
enum class ReportFormat { JSON, MARKDOWN };

struct UnknownClaim : std::invalid_argument {
    explicit UnknownClaim(const std::string& id)
        : std::invalid_argument("unknown claim id: " + id) {}
};

struct UnsupportedFormat : std::invalid_argument {
    explicit UnsupportedFormat(const std::string& name)
        : std::invalid_argument("unsupported report format: " + name) {}
};

std::string to_string(ClaimStatus s);

std::vector<std::string> claim_ids();

ClaimResult run_claim(const std::string& id, AuditProfile profile = AuditProfile::FULL,
                      std::optional<long> range_override = std::nullopt);

// Every registered claim, in registry order.
AuditReport run_all(AuditProfile profile);

std::string render_report(const AuditReport& report, ReportFormat format);

}  // namespace hyfib
