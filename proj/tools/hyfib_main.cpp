// hyfib: sequence tables, hybrid calculator, spinor mapping,
// generating-function expansion and claim auditing on the command line.

#include <cstddef>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyfib/audit.hpp"
#include "hyfib/hybrid.hpp"
#include "hyfib/sequences.hpp"
#include "hyfib/spinor.hpp"

namespace {

using namespace hyfib;

constexpr std::size_t kMaxSeriesOrder = 128;

SeqKind parse_kind(const std::string& name) {
    if (name == "fib") return SeqKind::FIB;
    if (name == "lucas") return SeqKind::LUCAS;
    if (name == "fsh") return SeqKind::FSH;
    if (name == "lsh") return SeqKind::LSH;
    if (name == "fsh-poly") return SeqKind::FSH_POLY;
    if (name == "lsh-poly") return SeqKind::LSH_POLY;
    throw CLI::ValidationError("--kind", "unknown sequence kind: " + name);
}

std::string seq_term(SeqKind kind, long n, const std::optional<Rat>& at_x) {
    switch (kind) {
        case SeqKind::FIB: return render(fib(n));
        case SeqKind::LUCAS: return render(lucas(n));
        case SeqKind::FSH: return render(fsh(n));
        case SeqKind::LSH: return render(lsh(n));
        case SeqKind::FSH_POLY:
        case SeqKind::LSH_POLY: {
            HSpinor<Poly<Int>> s = kind == SeqKind::FSH_POLY ? fsh_poly(n) : lsh_poly(n);
            if (!at_x) return render(s);
            HSpinor<Rat> v = s.map<Rat>([&](const Poly<Int>& p) { return to_rat(p).eval(*at_x); });
            return render(v);
        }
    }
    return "";
}

void emit_terms(const std::vector<std::string>& terms, long from, const std::string& format) {
    if (format == "json") {
        nlohmann::json arr = terms;
        std::cout << arr.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "n,value\n";
        for (std::size_t k = 0; k < terms.size(); ++k)
            std::cout << from + static_cast<long>(k) << "," << terms[k] << "\n";
    } else {
        for (const auto& t : terms) std::cout << t << "\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"exact hybrid-number / Fibonacci-Lucas spinor toolkit"};
    app.require_subcommand(1);

    // seq
    auto* seq_cmd = app.add_subcommand("seq", "print sequence terms");
    std::string seq_kind, seq_format = "table", at_x_text;
    long seq_from = 0, seq_to = 0;
    seq_cmd->add_option("--kind", seq_kind, "fib|lucas|fsh|lsh|fsh-poly|lsh-poly")->required();
    seq_cmd->add_option("--from", seq_from, "first index")->required();
    seq_cmd->add_option("--to", seq_to, "last index")->required();
    seq_cmd->add_option("--at-x", at_x_text, "evaluate polynomial kinds at a rational point");
    seq_cmd->add_option("--format", seq_format, "table|json|csv");

    // mul
    auto* mul_cmd = app.add_subcommand("mul", "multiply two hybrid numbers");
    std::string mul_a, mul_b;
    mul_cmd->add_option("A", mul_a, "left factor")->required();
    mul_cmd->add_option("B", mul_b, "right factor")->required();

    // chi
    auto* chi_cmd = app.add_subcommand("chi", "map a hybrid number to its spinor");
    std::string chi_z;
    chi_cmd->add_option("Z", chi_z, "hybrid literal")->required();

    // genfun
    auto* gen_cmd = app.add_subcommand("genfun", "derived generating-function numerator and expansion");
    std::string gen_kind;
    long gen_order = 8;
    gen_cmd->add_option("--kind", gen_kind, "fib|lucas|fsh|lsh|fsh-poly|lsh-poly")->required();
    gen_cmd->add_option("--order", gen_order, "truncation order (max 128)");

    // binet
    auto* binet_cmd = app.add_subcommand("binet", "Binet coefficients in Q(sqrt 5)");
    std::string binet_kind;
    long binet_n = -1;
    binet_cmd->add_option("--kind", binet_kind, "fsh|lsh")->required();
    binet_cmd->add_option("--n", binet_n, "also evaluate the closed form at n");

    // audit
    auto* audit_cmd = app.add_subcommand("audit", "run the claim audit");
    std::string audit_claim, audit_profile = "full", audit_format = "md";
    bool audit_strict = false;
    audit_cmd->add_option("--claim", audit_claim, "run a single claim by id");
    audit_cmd->add_option("--profile", audit_profile, "quick|full");
    audit_cmd->add_flag("--strict", audit_strict, "exit 1 on FAIL or MISMATCH");
    audit_cmd->add_option("--format", audit_format, "json|md");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // usage problems exit 2; --help exits 0
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (seq_cmd->parsed()) {
        SeqKind kind = parse_kind(seq_kind);
        if (seq_to < seq_from) throw CLI::ValidationError("--to", "range is empty");
        std::optional<Rat> at_x;
        if (!at_x_text.empty()) {
            Hybrid<Rat> v = parse_hybrid(at_x_text);
            if (!is_zero(v.b()) || !is_zero(v.c()) || !is_zero(v.d()))
                throw CLI::ValidationError("--at-x", "expected a rational scalar");
            at_x = v.a();
        }
        std::vector<std::string> terms;
        for (long n = seq_from; n <= seq_to; ++n) terms.push_back(seq_term(kind, n, at_x));
        emit_terms(terms, seq_from, seq_format);
        return 0;
    }

    if (mul_cmd->parsed()) {
        std::cout << render(parse_hybrid(mul_a) * parse_hybrid(mul_b)) << "\n";
        return 0;
    }

    if (chi_cmd->parsed()) {
        std::cout << render(chi(parse_hybrid(chi_z))) << "\n";
        return 0;
    }

    if (gen_cmd->parsed()) {
        SeqKind kind = parse_kind(gen_kind);
        if (gen_order < 2 || static_cast<std::size_t>(gen_order) > kMaxSeriesOrder)
            throw CLI::ValidationError("--order", "order must be in 2..128");
        std::size_t K = static_cast<std::size_t>(gen_order);
        bool poly = kind == SeqKind::FSH_POLY || kind == SeqKind::LSH_POLY;
        std::string var = poly ? "t" : "x";
        if (kind == SeqKind::FIB || kind == SeqKind::LUCAS) {
            auto s = [&](long n) { return kind == SeqKind::FIB ? fib(n) : lucas(n); };
            std::cout << "numerator: "
                      << render(Poly<Int>({s(0), s(1) - s(0)}), var) << "\n";
        } else if (!poly) {
            auto s = [&](long n) { return kind == SeqKind::FSH ? fsh(n) : lsh(n); };
            auto num = generating_numerator(s(0), s(1), Int(1));
            std::cout << "numerator: [" << render(num.c0.s1()) << "+(" << render(num.c1.s1())
                      << ")" << var << "; " << render(num.c0.s2()) << "+(" << render(num.c1.s2())
                      << ")" << var << "]\n";
        } else {
            auto s = [&](long n) { return kind == SeqKind::FSH_POLY ? fsh_poly(n) : lsh_poly(n); };
            auto num = generating_numerator(s(0), s(1), Poly<Int>::x());
            std::cout << "numerator: [" << render(num.c0.s1()) << "+(" << render(num.c1.s1())
                      << ")" << var << "; " << render(num.c0.s2()) << "+(" << render(num.c1.s2())
                      << ")" << var << "]\n";
        }
        if (!genfun_series_check(kind, K)) {
            std::cerr << "internal error: numerator does not regenerate the sequence\n";
            return 1;
        }
        for (long n = 0; n <= static_cast<long>(K); ++n)
            std::cout << n << ": " << seq_term(kind, n, std::nullopt) << "\n";
        return 0;
    }

    if (binet_cmd->parsed()) {
        if (binet_kind != "fsh" && binet_kind != "lsh")
            throw CLI::ValidationError("--kind", "expected fsh or lsh");
        bool is_fsh = binet_kind == "fsh";
        auto s = [&](long n) { return is_fsh ? fsh(n) : lsh(n); };
        BinetCoeffs coeffs =
            binet_coeffs(lift_to_quad(s(0)), lift_to_quad(s(1)), golden_alpha(), golden_beta());
        std::cout << "A = " << render(coeffs.A) << "\n";
        std::cout << "B = " << render(coeffs.B) << "\n";
        std::cout << "(c denotes sqrt(5); alpha=(1+c)/2, beta=(1-c)/2)\n";
        if (binet_n >= 0)
            std::cout << "n=" << binet_n << ": " << render(binet_eval(coeffs, binet_n)) << "\n";
        return 0;
    }

    // audit
    if (audit_profile != "quick" && audit_profile != "full")
        throw CLI::ValidationError("--profile", "expected quick or full");
    AuditProfile profile = audit_profile == "quick" ? AuditProfile::QUICK : AuditProfile::FULL;
    ReportFormat format;
    if (audit_format == "json")
        format = ReportFormat::JSON;
    else if (audit_format == "md")
        format = ReportFormat::MARKDOWN;
    else
        throw UnsupportedFormat(audit_format);
    AuditReport report;
    if (!audit_claim.empty())
        report.claims.push_back(run_claim(audit_claim, profile));
    else
        report = run_all(profile);
    std::cout << render_report(report, format);
    if (format == ReportFormat::JSON) std::cout << "\n";
    if (audit_strict &&
        (report.count(ClaimStatus::FAIL) > 0 || report.count(ClaimStatus::MISMATCH) > 0))
        return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const hyfib::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const hyfib::UnknownClaim& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const hyfib::UnsupportedFormat& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
