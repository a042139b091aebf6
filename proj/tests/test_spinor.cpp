#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <random>
#include <vector>

#include "hyfib/hybrid.hpp"
#include "hyfib/sequences.hpp"
#include "hyfib/spinor.hpp"

using namespace hyfib;

namespace {

std::vector<Hybrid<Int>> sample_hybrids(std::size_t count, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coeff(-15, 15);
    std::vector<Hybrid<Int>> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        Int a = coeff(rng), b = coeff(rng), c = coeff(rng), d = coeff(rng);
        out.emplace_back(a, b, c, d);
    }
    return out;
}

std::array<Hybrid<Int>, 4> basis() {
    return {Hybrid<Int>::real(Int(1)), Hybrid<Int>::i_unit(), Hybrid<Int>::e_unit(),
            Hybrid<Int>::h_unit()};
}

HSpinor<Int> spinor(long u1, long v1, long u2, long v2) {
    return HSpinor<Int>(Hyper<Int>(u1, v1), Hyper<Int>(u2, v2));
}

}  // namespace

TEST_CASE("chi on literals") {
    CHECK(render(chi(parse_hybrid("1+2i+3e+4h"))) == "[1+3h; 1+4h]");
    CHECK(chi(Hybrid<Int>::real(Int(1))) == spinor(1, 0, 0, 0));
    CHECK(chi(Hybrid<Int>::i_unit()) == spinor(0, 0, -1, 0));
    CHECK(chi(Hybrid<Int>::e_unit()) == spinor(0, 1, 1, 0));
    CHECK(chi(Hybrid<Int>::h_unit()) == spinor(0, 0, 0, 1));
    CHECK(chi(hybrid_fib(0)) == fsh(0));
    CHECK(render(fsh(0)) == "[h; 2h]");
}

TEST_CASE("conjugation operators") {
    HSpinor<Int> one = spinor(1, 0, 0, 0);
    CHECK(spinor_tilde(one) == spinor(0, 1, 0, 0));   // [h; 0]
    CHECK(spinor_mate(one) == spinor(-1, 0, 0, 0));   // [-1; 0]

    HSpinor<Int> fsh0 = fsh(0);
    CHECK(spinor_star(fsh0) == spinor(0, -1, 0, -2));
    CHECK(spinor_mate(fsh0) == spinor(0, 1, 0, -2));   // [h; -2h]
    CHECK(spinor_tilde(fsh0) == spinor(-1, 0, 2, 0));  // [-1; 2]
    CHECK(spinor_bar(hybrid_fib(0)) == chi(hybrid_fib(0).conj()));

    // h * tilde = -mate on arbitrary spinors
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (int trial = 0; trial < 100; ++trial) {
        HSpinor<Int> s = spinor(coeff(rng), coeff(rng), coeff(rng), coeff(rng));
        CHECK(Hyper<Int>::h_unit() * spinor_tilde(s) == -spinor_mate(s));
        CHECK(spinor_star(spinor_star(s)) == s);
    }
}

TEST_CASE("conjugate sums of the Fibonacci spinors") {
    for (long n = 0; n <= 64; ++n) {
        Int fn = fib(n);
        HSpinor<Int> s = fsh(n);
        CHECK(s + spinor_bar(hybrid_fib(n)) ==
              HSpinor<Int>(Hyper<Int>(fn + fn, 0), Hyper<Int>(0, 0)));
        CHECK(s + spinor_star(s) == HSpinor<Int>(Hyper<Int>(fn + fn, 0), Hyper<Int>(fn + fn, 0)));
        CHECK(s + spinor_mate(s) ==
              HSpinor<Int>(Hyper<Int>(0, fib(n + 2) + fib(n + 2)), Hyper<Int>(fn + fn, 0)));
        CHECK(Hyper<Int>::h_unit() * spinor_tilde(s) == -spinor_mate(s));
    }
}

TEST_CASE("left multiplication as a spinor matrix") {
    for (const auto& p : basis())
        for (const auto& q : basis()) {
            auto report = audit_product_correspondence(p, q);
            CHECK(report.left_regular_ok);
            CHECK(report.truth == mat_apply(qhat(p), chi(q)));
        }

    auto zs = sample_hybrids(2000, 424242);
    for (std::size_t k = 0; k + 1 < zs.size(); k += 2) {
        auto report = audit_product_correspondence(zs[k], zs[k + 1]);
        CHECK(report.left_regular_ok);
    }

    // Qhat respects products outright
    for (std::size_t k = 0; k + 1 < zs.size(); k += 2)
        CHECK(qhat(zs[k] * zs[k + 1]) == qhat(zs[k]) * qhat(zs[k + 1]));
}

TEST_CASE("the -hQH composition is not the product map") {
    Hybrid<Int> one = Hybrid<Int>::real(Int(1));
    auto report = audit_product_correspondence(one, one);
    CHECK(report.left_regular_ok);
    CHECK_FALSE(report.printed_ok);
    CHECK(render(report.truth) == "[1; 0]");
    CHECK(render(report.printed) == "[-h; 0]");
}

TEST_CASE("determinant of qhat matches the matrix representation") {
    auto zs = sample_hybrids(100, 808);
    for (const auto& z : zs) {
        Hyper<Int> det = qhat(z).det();
        CHECK(det.hpart() == 0);
        CHECK(det.real() == hybrid_to_matrix(z).det());
    }
}
