#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hyfib/hyper.hpp"
#include "hyfib/poly.hpp"
#include "hyfib/quad.hpp"
#include "hyfib/rings.hpp"
#include "hyfib/series.hpp"

using namespace hyfib;

TEST_CASE("integer and rational scalars") {
    CHECK(exact_halve(Int(10)) == 4 + 1);
    CHECK(exact_halve(Int(-6)) == -3);
    CHECK_THROWS_AS(exact_halve(Int(7)), NonHalvable);
    CHECK(exact_halve(Rat(7)) == make_rat(7, 2));
    CHECK(make_rat(4, 6) == make_rat(2, 3));
    CHECK(render(make_rat(-4, 6)) == "-2/3");
    CHECK(is_one(Int(1)));
    CHECK(is_zero(Rat(0)));
    CHECK(to_rat(Int(3)) == Rat(3));
}

TEST_CASE("polynomial canonical form and arithmetic") {
    Poly<Int> p({1, 0, -2});   // -2x^2 + 1
    Poly<Int> q({0, 3});       // 3x
    CHECK(p.degree() == 2);
    CHECK(Poly<Int>({1, 2, 0, 0}).degree() == 1);  // trailing zeros trimmed
    CHECK(Poly<Int>().degree() == -1);
    CHECK(render(p) == "-2x^2+1");
    CHECK(render(p * q) == "-6x^3+3x");
    CHECK(render(Poly<Int>(), "t") == "0");
    CHECK(render(Poly<Int>::x(), "t") == "t");
    CHECK(p - p == Poly<Int>());
    CHECK((p + q).eval(Int(5)) == p.eval(Int(5)) + q.eval(Int(5)));
    CHECK(exact_halve(Poly<Int>({2, -4})) == Poly<Int>({1, -2}));
    CHECK_THROWS_AS(exact_halve(Poly<Int>({1, 2})), NonHalvable);
    CHECK(to_rat(p).eval(make_rat(1, 2)) == make_rat(1, 2));
}

TEST_CASE("polynomial multiplication agrees with pointwise evaluation") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> deg(0, 6);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Int> a(deg(rng) + 1), b(deg(rng) + 1);
        for (auto& v : a) v = coeff(rng);
        for (auto& v : b) v = coeff(rng);
        Poly<Int> p(a), q(b);
        Poly<Int> prod = p * q;
        for (int at = -3; at <= 3; ++at)
            CHECK(prod.eval(Int(at)) == p.eval(Int(at)) * q.eval(Int(at)));
        CHECK(p * q == q * p);
        CHECK(p * (q + prod) == p * q + p * prod);
    }
}

TEST_CASE("quadratic extension with D=5 hosts the golden roots") {
    Rat five(5);
    Quad<Rat> c = Quad<Rat>::root(five);
    Quad<Rat> alpha(make_rat(1, 2), make_rat(1, 2), five);
    Quad<Rat> beta = alpha.conj();
    CHECK(c * c == Quad<Rat>::scalar(five, five));
    CHECK(alpha + beta == Quad<Rat>::scalar(Rat(1), five));
    CHECK(alpha - beta == c);
    CHECK(alpha * beta == Quad<Rat>::scalar(Rat(-1), five));
    CHECK(alpha.norm() == Rat(-1));
    CHECK(alpha * inv(alpha) == Quad<Rat>::scalar(Rat(1), five));
    CHECK(inv(alpha) == -beta);
    CHECK(alpha.pow(3) == alpha * alpha * alpha);
    CHECK(render(alpha) == "1/2+1/2c");
    CHECK(render(-c) == "-c");
    CHECK_THROWS_AS(inv(Quad<Rat>::scalar(Rat(0), five)), NotInvertible);
}

TEST_CASE("quadratic extension over polynomials, D=x^2+4") {
    using P = Poly<Rat>;
    P d({4, 0, 1});
    P x = P::x();
    P half({make_rat(1, 2)});
    Quad<P> alpha(half * x, half, d);  // (x + c)/2
    Quad<P> beta = alpha.conj();
    CHECK(alpha + beta == Quad<P>::scalar(x, d));
    CHECK(alpha * beta == Quad<P>::scalar(P({Rat(-1)}), d));
    CHECK((alpha - beta) * (alpha - beta) == Quad<P>::scalar(d, d));
    CHECK(render(alpha, "c") == "1/2x+1/2c");
}

TEST_CASE("hyperbolic units") {
    Hyper<Int> h = Hyper<Int>::h_unit();
    CHECK(h * h == Hyper<Int>(1));
    Hyper<Int> a(2, 3), b(-1, 4);
    CHECK(a * b == Hyper<Int>(2 * -1 + 3 * 4, 2 * 4 + -1 * 3));
    CHECK(a * b == b * a);
    CHECK(a.conj() == Hyper<Int>(2, -3));
    CHECK((a * a.conj()) == Hyper<Int>(4 - 9, 0));
    CHECK(render(a) == "2+3h");
    CHECK(render(Hyper<Int>(0, -1)) == "-h");
    CHECK(render(Hyper<Int>(-5, 1)) == "-5+h");
    CHECK(render(Hyper<Poly<Int>>(Poly<Int>({0, 1}), Poly<Int>({1, 0, 1}))) ==
          "x+h(x^2+1)");
    CHECK(render(Hyper<Poly<Int>>(Poly<Int>({-1, 1}), Poly<Int>({0, 1}))) == "(x-1)+hx");
}

TEST_CASE("series inversion against known expansions") {
    const std::size_t K = 16;

    // 1/(1-t) = 1 + t + t^2 + ...
    Series<Int> one_minus_t(K);
    one_minus_t.coeff(0) = 1;
    one_minus_t.coeff(1) = -1;
    Series<Int> geom = series_inv(one_minus_t);
    for (std::size_t k = 0; k <= K; ++k) CHECK(geom.coeff(k) == 1);

    // 1/(1-t-t^2) has the Fibonacci numbers 1,1,2,3,5,... as coefficients
    Series<Int> fib_den(K);
    fib_den.coeff(0) = 1;
    fib_den.coeff(1) = -1;
    fib_den.coeff(2) = -1;
    Series<Int> fib_series = series_inv(fib_den);
    Int f0 = 1, f1 = 1;
    for (std::size_t k = 0; k <= K; ++k) {
        CHECK(fib_series.coeff(k) == f0);
        Int next = f0 + f1;
        f0 = f1;
        f1 = next;
    }

    CHECK(series_inv(geom) == one_minus_t);
    Series<Int> product = fib_den * fib_series;
    CHECK(product.coeff(0) == 1);
    for (std::size_t k = 1; k <= K; ++k) CHECK(product.coeff(k) == 0);

    Series<Int> neg(K);
    neg.coeff(0) = -1;
    neg.coeff(1) = 2;
    Series<Int> neg_inv = series_inv(neg);
    CHECK(neg_inv.coeff(0) == -1);
    CHECK((neg * neg_inv).coeff(3) == 0);

    Series<Int> bad(K);
    bad.coeff(0) = 2;
    CHECK_THROWS_AS(series_inv(bad), NonUnitConstantTerm);
}
