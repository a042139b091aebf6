// Fibonacci/Lucas numbers and polynomials, their hybrid spinor sequences,
// exact Binet machinery over quadratic extensions, generating-function
// numerators and the Cassini determinant.

#pragma once

#include <cstddef>
#include <functional>
#include <utility>

#include "hyfib/hyper.hpp"
#include "hyfib/poly.hpp"
#include "hyfib/quad.hpp"
#include "hyfib/rings.hpp"
#include "hyfib/series.hpp"
#include "hyfib/spinor.hpp"

namespace hyfib {

enum class SeqKind { FIB, LUCAS, FSH, LSH, FSH_POLY, LSH_POLY };

Int fib(long n);
Int lucas(long n);
Poly<Int> fib_poly(long n);
Poly<Int> lucas_poly(long n);

// F_n + F_{n+1} i + F_{n+2} e + F_{n+3} h, and the Lucas analogue
Hybrid<Int> hybrid_fib(long n);
Hybrid<Int> hybrid_lucas(long n);

HSpinor<Int> fsh(long n);
HSpinor<Int> lsh(long n);
HSpinor<Poly<Int>> fsh_poly(long n);
HSpinor<Poly<Int>> lsh_poly(long n);

// --- Binet arithmetic in Quad(Q, 5) ---

Quad<Rat> sqrt5();
Quad<Rat> golden_alpha();  // (1+sqrt5)/2
Quad<Rat> golden_beta();   // (1-sqrt5)/2

struct BinetCoeffs {
    HSpinor<Quad<Rat>> A, B;
};

HSpinor<Quad<Rat>> lift_to_quad(const HSpinor<Int>& s);

// Solve s0 = A + B, s1 = A*alpha + B*beta in the field Quad(Q, 5).
BinetCoeffs binet_coeffs(const HSpinor<Quad<Rat>>& s0, const HSpinor<Quad<Rat>>& s1,
                         const Quad<Rat>& alpha, const Quad<Rat>& beta);

// A*alpha^n + B*beta^n; every sqrt5-component must cancel, the rational
// projection is returned.
HSpinor<Rat> binet_eval(const BinetCoeffs& coeffs, long n);

// Division-free Binet check over Quad(Poly(Q), x^2+4):
//   c*s_n == (s1 - beta*s0)*alpha^n - (s1 - alpha*s0)*beta^n
// for all 0 <= n <= n_max. kind must be FSH_POLY or LSH_POLY.
bool binet_check_poly(SeqKind kind, long n_max);

// --- Generating functions ---

// Numerator N(t) = s0 + (s1 - weight*s0) t with sum s_n t^n = N / (1 - weight*t - t^2).
template <class R>
struct SpinorNumerator {
    HSpinor<R> c0, c1;
};

template <class R>
SpinorNumerator<R> generating_numerator(const HSpinor<R>& s0, const HSpinor<R>& s1,
                                        const R& weight) {
    return {s0, s1 - weight * s0};
}

// Expand N / (1 - weight*t - t^2) to order K and compare every coefficient
// against the sequence.
template <class R>
bool spinor_series_matches(const SpinorNumerator<R>& num, const R& weight, std::size_t K,
                           const std::function<HSpinor<R>(long)>& seq) {
    Series<Hyper<R>> den(K);
    den.coeff(0) = Hyper<R>(R(1));
    den.coeff(1) = -Hyper<R>(weight);
    den.coeff(2) = -Hyper<R>(R(1));
    Series<Hyper<R>> geom = series_inv(den);
    for (int comp = 0; comp < 2; ++comp) {
        Series<Hyper<R>> n(K);
        n.coeff(0) = comp == 0 ? num.c0.s1() : num.c0.s2();
        n.coeff(1) = comp == 0 ? num.c1.s1() : num.c1.s2();
        Series<Hyper<R>> expand = n * geom;
        for (std::size_t k = 0; k <= K; ++k) {
            HSpinor<R> want = seq(static_cast<long>(k));
            const Hyper<R>& got = expand.coeff(k);
            if (got != (comp == 0 ? want.s1() : want.s2())) return false;
        }
    }
    return true;
}

template <class R>
bool scalar_series_matches(const R& n0, const R& n1, const R& weight, std::size_t K,
                           const std::function<R(long)>& seq) {
    Series<R> den(K);
    den.coeff(0) = R(1);
    den.coeff(1) = -weight;
    den.coeff(2) = -R(1);
    Series<R> num(K);
    num.coeff(0) = n0;
    num.coeff(1) = n1;
    Series<R> expand = num * series_inv(den);
    for (std::size_t k = 0; k <= K; ++k)
        if (!(expand.coeff(k) == seq(static_cast<long>(k)))) return false;
    return true;
}

// True iff the derived numerator regenerates the sequence to order K.
bool genfun_series_check(SeqKind kind, std::size_t K);

// --- Q_h matrix and Cassini ---

SpinorMat<Int> qh_matrix(long n);
Hyper<Int> cassini(long n);
Int cassini_closed_form(long n);  // -F_{2n+5} + 2 F_n^2

// --- Catalogued identities, both sides evaluated exactly ---

enum class IdentityKind {
    T46_I,    // FSH_{n+2} - FSH_{n-2} = LSH_n            (n >= 2)
    T46_II,   // 5 FSH_n + LSH_n = 2 LSH_{n+1}            (n >= 2)
    T47_I,    // L_{n+1} FSH_n + L_n FSH_{n-1} = LSH_{2n} (n >= 1)
    T47_II,   // F_{n+1} FSH_n + F_n FSH_{n-1} = FSH_{2n} (n >= 1)
};

enum class PolyIdentityKind {
    T55_I,              // LSH_n(x) = FSH_{n+1}(x) + FSH_{n-1}(x)
    T55_II,             // LSH_n(x) = 2 FSH_{n+1}(x) - x FSH_n(x)
    T55_III_PRINTED,    // (x^2+4) FSH_n(x) = LSH_{n+1}(x) + (-1)^{n+1} LSH_{n-1}(x)
    T55_III_CORRECTED,  // (x^2+4) FSH_n(x) = LSH_{n+1}(x) + LSH_{n-1}(x)
};

std::pair<HSpinor<Int>, HSpinor<Int>> identity_sides(IdentityKind id, long n);
std::pair<HSpinor<Poly<Int>>, HSpinor<Poly<Int>>> poly_identity_sides(PolyIdentityKind id, long n);

}  // namespace hyfib
