#include "hyfib/sequences.hpp"

#include <mutex>
#include <vector>

namespace hyfib {

namespace {

std::mutex memo_mutex;

const Int& fib_memo(long n) {
    static std::vector<Int> cache{0, 1};
    while (static_cast<long>(cache.size()) <= n)
        cache.push_back(cache[cache.size() - 1] + cache[cache.size() - 2]);
    return cache[static_cast<std::size_t>(n)];
}

const Int& lucas_memo(long n) {
    static std::vector<Int> cache{2, 1};
    while (static_cast<long>(cache.size()) <= n)
        cache.push_back(cache[cache.size() - 1] + cache[cache.size() - 2]);
    return cache[static_cast<std::size_t>(n)];
}

const Poly<Int>& fib_poly_memo(long n) {
    static std::vector<Poly<Int>> cache{Poly<Int>(), Poly<Int>(Int(1))};
    const Poly<Int> x = Poly<Int>::x();
    while (static_cast<long>(cache.size()) <= n)
        cache.push_back(x * cache[cache.size() - 1] + cache[cache.size() - 2]);
    return cache[static_cast<std::size_t>(n)];
}

// L_0(x) = 2, L_1(x) = x
const Poly<Int>& lucas_poly_memo(long n) {
    static std::vector<Poly<Int>> cache{Poly<Int>(Int(2)), Poly<Int>::x()};
    const Poly<Int> x = Poly<Int>::x();
    while (static_cast<long>(cache.size()) <= n)
        cache.push_back(x * cache[cache.size() - 1] + cache[cache.size() - 2]);
    return cache[static_cast<std::size_t>(n)];
}

void require_index(long n, long min, const char* what) {
    if (n < min) throw NegativeIndex(std::string(what) + " needs n >= " + std::to_string(min));
}

}  // namespace

Int fib(long n) {
    require_index(n, 0, "fib");
    std::lock_guard<std::mutex> lock(memo_mutex);
    return fib_memo(n);
}

Int lucas(long n) {
    require_index(n, 0, "lucas");
    std::lock_guard<std::mutex> lock(memo_mutex);
    return lucas_memo(n);
}

Poly<Int> fib_poly(long n) {
    require_index(n, 0, "fib_poly");
    std::lock_guard<std::mutex> lock(memo_mutex);
    return fib_poly_memo(n);
}

Poly<Int> lucas_poly(long n) {
    require_index(n, 0, "lucas_poly");
    std::lock_guard<std::mutex> lock(memo_mutex);
    return lucas_poly_memo(n);
}

Hybrid<Int> hybrid_fib(long n) {
    require_index(n, 0, "hybrid_fib");
    std::lock_guard<std::mutex> lock(memo_mutex);
    return Hybrid<Int>(fib_memo(n), fib_memo(n + 1), fib_memo(n + 2), fib_memo(n + 3));
}

Hybrid<Int> hybrid_lucas(long n) {
    require_index(n, 0, "hybrid_lucas");
    std::lock_guard<std::mutex> lock(memo_mutex);
    return Hybrid<Int>(lucas_memo(n), lucas_memo(n + 1), lucas_memo(n + 2), lucas_memo(n + 3));
}

HSpinor<Int> fsh(long n) { return chi(hybrid_fib(n)); }
HSpinor<Int> lsh(long n) { return chi(hybrid_lucas(n)); }

HSpinor<Poly<Int>> fsh_poly(long n) {
    require_index(n, 0, "fsh_poly");
    std::lock_guard<std::mutex> lock(memo_mutex);
    return chi(Hybrid<Poly<Int>>(fib_poly_memo(n), fib_poly_memo(n + 1),
                                 fib_poly_memo(n + 2), fib_poly_memo(n + 3)));
}

HSpinor<Poly<Int>> lsh_poly(long n) {
    require_index(n, 0, "lsh_poly");
    std::lock_guard<std::mutex> lock(memo_mutex);
    return chi(Hybrid<Poly<Int>>(lucas_poly_memo(n), lucas_poly_memo(n + 1),
                                 lucas_poly_memo(n + 2), lucas_poly_memo(n + 3)));
}

Quad<Rat> sqrt5() { return Quad<Rat>::root(Rat(5)); }
Quad<Rat> golden_alpha() { return Quad<Rat>(make_rat(1, 2), make_rat(1, 2), Rat(5)); }
Quad<Rat> golden_beta() { return Quad<Rat>(make_rat(1, 2), make_rat(-1, 2), Rat(5)); }

HSpinor<Quad<Rat>> lift_to_quad(const HSpinor<Int>& s) {
    return s.map<Quad<Rat>>([](const Int& v) { return Quad<Rat>::scalar(Rat(v), Rat(5)); });
}

BinetCoeffs binet_coeffs(const HSpinor<Quad<Rat>>& s0, const HSpinor<Quad<Rat>>& s1,
                         const Quad<Rat>& alpha, const Quad<Rat>& beta) {
    Quad<Rat> inv_c = inv(alpha - beta);
    HSpinor<Quad<Rat>> a = inv_c * (s1 - beta * s0);
    HSpinor<Quad<Rat>> b = inv_c * (alpha * s0 - s1);
    return {a, b};
}

HSpinor<Rat> binet_eval(const BinetCoeffs& coeffs, long n) {
    require_index(n, 0, "binet_eval");
    Quad<Rat> an = golden_alpha().pow(n);
    Quad<Rat> bn = golden_beta().pow(n);
    HSpinor<Quad<Rat>> v = an * coeffs.A + bn * coeffs.B;
    return v.map<Rat>([](const Quad<Rat>& q) {
        if (!is_zero(q.y())) throw ResidualIrrational();
        return q.x();
    });
}

bool binet_check_poly(SeqKind kind, long n_max) {
    using PQ = Poly<Rat>;
    using QP = Quad<PQ>;
    const PQ x = PQ::x();
    const PQ d = x * x + PQ(Rat(4));
    const QP alpha(exact_halve(x), PQ(make_rat(1, 2)), d);
    const QP beta(exact_halve(x), PQ(make_rat(-1, 2)), d);
    const QP c = alpha - beta;

    auto lift = [&](long n) {
        HSpinor<Poly<Int>> s = kind == SeqKind::FSH_POLY ? fsh_poly(n) : lsh_poly(n);
        return s.map<QP>([&](const Poly<Int>& p) { return QP(to_rat(p), PQ(), d); });
    };

    HSpinor<QP> s0 = lift(0);
    HSpinor<QP> s1 = lift(1);
    HSpinor<QP> ca = s1 - beta * s0;   // c * A
    HSpinor<QP> cb = s1 - alpha * s0;  // c * (-B), i.e. subtracted below
    for (long n = 0; n <= n_max; ++n) {
        QP an = alpha.pow(n);
        QP bn = beta.pow(n);
        HSpinor<QP> rhs = an * ca - bn * cb;
        HSpinor<QP> lhs = c * lift(n);
        if (lhs != rhs) return false;
    }
    return true;
}

bool genfun_series_check(SeqKind kind, std::size_t K) {
    switch (kind) {
        case SeqKind::FIB:
            return scalar_series_matches<Int>(fib(0), fib(1) - fib(0), Int(1), K,
                                              [](long n) { return fib(n); });
        case SeqKind::LUCAS:
            return scalar_series_matches<Int>(lucas(0), lucas(1) - lucas(0), Int(1), K,
                                              [](long n) { return lucas(n); });
        case SeqKind::FSH: {
            auto num = generating_numerator(fsh(0), fsh(1), Int(1));
            return spinor_series_matches<Int>(num, Int(1), K, [](long n) { return fsh(n); });
        }
        case SeqKind::LSH: {
            auto num = generating_numerator(lsh(0), lsh(1), Int(1));
            return spinor_series_matches<Int>(num, Int(1), K, [](long n) { return lsh(n); });
        }
        case SeqKind::FSH_POLY: {
            Poly<Int> x = Poly<Int>::x();
            auto num = generating_numerator(fsh_poly(0), fsh_poly(1), x);
            return spinor_series_matches<Poly<Int>>(num, x, K,
                                                    [](long n) { return fsh_poly(n); });
        }
        case SeqKind::LSH_POLY: {
            Poly<Int> x = Poly<Int>::x();
            auto num = generating_numerator(lsh_poly(0), lsh_poly(1), x);
            return spinor_series_matches<Poly<Int>>(num, x, K,
                                                    [](long n) { return lsh_poly(n); });
        }
    }
    return false;
}

SpinorMat<Int> qh_matrix(long n) {
    require_index(n, 0, "qh_matrix");
    Int fn = fib(n), f1 = fib(n + 1), f2 = fib(n + 2), f3 = fib(n + 3);
    return SpinorMat<Int>(Hyper<Int>(fn, f2), Hyper<Int>(f1 - f2, f3),
                          Hyper<Int>(f2 - f1, f3), Hyper<Int>(fn, -f2));
}

Hyper<Int> cassini(long n) {
    require_index(n, 1, "cassini");
    return qh_matrix(n).det();
}

Int cassini_closed_form(long n) {
    require_index(n, 1, "cassini");
    return -fib(2 * n + 5) + 2 * fib(n) * fib(n);
}

std::pair<HSpinor<Int>, HSpinor<Int>> identity_sides(IdentityKind id, long n) {
    switch (id) {
        case IdentityKind::T46_I:
            require_index(n, 2, "T4.6(i)");
            return {fsh(n + 2) - fsh(n - 2), lsh(n)};
        case IdentityKind::T46_II:
            require_index(n, 2, "T4.6(ii)");
            return {Int(5) * fsh(n) + lsh(n), Int(2) * lsh(n + 1)};
        case IdentityKind::T47_I:
            require_index(n, 1, "T4.7(i)");
            return {lucas(n + 1) * fsh(n) + lucas(n) * fsh(n - 1), lsh(2 * n)};
        case IdentityKind::T47_II:
            require_index(n, 1, "T4.7(ii)");
            return {fib(n + 1) * fsh(n) + fib(n) * fsh(n - 1), fsh(2 * n)};
    }
    throw UnknownIdentity();
}

std::pair<HSpinor<Poly<Int>>, HSpinor<Poly<Int>>> poly_identity_sides(PolyIdentityKind id,
                                                                      long n) {
    require_index(n, 1, "T5.5");
    const Poly<Int> x = Poly<Int>::x();
    switch (id) {
        case PolyIdentityKind::T55_I:
            return {lsh_poly(n), fsh_poly(n + 1) + fsh_poly(n - 1)};
        case PolyIdentityKind::T55_II:
            return {lsh_poly(n), Poly<Int>(Int(2)) * fsh_poly(n + 1) - x * fsh_poly(n)};
        case PolyIdentityKind::T55_III_PRINTED: {
            HSpinor<Poly<Int>> rhs = n % 2 == 0 ? lsh_poly(n + 1) - lsh_poly(n - 1)
                                                : lsh_poly(n + 1) + lsh_poly(n - 1);
            return {(x * x + Poly<Int>(Int(4))) * fsh_poly(n), rhs};
        }
        case PolyIdentityKind::T55_III_CORRECTED:
            return {(x * x + Poly<Int>(Int(4))) * fsh_poly(n), lsh_poly(n + 1) + lsh_poly(n - 1)};
    }
    throw UnknownIdentity();
}

}  // namespace hyfib
