// The hybrid-number ring over an exact coefficient ring: a + bi + ce + dh
// with i^2 = -1, e^2 = 0, h^2 = 1, ih = -hi = e + i. The 2x2 matrix
// representation doubles as an independent multiplication oracle.

#pragma once

#include <string>
#include <utility>

#include "hyfib/rings.hpp"

namespace hyfib {

template <class R>
class Mat2 {
public:
    Mat2(R m11, R m12, R m21, R m22)
        : m11_(std::move(m11)), m12_(std::move(m12)),
          m21_(std::move(m21)), m22_(std::move(m22)) {}

    const R& m11() const { return m11_; }
    const R& m12() const { return m12_; }
    const R& m21() const { return m21_; }
    const R& m22() const { return m22_; }

    R det() const { return m11_ * m22_ - m12_ * m21_; }

    friend Mat2 operator*(const Mat2& a, const Mat2& b) {
        return Mat2(a.m11_ * b.m11_ + a.m12_ * b.m21_,
                    a.m11_ * b.m12_ + a.m12_ * b.m22_,
                    a.m21_ * b.m11_ + a.m22_ * b.m21_,
                    a.m21_ * b.m12_ + a.m22_ * b.m22_);
    }
    friend Mat2 operator+(const Mat2& a, const Mat2& b) {
        return Mat2(a.m11_ + b.m11_, a.m12_ + b.m12_, a.m21_ + b.m21_, a.m22_ + b.m22_);
    }
    friend bool operator==(const Mat2& a, const Mat2& b) {
        return a.m11_ == b.m11_ && a.m12_ == b.m12_ && a.m21_ == b.m21_ && a.m22_ == b.m22_;
    }
    friend bool operator!=(const Mat2& a, const Mat2& b) { return !(a == b); }

private:
    R m11_, m12_, m21_, m22_;
};

template <class R>
class Hybrid {
public:
    Hybrid() : a_(R(0)), b_(R(0)), c_(R(0)), d_(R(0)) {}
    Hybrid(R a, R b, R c, R d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

    static Hybrid real(const R& a) { return Hybrid(a, R(0), R(0), R(0)); }
    static Hybrid i_unit() { return Hybrid(R(0), R(1), R(0), R(0)); }
    static Hybrid e_unit() { return Hybrid(R(0), R(0), R(1), R(0)); }
    static Hybrid h_unit() { return Hybrid(R(0), R(0), R(0), R(1)); }

    const R& a() const { return a_; }
    const R& b() const { return b_; }
    const R& c() const { return c_; }
    const R& d() const { return d_; }

    Hybrid conj() const { return Hybrid(a_, -b_, -c_, -d_); }

    friend Hybrid operator+(const Hybrid& p, const Hybrid& q) {
        return Hybrid(p.a_ + q.a_, p.b_ + q.b_, p.c_ + q.c_, p.d_ + q.d_);
    }
    friend Hybrid operator-(const Hybrid& p, const Hybrid& q) {
        return Hybrid(p.a_ - q.a_, p.b_ - q.b_, p.c_ - q.c_, p.d_ - q.d_);
    }
    friend Hybrid operator-(const Hybrid& p) { return Hybrid(-p.a_, -p.b_, -p.c_, -p.d_); }
    friend Hybrid operator*(const R& s, const Hybrid& p) {
        return Hybrid(s * p.a_, s * p.b_, s * p.c_, s * p.d_);
    }

    // Bilinear product from the completed unit table:
    //   i*i=-1  e*e=0  h*h=1  i*e=1-h  e*i=1+h
    //   i*h=e+i  h*i=-e-i  e*h=-e  h*e=e
    friend Hybrid operator*(const Hybrid& p, const Hybrid& q) {
        const R &a1 = p.a_, &b1 = p.b_, &c1 = p.c_, &d1 = p.d_;
        const R &a2 = q.a_, &b2 = q.b_, &c2 = q.c_, &d2 = q.d_;
        return Hybrid(a1 * a2 - b1 * b2 + b1 * c2 + c1 * b2 + d1 * d2,
                      a1 * b2 + b1 * a2 + b1 * d2 - d1 * b2,
                      a1 * c2 + c1 * a2 + b1 * d2 - d1 * b2 - c1 * d2 + d1 * c2,
                      a1 * d2 + d1 * a2 - b1 * c2 + c1 * b2);
    }

    friend bool operator==(const Hybrid& p, const Hybrid& q) {
        return p.a_ == q.a_ && p.b_ == q.b_ && p.c_ == q.c_ && p.d_ == q.d_;
    }
    friend bool operator!=(const Hybrid& p, const Hybrid& q) { return !(p == q); }

private:
    R a_, b_, c_, d_;
};

template <class R>
bool is_zero(const Hybrid<R>& z) {
    return is_zero(z.a()) && is_zero(z.b()) && is_zero(z.c()) && is_zero(z.d());
}

// g(Z1,Z2) = a1a2 + b1b2 - b1c2 - b2c1 - d1d2, the closed bilinear form.
// (Z1*conj(Z2) + Z2*conj(Z1))/2 agrees with it; the quotient form lives in
// the tests as an oracle.
template <class R>
R scalar_product(const Hybrid<R>& p, const Hybrid<R>& q) {
    return p.a() * q.a() + p.b() * q.b() - p.b() * q.c() - q.b() * p.c() - p.d() * q.d();
}

// Z1 x Z2 = (Z1*conj(Z2) - Z2*conj(Z1)) / 2
template <class R>
Hybrid<R> vector_product(const Hybrid<R>& p, const Hybrid<R>& q) {
    Hybrid<R> diff = p * q.conj() - q * p.conj();
    return Hybrid<R>(exact_halve(diff.a()), exact_halve(diff.b()),
                     exact_halve(diff.c()), exact_halve(diff.d()));
}

// Faithful representation: [[a+c, b-c+d], [c-b+d, a-c]].
template <class R>
Mat2<R> hybrid_to_matrix(const Hybrid<R>& z) {
    return Mat2<R>(z.a() + z.c(), z.b() - z.c() + z.d(),
                   z.c() - z.b() + z.d(), z.a() - z.c());
}

// Literal rendering. Unit order follows the product table's natural output
// (e before i) so i*h prints as "e+i"; the parser accepts any order.
template <class R>
std::string render(const Hybrid<R>& z) {
    if (is_zero(z)) return "0";
    std::string out;
    auto term = [&out](const R& coeff, const char* unit) {
        if (is_zero(coeff)) return;
        std::string cs = render(coeff);
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs.erase(0, 1);
        if (!out.empty())
            out += neg ? "-" : "+";
        else if (neg)
            out += "-";
        if (unit[0] == '\0') {
            out += cs;
        } else {
            if (cs != "1") out += cs;
            out += unit;
        }
    };
    term(z.a(), "");
    term(z.c(), "e");
    term(z.b(), "i");
    term(z.d(), "h");
    return out;
}

// Literal grammar:
//   expr := term (("+"|"-") term)*
//   term := coeff unit? | unit
//   coeff := integer | integer "/" integer
//   unit := "i" | "e" | "h"
// Whitespace between tokens is ignored; repeated units accumulate.
Hybrid<Rat> parse_hybrid(const std::string& text);

}  // namespace hyfib
