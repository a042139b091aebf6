// Quadratic extension R[c]/(c^2 - D): elements x + y*c with D fixed per
// value. Hosts the Binet roots (D = 5 over the rationals, D = x^2 + 4 over
// rational polynomials).

#pragma once

#include <cassert>
#include <string>
#include <utility>

#include "hyfib/poly.hpp"
#include "hyfib/rings.hpp"

namespace hyfib {

template <class R>
class Quad {
public:
    Quad(R x, R y, R d) : x_(std::move(x)), y_(std::move(y)), d_(std::move(d)) {}

    static Quad scalar(const R& x, const R& d) { return Quad(x, R(0), d); }
    static Quad root(const R& d) { return Quad(R(0), R(1), d); }

    const R& x() const { return x_; }
    const R& y() const { return y_; }
    const R& discriminant() const { return d_; }

    Quad conj() const { return Quad(x_, -y_, d_); }
    // x^2 - D y^2, a scalar
    R norm() const { return x_ * x_ - d_ * (y_ * y_); }

    friend Quad operator+(const Quad& a, const Quad& b) {
        assert(a.d_ == b.d_);
        return Quad(a.x_ + b.x_, a.y_ + b.y_, a.d_);
    }
    friend Quad operator-(const Quad& a, const Quad& b) {
        assert(a.d_ == b.d_);
        return Quad(a.x_ - b.x_, a.y_ - b.y_, a.d_);
    }
    friend Quad operator-(const Quad& a) { return Quad(-a.x_, -a.y_, a.d_); }
    friend Quad operator*(const Quad& a, const Quad& b) {
        assert(a.d_ == b.d_);
        return Quad(a.x_ * b.x_ + a.d_ * (a.y_ * b.y_),
                    a.x_ * b.y_ + b.x_ * a.y_, a.d_);
    }
    friend bool operator==(const Quad& a, const Quad& b) {
        return a.x_ == b.x_ && a.y_ == b.y_ && a.d_ == b.d_;
    }
    friend bool operator!=(const Quad& a, const Quad& b) { return !(a == b); }

    Quad pow(long n) const {
        assert(n >= 0);
        Quad acc = scalar(R(1), d_);
        for (long k = 0; k < n; ++k) acc = acc * *this;
        return acc;
    }

private:
    R x_, y_, d_;
};

template <class R>
bool is_zero(const Quad<R>& q) {
    return is_zero(q.x()) && is_zero(q.y());
}

template <class R>
bool is_one(const Quad<R>& q) {
    return is_one(q.x()) && is_zero(q.y());
}

template <class R>
Quad<R> exact_halve(const Quad<R>& q) {
    return Quad<R>(exact_halve(q.x()), exact_halve(q.y()), q.discriminant());
}

// Field inverse; only the rational case Quad(Q, 5) needs one.
inline Quad<Rat> inv(const Quad<Rat>& q) {
    Rat n = q.norm();
    if (is_zero(n)) throw NotInvertible("zero element of Quad(Q,D)");
    return Quad<Rat>(q.x() / n, -q.y() / n, q.discriminant());
}

template <class R>
std::string render(const Quad<R>& q, const std::string& root = "c") {
    if (is_zero(q)) return "0";
    std::string out;
    if (!is_zero(q.x())) out = render(q.x());
    if (!is_zero(q.y())) {
        std::string body;
        if (is_one(q.y())) {
            body = root;
        } else if (is_one(-q.y())) {
            body = "-" + root;
        } else {
            body = render(q.y());
            bool multi = body.find_first_of("+-", 1) != std::string::npos;
            body = (multi ? "(" + body + ")" : body) + root;
        }
        if (!out.empty() && body[0] != '-') out += "+";
        out += body;
    }
    return out;
}

}  // namespace hyfib
