// Hyperbolic (split-complex) numbers u + v*h with h^2 = 1 over an exact
// ring. Commutative; entry type of hybrid spinors.

#pragma once

#include <string>
#include <utility>

#include "hyfib/poly.hpp"
#include "hyfib/rings.hpp"

namespace hyfib {

template <class R>
class Hyper {
public:
    Hyper() : u_(R(0)), v_(R(0)) {}
    Hyper(R u, R v) : u_(std::move(u)), v_(std::move(v)) {}
    explicit Hyper(R u) : u_(std::move(u)), v_(u_ - u_) {}

    static Hyper h_unit() { return Hyper(R(0), R(1)); }

    const R& real() const { return u_; }
    const R& hpart() const { return v_; }

    // u + vh -> u - vh
    Hyper conj() const { return Hyper(u_, -v_); }

    friend Hyper operator+(const Hyper& a, const Hyper& b) {
        return Hyper(a.u_ + b.u_, a.v_ + b.v_);
    }
    friend Hyper operator-(const Hyper& a, const Hyper& b) {
        return Hyper(a.u_ - b.u_, a.v_ - b.v_);
    }
    friend Hyper operator-(const Hyper& a) { return Hyper(-a.u_, -a.v_); }
    friend Hyper operator*(const Hyper& a, const Hyper& b) {
        return Hyper(a.u_ * b.u_ + a.v_ * b.v_, a.u_ * b.v_ + b.u_ * a.v_);
    }
    friend bool operator==(const Hyper& a, const Hyper& b) {
        return a.u_ == b.u_ && a.v_ == b.v_;
    }
    friend bool operator!=(const Hyper& a, const Hyper& b) { return !(a == b); }

    template <class S, class F>
    Hyper<S> map(F&& f) const {
        return Hyper<S>(f(u_), f(v_));
    }

private:
    R u_, v_;
};

template <class R>
bool is_zero(const Hyper<R>& a) {
    return is_zero(a.real()) && is_zero(a.hpart());
}

template <class R>
bool is_one(const Hyper<R>& a) {
    return is_one(a.real()) && is_zero(a.hpart());
}

template <class R>
Hyper<R> exact_halve(const Hyper<R>& a) {
    return Hyper<R>(exact_halve(a.real()), exact_halve(a.hpart()));
}

namespace detail {

// Numeric coefficients sit in front of h ("2h"); structured ones go behind
// it, parenthesized when they have more than one term ("hx", "h(x^2+1)").
inline std::string h_term(const Int& v) {
    if (v == 1) return "h";
    if (v == -1) return "-h";
    return render(v) + "h";
}
inline std::string h_term(const Rat& v) {
    if (v == 1) return "h";
    if (v == -1) return "-h";
    return render(v) + "h";
}
template <class R>
std::string h_term(const R& v) {
    if (is_one(v)) return "h";
    if (is_one(-v)) return "-h";
    std::string body = render(v);
    bool multi = body.find_first_of("+-", 1) != std::string::npos;
    return multi ? "h(" + body + ")" : "h" + body;
}

template <class R>
std::string real_term(const R& u) {
    std::string body = render(u);
    bool multi = body.find_first_of("+-", 1) != std::string::npos;
    return multi ? "(" + body + ")" : body;
}
inline std::string real_term(const Int& u) { return render(u); }
inline std::string real_term(const Rat& u) { return render(u); }

}  // namespace detail

template <class R>
std::string render(const Hyper<R>& a) {
    if (is_zero(a)) return "0";
    if (is_zero(a.hpart())) return detail::real_term(a.real());
    std::string ht = detail::h_term(a.hpart());
    if (is_zero(a.real())) return ht;
    std::string out = detail::real_term(a.real());
    if (ht[0] != '-') out += "+";
    return out + ht;
}

inline Hyper<Rat> to_rat(const Hyper<Int>& a) {
    return Hyper<Rat>(Rat(a.real()), Rat(a.hpart()));
}

}  // namespace hyfib
