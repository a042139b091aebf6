// Dense univariate polynomials over an exact coefficient ring. Canonical
// form: ascending coefficients, no trailing zeros, so equality is
// structural.

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hyfib/rings.hpp"

namespace hyfib {

template <class R>
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<R> ascending) : coeffs_(ascending) { trim(); }
    explicit Poly(std::vector<R> ascending) : coeffs_(std::move(ascending)) { trim(); }
    explicit Poly(const R& constant) : coeffs_{constant} { trim(); }

    static Poly x() { return Poly({R(0), R(1)}); }
    static Poly monomial(const R& coeff, std::size_t deg) {
        std::vector<R> c(deg + 1, R(0));
        c[deg] = coeff;
        return Poly(std::move(c));
    }

    // -1 for the zero polynomial
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<R>& coeffs() const { return coeffs_; }
    R coeff(std::size_t deg) const {
        return deg < coeffs_.size() ? coeffs_[deg] : R(0);
    }

    friend Poly operator+(const Poly& p, const Poly& q) {
        std::vector<R> c(std::max(p.coeffs_.size(), q.coeffs_.size()), R(0));
        for (std::size_t k = 0; k < c.size(); ++k) c[k] = p.coeff(k) + q.coeff(k);
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }
    friend Poly operator-(const Poly& p) {
        std::vector<R> c = p.coeffs_;
        for (auto& v : c) v = -v;
        return Poly(std::move(c));
    }
    // schoolbook convolution
    friend Poly operator*(const Poly& p, const Poly& q) {
        if (p.coeffs_.empty() || q.coeffs_.empty()) return Poly();
        std::vector<R> c(p.coeffs_.size() + q.coeffs_.size() - 1, R(0));
        for (std::size_t a = 0; a < p.coeffs_.size(); ++a)
            for (std::size_t b = 0; b < q.coeffs_.size(); ++b)
                c[a + b] = c[a + b] + p.coeffs_[a] * q.coeffs_[b];
        return Poly(std::move(c));
    }
    friend Poly operator*(const R& s, const Poly& p) { return Poly(s) * p; }

    friend bool operator==(const Poly& p, const Poly& q) {
        if (p.coeffs_.size() != q.coeffs_.size()) return false;
        for (std::size_t k = 0; k < p.coeffs_.size(); ++k)
            if (!(p.coeffs_[k] == q.coeffs_[k])) return false;
        return true;
    }
    friend bool operator!=(const Poly& p, const Poly& q) { return !(p == q); }

    // Horner
    R eval(const R& a) const {
        R acc(0);
        for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * a + coeffs_[k];
        return acc;
    }

    template <class S, class F>
    auto map(F&& f) const {
        std::vector<S> c;
        c.reserve(coeffs_.size());
        for (const auto& v : coeffs_) c.push_back(f(v));
        return ::hyfib::Poly<S>(std::move(c));
    }

private:
    void trim() {
        while (!coeffs_.empty() && is_zero(coeffs_.back())) coeffs_.pop_back();
    }
    std::vector<R> coeffs_;  // ascending degree
};

template <class R>
bool is_zero(const Poly<R>& p) {
    return p.degree() < 0;
}

template <class R>
bool is_one(const Poly<R>& p) {
    return p.degree() == 0 && is_one(p.coeff(0));
}

template <class R>
Poly<R> exact_halve(const Poly<R>& p) {
    std::vector<R> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c.push_back(exact_halve(v));
    return Poly<R>(std::move(c));
}

template <class R>
std::string render(const Poly<R>& p, const std::string& var = "x") {
    if (is_zero(p)) return "0";
    std::string out;
    for (int d = p.degree(); d >= 0; --d) {
        R c = p.coeff(static_cast<std::size_t>(d));
        if (is_zero(c)) continue;
        std::string cs = render(c);
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs.erase(0, 1);
        if (!out.empty())
            out += neg ? "-" : "+";
        else if (neg)
            out += "-";
        bool unit_coeff = cs == "1";
        if (d == 0) {
            out += cs;
        } else {
            if (!unit_coeff) out += cs;
            out += var;
            if (d > 1) out += "^" + std::to_string(d);
        }
    }
    return out;
}

inline Poly<Rat> to_rat(const Poly<Int>& p) {
    return p.template map<Rat>([](const Int& v) { return Rat(v); });
}

}  // namespace hyfib
