// Hybrid spinors: the chi map from hybrid numbers to 2-vectors with
// hyperbolic entries, the conjugation operators, the Qhat matrix realizing
// left multiplication, and the product-correspondence audit machinery.

#pragma once

#include <string>
#include <utility>

#include "hyfib/hybrid.hpp"
#include "hyfib/hyper.hpp"
#include "hyfib/rings.hpp"

namespace hyfib {

template <class R>
class HSpinor {
public:
    HSpinor(Hyper<R> s1, Hyper<R> s2) : s1_(std::move(s1)), s2_(std::move(s2)) {}

    const Hyper<R>& s1() const { return s1_; }
    const Hyper<R>& s2() const { return s2_; }

    friend HSpinor operator+(const HSpinor& a, const HSpinor& b) {
        return HSpinor(a.s1_ + b.s1_, a.s2_ + b.s2_);
    }
    friend HSpinor operator-(const HSpinor& a, const HSpinor& b) {
        return HSpinor(a.s1_ - b.s1_, a.s2_ - b.s2_);
    }
    friend HSpinor operator-(const HSpinor& a) { return HSpinor(-a.s1_, -a.s2_); }
    friend HSpinor operator*(const R& s, const HSpinor& a) {
        Hyper<R> k(s, s - s);
        return HSpinor(k * a.s1_, k * a.s2_);
    }
    friend HSpinor operator*(const Hyper<R>& s, const HSpinor& a) {
        return HSpinor(s * a.s1_, s * a.s2_);
    }
    friend bool operator==(const HSpinor& a, const HSpinor& b) {
        return a.s1_ == b.s1_ && a.s2_ == b.s2_;
    }
    friend bool operator!=(const HSpinor& a, const HSpinor& b) { return !(a == b); }

    template <class S, class F>
    HSpinor<S> map(F&& f) const {
        return HSpinor<S>(s1_.template map<S>(f), s2_.template map<S>(f));
    }

private:
    Hyper<R> s1_, s2_;
};

// chi(a+bi+ce+dh) = [a+hc; (c-b)+hd]
template <class R>
HSpinor<R> chi(const Hybrid<R>& z) {
    return HSpinor<R>(Hyper<R>(z.a(), z.c()), Hyper<R>(z.c() - z.b(), z.d()));
}

// The image of the hybrid conjugate; needs the preimage, since the b and c
// coefficients cannot be separated from spinor entries alone.
template <class R>
HSpinor<R> spinor_bar(const Hybrid<R>& preimage) {
    return chi(preimage.conj());
}

// Entrywise hyperbolic conjugation u+vh -> u-vh.
template <class R>
HSpinor<R> spinor_star(const HSpinor<R>& s) {
    return HSpinor<R>(s.s1().conj(), s.s2().conj());
}

// h * H * (entrywise conjugate): [h*conj(s1); -h*conj(s2)]
template <class R>
HSpinor<R> spinor_tilde(const HSpinor<R>& s) {
    Hyper<R> h = Hyper<R>::h_unit();
    return HSpinor<R>(h * s.s1().conj(), -(h * s.s2().conj()));
}

// -H * (entrywise conjugate): [-conj(s1); conj(s2)]
template <class R>
HSpinor<R> spinor_mate(const HSpinor<R>& s) {
    return HSpinor<R>(-s.s1().conj(), s.s2().conj());
}

template <class R>
class SpinorMat {
public:
    SpinorMat(Hyper<R> m11, Hyper<R> m12, Hyper<R> m21, Hyper<R> m22)
        : m11_(std::move(m11)), m12_(std::move(m12)),
          m21_(std::move(m21)), m22_(std::move(m22)) {}

    const Hyper<R>& m11() const { return m11_; }
    const Hyper<R>& m12() const { return m12_; }
    const Hyper<R>& m21() const { return m21_; }
    const Hyper<R>& m22() const { return m22_; }

    // entries commute, so the determinant is well-defined
    Hyper<R> det() const { return m11_ * m22_ - m12_ * m21_; }

    friend SpinorMat operator*(const SpinorMat& a, const SpinorMat& b) {
        return SpinorMat(a.m11_ * b.m11_ + a.m12_ * b.m21_,
                         a.m11_ * b.m12_ + a.m12_ * b.m22_,
                         a.m21_ * b.m11_ + a.m22_ * b.m21_,
                         a.m21_ * b.m12_ + a.m22_ * b.m22_);
    }
    friend bool operator==(const SpinorMat& a, const SpinorMat& b) {
        return a.m11_ == b.m11_ && a.m12_ == b.m12_ && a.m21_ == b.m21_ && a.m22_ == b.m22_;
    }
    friend bool operator!=(const SpinorMat& a, const SpinorMat& b) { return !(a == b); }

private:
    Hyper<R> m11_, m12_, m21_, m22_;
};

// Qhat(p) = [a+hc, (b-c)+hd; (c-b)+hd, a-hc]
template <class R>
SpinorMat<R> qhat(const Hybrid<R>& z) {
    return SpinorMat<R>(Hyper<R>(z.a(), z.c()), Hyper<R>(z.b() - z.c(), z.d()),
                        Hyper<R>(z.c() - z.b(), z.d()), Hyper<R>(z.a(), -z.c()));
}

template <class R>
HSpinor<R> mat_apply(const SpinorMat<R>& m, const HSpinor<R>& s) {
    return HSpinor<R>(m.m11() * s.s1() + m.m12() * s.s2(),
                      m.m21() * s.s1() + m.m22() * s.s2());
}

// H = diag(1, -1) acting on a spinor
template <class R>
HSpinor<R> apply_H(const HSpinor<R>& s) {
    return HSpinor<R>(s.s1(), -s.s2());
}

// Three readings of the product correspondence:
//   truth        = chi(p*q)
//   left_regular = Qhat(p) * chi(q)
//   printed      = -h * (Qhat(p) * (H * chi(q)))
template <class R>
struct CorrespondenceReport {
    HSpinor<R> truth;
    HSpinor<R> left_regular;
    HSpinor<R> printed;
    bool left_regular_ok;
    bool printed_ok;
};

template <class R>
CorrespondenceReport<R> audit_product_correspondence(const Hybrid<R>& p, const Hybrid<R>& q) {
    HSpinor<R> truth = chi(p * q);
    HSpinor<R> left = mat_apply(qhat(p), chi(q));
    HSpinor<R> printed = -(Hyper<R>::h_unit() * mat_apply(qhat(p), apply_H(chi(q))));
    return {truth, left, printed, truth == left, truth == printed};
}

template <class R>
std::string render(const HSpinor<R>& s) {
    return "[" + render(s.s1()) + "; " + render(s.s2()) + "]";
}

}  // namespace hyfib
