// Truncated formal power series: exact arithmetic modulo t^(K+1).

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hyfib/rings.hpp"

namespace hyfib {

template <class R>
class Series {
public:
    explicit Series(std::size_t order) : coeffs_(order + 1, R{}) {}
    Series(std::size_t order, std::vector<R> ascending) : coeffs_(std::move(ascending)) {
        coeffs_.resize(order + 1, R{});
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const R& coeff(std::size_t k) const { return coeffs_[k]; }
    R& coeff(std::size_t k) { return coeffs_[k]; }

    friend Series operator+(const Series& a, const Series& b) {
        Series out(std::min(a.order(), b.order()));
        for (std::size_t k = 0; k <= out.order(); ++k)
            out.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
        return out;
    }
    friend Series operator-(const Series& a, const Series& b) {
        Series out(std::min(a.order(), b.order()));
        for (std::size_t k = 0; k <= out.order(); ++k)
            out.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
        return out;
    }
    friend Series operator-(const Series& a) {
        Series out(a.order());
        for (std::size_t k = 0; k <= out.order(); ++k) out.coeffs_[k] = -a.coeffs_[k];
        return out;
    }
    friend Series operator*(const Series& a, const Series& b) {
        Series out(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i <= out.order(); ++i)
            for (std::size_t j = 0; i + j <= out.order() && j <= b.order(); ++j)
                out.coeffs_[i + j] = out.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
        return out;
    }
    friend bool operator==(const Series& a, const Series& b) {
        if (a.order() != b.order()) return false;
        for (std::size_t k = 0; k <= a.order(); ++k)
            if (!(a.coeffs_[k] == b.coeffs_[k])) return false;
        return true;
    }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

private:
    std::vector<R> coeffs_;
};

// Two-sided inverse modulo t^(K+1); the constant term must be 1 or -1.
template <class R>
Series<R> series_inv(const Series<R>& s) {
    const R& a0 = s.coeff(0);
    if (!is_one(a0) && !is_one(R(-a0))) throw NonUnitConstantTerm();
    const R& b0 = a0;  // +1 and -1 are self-inverse
    Series<R> out(s.order());
    out.coeff(0) = b0;
    for (std::size_t k = 1; k <= s.order(); ++k) {
        R acc{};
        for (std::size_t j = 1; j <= k; ++j) acc = acc + s.coeff(j) * out.coeff(k - j);
        out.coeff(k) = -(b0 * acc);
    }
    return out;
}

}  // namespace hyfib
