// Exact coefficient arithmetic: arbitrary-precision integers and rationals
// (GMP-backed), plus the shared error types and the small free-function
// vocabulary (is_zero, is_one, exact_halve, render) the generic ring
// containers build on.

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hyfib {

using Int = mpz_class;
using Rat = mpq_class;

struct NonHalvable : std::runtime_error {
    explicit NonHalvable(const std::string& what) : std::runtime_error(what) {}
};

struct NegativeIndex : std::invalid_argument {
    explicit NegativeIndex(const std::string& what) : std::invalid_argument(what) {}
};

struct NonUnitConstantTerm : std::domain_error {
    NonUnitConstantTerm() : std::domain_error("series inverse needs a unit constant term") {}
};

struct NotInvertible : std::domain_error {
    explicit NotInvertible(const std::string& what) : std::domain_error(what) {}
};

struct ResidualIrrational : std::logic_error {
    ResidualIrrational() : std::logic_error("irrational component failed to cancel") {}
};

struct UnknownIdentity : std::invalid_argument {
    UnknownIdentity() : std::invalid_argument("unknown identity") {}
};

struct ParseError : std::runtime_error {
    ParseError(std::size_t pos, const std::string& expected)
        : std::runtime_error("parse error at position " + std::to_string(pos) +
                             ": expected " + expected),
          position(pos),
          expected(expected) {}
    std::size_t position;
    std::string expected;
};

inline bool is_zero(const Int& a) { return sgn(a) == 0; }
inline bool is_one(const Int& a) { return a == 1; }

inline bool is_zero(const Rat& a) { return sgn(a) == 0; }
inline bool is_one(const Rat& a) { return a == 1; }

inline Int exact_halve(const Int& a) {
    if (mpz_odd_p(a.get_mpz_t()))
        throw NonHalvable("2 does not divide " + a.get_str());
    return a / 2;
}

inline Rat exact_halve(const Rat& a) { return a / 2; }

// mpq_class arithmetic keeps results canonical; direct construction does not.
inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string render(const Int& a) { return a.get_str(); }
inline std::string render(const Rat& a) { return a.get_str(); }

inline Rat to_rat(const Int& a) { return Rat(a); }

}  // namespace hyfib
