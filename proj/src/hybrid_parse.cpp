#include <cctype>
#include <cstddef>
#include <string>

#include "hyfib/hybrid.hpp"

namespace hyfib {

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    Int integer() {
        skip_ws();
        std::size_t start = pos;
        std::string digits;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            digits += text[pos];
            ++pos;
        }
        if (digits.empty()) throw ParseError(start, "integer");
        return Int(digits);
    }
};

}  // namespace

Hybrid<Rat> parse_hybrid(const std::string& text) {
    Cursor cur{text};
    Rat a(0), b(0), c(0), d(0);
    bool first = true;

    while (!cur.done()) {
        int sign = 1;
        char ch = cur.peek();
        if (ch == '+' || ch == '-') {
            sign = ch == '-' ? -1 : 1;
            ++cur.pos;
        } else if (!first) {
            throw ParseError(cur.pos, "'+' or '-'");
        }
        first = false;

        // term := coeff unit? | unit
        Rat coeff(1);
        bool have_coeff = false;
        ch = cur.peek();
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            Int num = cur.integer();
            Int den(1);
            if (cur.peek() == '/') {
                ++cur.pos;
                den = cur.integer();
                if (is_zero(den)) throw ParseError(cur.pos, "nonzero denominator");
            }
            coeff = make_rat(num, den);
            have_coeff = true;
        }
        if (sign < 0) coeff = -coeff;

        ch = cur.peek();
        if (ch == 'i') {
            ++cur.pos;
            b += coeff;
        } else if (ch == 'e') {
            ++cur.pos;
            c += coeff;
        } else if (ch == 'h') {
            ++cur.pos;
            d += coeff;
        } else if (have_coeff) {
            a += coeff;
        } else {
            throw ParseError(cur.pos, "coefficient or unit");
        }
    }
    if (first) throw ParseError(0, "nonempty expression");
    return Hybrid<Rat>(a, b, c, d);
}

}  // namespace hyfib
