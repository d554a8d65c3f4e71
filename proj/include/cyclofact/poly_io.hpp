#pragma once

// Text form of polynomials: "X^2 - 3X + 1", "X - 3/2", "2*x^3 + 1/4".

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>

#include "cyclofact/polynomial.hpp"

namespace cyclofact {

inline RatPoly parse_polynomial(std::string_view text) {
    const auto fail = [&](const std::string& why) -> domain_error {
        return domain_error("malformed polynomial '" + std::string(text) + "': " + why);
    };
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw fail("empty");

    RatPoly out;
    std::size_t i = 0;
    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw fail("expected '+' or '-' at position " + std::to_string(i));
        }
        first = false;

        std::size_t j = i;
        while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
        Rat coeff(1);
        const bool has_coeff = j > i;
        if (has_coeff) coeff = Rat::parse(s.substr(i, j - i));
        i = j;
        if (i < s.size() && s[i] == '*') {
            if (!has_coeff) throw fail("'*' without coefficient");
            ++i;
        }
        std::size_t degree = 0;
        if (i < s.size() && (s[i] == 'X' || s[i] == 'x')) {
            ++i;
            degree = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::size_t k = i;
                while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
                if (k == i) throw fail("missing exponent");
                degree = std::stoul(s.substr(i, k - i));
                i = k;
            }
        } else if (!has_coeff) {
            throw fail("empty term at position " + std::to_string(i));
        }
        out.add_term(degree, sign < 0 ? -coeff : coeff);
    }
    return out;
}

/// Human-readable form, highest degree first ("X^2 - 3X + 1").
template <class Ring>
std::string to_string(const SparsePoly<Ring>& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [d, c] = *it;
        const bool negative = c < 0;
        Rat mag = negative ? -Rat(c) : Rat(c);
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (d == 0 || !(mag == Rat(1))) os << mag;
        if (d >= 1) os << 'X';
        if (d >= 2) os << '^' << d;
    }
    return os.str();
}

}  // namespace cyclofact
