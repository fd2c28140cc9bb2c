#ifndef SECV_DETAIL_FORMAT_HPP
#define SECV_DETAIL_FORMAT_HPP

#include <string>
#include <utility>
#include <vector>

#include "secv/rational.hpp"

namespace secv::detail {

/// Renders a sorted list of (coefficient, monomial) terms as a polynomial,
/// e.g. "2 - 18*h - 8*s1 + 36*h^2". The unit monomial is passed as "";
/// coefficients 1/-1 are elided in front of nonunit monomials.
inline std::string format_terms(const std::vector<std::pair<Rational, std::string>>& terms) {
    if (terms.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [coeff, mono] : terms) {
        const bool negative = coeff < 0;
        if (first) {
            if (negative)
                out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        const Rational a = abs(coeff);
        if (mono.empty()) {
            out += to_string(a);
        } else if (a == 1) {
            out += mono;
        } else {
            out += to_string(a) + "*" + mono;
        }
    }
    return out;
}

/// "sym", "sym^k", or "" for k == 0.
inline std::string power_factor(const char* symbol, int exponent) {
    if (exponent == 0)
        return "";
    std::string out = symbol;
    if (exponent > 1)
        out += "^" + std::to_string(exponent);
    return out;
}

inline void append_factor(std::string& mono, const std::string& factor) {
    if (factor.empty())
        return;
    if (!mono.empty())
        mono += "*";
    mono += factor;
}

} // namespace secv::detail

#endif
