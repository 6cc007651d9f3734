#pragma once

#include "horadam/quadext.hpp"
#include "horadam/quaternion.hpp"
#include "horadam/rational.hpp"

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace horadam {

inline std::string to_string(const Rational& v) { return v.str(); }
inline std::string to_string(const QuadExt& v) { return v.str(); }

/// "w + x i + y j + z k" with zero terms omitted, unit coefficients
/// contracted ("i", not "1i") and no spaces: "i+j+2k", "-13+2i+4j+6k", "0".
inline std::string to_string(const Quaternion<Rational>& u) {
    std::string out;
    auto append = [&](const Rational& coeff, const char* unit) {
        if (coeff.is_zero()) return;
        std::string body = abs(coeff).str();
        bool neg = coeff.is_negative();
        if (out.empty()) {
            if (neg) out += '-';
        } else {
            out += neg ? '-' : '+';
        }
        if (*unit == '\0') {
            out += body;
        } else {
            if (body != "1") out += body;
            out += unit;
        }
    };
    append(u.w, "");
    append(u.x, "i");
    append(u.y, "j");
    append(u.z, "k");
    return out.empty() ? "0" : out;
}

/// Quaternions over QuadExt print as the human form when every component
/// is rational, otherwise as the 4-tuple of canonical QuadExt forms.
inline std::string to_string(const Quaternion<QuadExt>& u) {
    bool rational = u.w.is_rational() && u.x.is_rational() && u.y.is_rational() &&
                    u.z.is_rational();
    if (rational)
        return to_string(Quaternion<Rational>{u.w.rat(), u.x.rat(), u.y.rat(), u.z.rat()});
    return "(" + u.w.str() + ", " + u.x.str() + ", " + u.y.str() + ", " + u.z.str() + ")";
}

inline std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.str(); }
inline std::ostream& operator<<(std::ostream& os, const QuadExt& v) { return os << v.str(); }
template <typename R>
std::ostream& operator<<(std::ostream& os, const Quaternion<R>& u) {
    return os << to_string(u);
}

/// Inverse of to_string(Quaternion<Rational>): a signed sum of terms,
/// each a rational coefficient, a unit i/j/k, or both. Repeated units
/// accumulate. Whitespace is ignored.
inline Quaternion<Rational> parse_quaternion(std::string_view text) {
    auto bad = [&] {
        return std::invalid_argument("not a quaternion: '" + std::string(text) + "'");
    };
    Rational comp[4]; // w, x, y, z
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    skip_ws();
    if (pos == text.size()) throw bad();
    bool any = false;
    while (true) {
        skip_ws();
        if (pos == text.size()) break;
        bool neg = false;
        if (text[pos] == '+' || text[pos] == '-') {
            neg = text[pos] == '-';
            ++pos;
            skip_ws();
        } else if (any) {
            throw bad(); // terms after the first need an explicit sign
        }
        size_t start = pos;
        while (pos < text.size() &&
               ((text[pos] >= '0' && text[pos] <= '9') || text[pos] == '/'))
            ++pos;
        Rational coeff(1);
        bool have_digits = pos > start;
        if (have_digits) coeff = parse_rational(text.substr(start, pos - start));
        int slot = 0;
        if (pos < text.size() &&
            (text[pos] == 'i' || text[pos] == 'j' || text[pos] == 'k')) {
            slot = text[pos] == 'i' ? 1 : text[pos] == 'j' ? 2 : 3;
            ++pos;
        } else if (!have_digits) {
            throw bad();
        }
        comp[slot] += neg ? -coeff : coeff;
        any = true;
    }
    if (!any) throw bad();
    return {comp[0], comp[1], comp[2], comp[3]};
}

} // namespace horadam
