#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace horadam {

using Int = boost::multiprecision::cpp_int;

/// Exact rational number in canonical form:
///   - denominator > 0
///   - gcd(|numerator|, denominator) == 1
///   - zero is 0/1
///
/// All operations are pure; values are immutable once constructed.
class Rational {
public:
    Rational() = default;
    Rational(int n) : num_(n) {}
    Rational(long long n) : num_(n) {}
    Rational(Int n) : num_(std::move(n)) {}
    Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    Rational(long long n, long long d) : Rational(Int(n), Int(d)) {}

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_ == 1 && num_ == 1; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        // denominators are positive, so cross-multiplication preserves order
        Int l = a.num_ * b.den_;
        Int r = b.num_ * a.den_;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    Rational operator-() const { return Rational(canonical_tag{}, -num_, den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (a.den_ == 1 && b.den_ == 1)
            return Rational(canonical_tag{}, a.num_ + b.num_, Int(1));
        Int g = gcd(a.den_, b.den_);
        if (g == 1)
            return Rational(canonical_tag{}, a.num_ * b.den_ + b.num_ * a.den_,
                            a.den_ * b.den_);
        Int bd = b.den_ / g;
        Int t = a.num_ * bd + b.num_ * (a.den_ / g);
        Int g2 = gcd(t, g);
        return Rational(canonical_tag{}, t / g2, (a.den_ / g2) * bd);
    }

    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

    friend Rational operator*(const Rational& a, const Rational& b) {
        if (a.num_.is_zero() || b.num_.is_zero()) return Rational();
        if (a.den_ == 1 && b.den_ == 1)
            return Rational(canonical_tag{}, a.num_ * b.num_, Int(1));
        // cross-reduce: inputs are canonical, so this is all the gcd work needed
        Int g1 = gcd(a.num_, b.den_);
        Int g2 = gcd(b.num_, a.den_);
        return Rational(canonical_tag{}, (a.num_ / g1) * (b.num_ / g2),
                        (a.den_ / g2) * (b.den_ / g1));
    }

    friend Rational operator/(const Rational& a, const Rational& b) {
        return a * b.reciprocal();
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    Rational reciprocal() const {
        if (num_.is_zero()) throw std::domain_error("Rational: division by zero");
        if (num_ < 0) return Rational(canonical_tag{}, -den_, -num_);
        return Rational(canonical_tag{}, den_, num_);
    }

    /// x^e with integer exponent; e < 0 requires x != 0.
    friend Rational pow(const Rational& x, long long e) {
        if (e == 0) return Rational(1);
        if (e < 0) return pow(x.reciprocal(), -e);
        // canonical form is preserved under coordinatewise powers
        return Rational(canonical_tag{}, pow_int(x.num_, e), pow_int(x.den_, e));
    }

    friend Rational abs(const Rational& x) { return x.is_negative() ? -x : x; }

    /// "num/den" in base 10; "/den" omitted when den == 1.
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) {
            s += '/';
            s += den_.str();
        }
        return s;
    }

private:
    struct canonical_tag {};
    Rational(canonical_tag, Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {}

    static Int pow_int(const Int& base, long long e) {
        using boost::multiprecision::pow;
        return pow(base, static_cast<unsigned>(e));
    }

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        if (num_.is_zero()) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Int g = gcd(num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Int num_{0};
    Int den_{1};
};

/// Parses "[-]digits[/digits]", e.g. "5", "-3", "1/2", "-7/4".
inline Rational parse_rational(std::string_view text) {
    auto bad = [&] {
        return std::invalid_argument("not a rational: '" + std::string(text) + "'");
    };
    size_t slash = text.find('/');
    std::string_view ns = text.substr(0, slash);
    if (ns.empty()) throw bad();
    size_t start = (ns[0] == '-' || ns[0] == '+') ? 1 : 0;
    if (start == ns.size()) throw bad();
    for (size_t i = start; i < ns.size(); ++i)
        if (ns[i] < '0' || ns[i] > '9') throw bad();
    Int num(std::string(ns));
    if (slash == std::string_view::npos) return Rational(std::move(num));
    std::string_view ds = text.substr(slash + 1);
    if (ds.empty()) throw bad();
    for (char c : ds)
        if (c < '0' || c > '9') throw bad();
    Int den((std::string(ds)));
    if (den.is_zero()) throw std::domain_error("Rational: zero denominator");
    return Rational(std::move(num), std::move(den));
}

} // namespace horadam
