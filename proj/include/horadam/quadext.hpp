#pragma once

#include "horadam/rational.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace horadam {

/// Element x + y*sqrt(D) of the ring Q[t]/(t^2 - D), D a nonzero integer.
///
/// D is carried by each value and must agree across binary operations;
/// mixing discriminants throws. D may be negative or a perfect square --
/// the ring is then not a field, so inversion checks the ring norm
/// x^2 - D*y^2 instead of assuming invertibility.
class QuadExt {
public:
    QuadExt(Rational x, Rational y, Int d)
        : rat_(std::move(x)), irr_(std::move(y)), d_(std::move(d)) {
        if (d_.is_zero()) throw std::domain_error("QuadExt: discriminant must be nonzero");
    }

    static QuadExt from_rational(Rational x, Int d) {
        return QuadExt(std::move(x), Rational(), std::move(d));
    }

    const Rational& rat() const { return rat_; }
    const Rational& irr() const { return irr_; }
    const Int& disc() const { return d_; }

    bool is_zero() const { return rat_.is_zero() && irr_.is_zero(); }
    bool is_rational() const { return irr_.is_zero(); }

    friend bool operator==(const QuadExt& a, const QuadExt& b) {
        return a.d_ == b.d_ && a.rat_ == b.rat_ && a.irr_ == b.irr_;
    }

    QuadExt operator-() const { return QuadExt(-rat_, -irr_, d_); }

    friend QuadExt operator+(const QuadExt& a, const QuadExt& b) {
        a.require_same_ring(b);
        return QuadExt(a.rat_ + b.rat_, a.irr_ + b.irr_, a.d_);
    }

    friend QuadExt operator-(const QuadExt& a, const QuadExt& b) {
        a.require_same_ring(b);
        return QuadExt(a.rat_ - b.rat_, a.irr_ - b.irr_, a.d_);
    }

    /// (x1 + y1 sqrt(D))(x2 + y2 sqrt(D)) = (x1 x2 + D y1 y2) + (x1 y2 + x2 y1) sqrt(D)
    friend QuadExt operator*(const QuadExt& a, const QuadExt& b) {
        a.require_same_ring(b);
        if (a.irr_.is_zero() && b.irr_.is_zero())
            return QuadExt(a.rat_ * b.rat_, Rational(), a.d_);
        return QuadExt(a.rat_ * b.rat_ + Rational(a.d_) * (a.irr_ * b.irr_),
                       a.rat_ * b.irr_ + b.rat_ * a.irr_, a.d_);
    }

    friend QuadExt operator/(const QuadExt& a, const QuadExt& b) { return a * b.inverse(); }

    QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
    QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
    QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }

    /// sqrt(D) -> -sqrt(D); a ring homomorphism.
    QuadExt conjugate() const { return QuadExt(rat_, -irr_, d_); }

    /// x^2 - D y^2; multiplicative, zero exactly on the non-invertible elements.
    Rational ring_norm() const { return rat_ * rat_ - Rational(d_) * (irr_ * irr_); }

    QuadExt inverse() const {
        Rational n = ring_norm();
        if (n.is_zero()) throw std::domain_error("QuadExt: zero ring norm, not invertible");
        return QuadExt(rat_ / n, -irr_ / n, d_);
    }

    friend QuadExt pow(const QuadExt& u, long long e) {
        if (e < 0) return pow(u.inverse(), -e);
        QuadExt acc = from_rational(Rational(1), u.d_);
        QuadExt base = u;
        unsigned long long k = static_cast<unsigned long long>(e);
        while (k != 0) {
            if (k & 1) acc *= base;
            k >>= 1;
            if (k != 0) base *= base;
        }
        return acc;
    }

    /// Canonical textual form: ["x", "y", "D"].
    std::string str() const {
        return "[\"" + rat_.str() + "\", \"" + irr_.str() + "\", \"" + d_.str() + "\"]";
    }

private:
    void require_same_ring(const QuadExt& o) const {
        if (d_ != o.d_)
            throw std::domain_error("QuadExt: mixed discriminants " + d_.str() + " and " +
                                    o.d_.str());
    }

    Rational rat_;
    Rational irr_;
    Int d_;
};

} // namespace horadam
