#pragma once

#include "horadam/quadext.hpp"
#include "horadam/rational.hpp"

#include <stdexcept>

namespace horadam {

/// Parameters of the Horadam sequence W_n = p W_{n-1} + q W_{n-2},
/// W_0 = a, W_1 = b, and of the quaternion sequence built on it.
struct HoradamParams {
    Rational p, q, a, b;

    /// p^2 + 4q, the discriminant of t^2 - p t - q.
    Rational discriminant() const { return p * p + Rational(4) * q; }

    /// q != 0 (negative indices need 1/q) and p^2 + 4q != 0 (distinct roots).
    void validate() const {
        if (q.is_zero())
            throw std::invalid_argument("HoradamParams: q must be nonzero");
        if (discriminant().is_zero())
            throw std::invalid_argument("HoradamParams: p^2 + 4q must be nonzero");
    }

    bool valid() const { return !q.is_zero() && !discriminant().is_zero(); }

    friend bool operator==(const HoradamParams&, const HoradamParams&) = default;
};

inline HoradamParams fibonacci_params(Rational p, Rational q) {
    return {std::move(p), std::move(q), Rational(0), Rational(1)};
}

inline HoradamParams lucas_params(Rational p, Rational q) {
    Rational b = p;
    return {std::move(p), std::move(q), Rational(2), std::move(b)};
}

/// Exact realizations of the characteristic roots alpha, beta of
/// t^2 - p t - q and the seed constants A, B.
///
/// With D = p^2 + 4q = N/M in lowest terms, sqrt(D) = sqrt(N*M)/M, so all
/// values live in Q[t]/(t^2 - disc) with the integer disc = N*M. For the
/// usual integer parameters M = 1 and disc is just p^2 + 4q.
struct DerivedConstants {
    Rational D;     // p^2 + 4q
    Int disc;       // integer under the radical
    QuadExt alpha;  // (p + sqrt(D)) / 2
    QuadExt beta;   // (p - sqrt(D)) / 2
    QuadExt delta;  // alpha - beta = sqrt(D)
    QuadExt A;      // b - a*beta
    QuadExt B;      // b - a*alpha
    Rational AB;    // b^2 - p a b - q a^2, the rational value of A*B

    static DerivedConstants from(const HoradamParams& params) {
        params.validate();
        Rational D = params.discriminant();
        Int disc = D.num() * D.den();
        Rational half(1, 2);
        Rational root_coeff = Rational(Int(1), D.den()); // sqrt(D) = root_coeff * sqrt(disc)
        QuadExt delta(Rational(0), root_coeff, disc);
        QuadExt alpha(params.p * half, root_coeff * half, disc);
        QuadExt beta(params.p * half, -(root_coeff * half), disc);
        QuadExt b_lift = QuadExt::from_rational(params.b, disc);
        QuadExt a_lift = QuadExt::from_rational(params.a, disc);
        QuadExt A = b_lift - a_lift * beta;
        QuadExt B = b_lift - a_lift * alpha;
        Rational AB =
            params.b * params.b - params.p * params.a * params.b - params.q * params.a * params.a;
        return DerivedConstants{std::move(D),     std::move(disc), std::move(alpha),
                                std::move(beta),  std::move(delta), std::move(A),
                                std::move(B),     std::move(AB)};
    }
};

} // namespace horadam
