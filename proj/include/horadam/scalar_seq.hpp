#pragma once

#include "horadam/params.hpp"
#include "horadam/quadext.hpp"
#include "horadam/rational.hpp"

#include <stdexcept>
#include <utility>

namespace horadam {

/// W_n for any integer n. Forward via the recurrence, backward via
/// W_{n-2} = (W_n - p W_{n-1}) / q.
inline Rational horadam_term(const HoradamParams& params, long long n) {
    params.validate();
    if (n >= 0) {
        Rational prev = params.a;
        Rational cur = params.b;
        if (n == 0) return prev;
        for (long long i = 1; i < n; ++i) {
            Rational next = params.p * cur + params.q * prev;
            prev = std::move(cur);
            cur = std::move(next);
        }
        return cur;
    }
    Rational above = params.b; // W_{k+1}
    Rational at = params.a;    // W_k, k counting down from 0
    for (long long k = 0; k > n; --k) {
        Rational below = (above - params.p * at) / params.q;
        above = std::move(at);
        at = std::move(below);
    }
    return at;
}

/// (p,q)-Fibonacci: seeds 0, 1.
inline Rational pq_fibonacci(const Rational& p, const Rational& q, long long n) {
    return horadam_term(fibonacci_params(p, q), n);
}

/// (p,q)-Lucas: seeds 2, p.
inline Rational pq_lucas(const Rational& p, const Rational& q, long long n) {
    return horadam_term(lucas_params(p, q), n);
}

/// W_n = (A alpha^n - B beta^n) / (alpha - beta), evaluated in
/// Q[t]/(t^2 - disc). The result always has zero sqrt(D) part and its
/// rational part equals horadam_term. Negative n uses inverse root powers
/// (alpha and beta have ring norm -q != 0, so they are invertible even
/// when disc is a perfect square).
inline QuadExt binet_scalar(const DerivedConstants& c, long long n) {
    QuadExt num = c.A * pow(c.alpha, n) - c.B * pow(c.beta, n);
    return num * c.delta.inverse();
}

inline QuadExt binet_scalar(const HoradamParams& params, long long n) {
    return binet_scalar(DerivedConstants::from(params), n);
}

/// (F_n, L_n) in O(log n) ring operations from the doubling identities
///   F_{2n} = F_n L_n,
///   L_{2n} = L_n^2 - 2(-q)^n,
/// stepping up one index with 2 F_{n+1} = p F_n + L_n and
/// 2 L_{n+1} = (p^2 + 4q) F_n + p L_n.
inline std::pair<Rational, Rational> fast_double(const Rational& p, const Rational& q,
                                                 unsigned long long n) {
    HoradamParams probe = fibonacci_params(p, q);
    probe.validate();
    Rational F(0), L(2);
    if (n == 0) return {std::move(F), std::move(L)};
    Rational D = probe.discriminant();
    Rational neg_q = -q;
    Rational sign_pow(1); // (-q)^k for the index k currently held in (F, L)
    Rational two(2);
    int bit = 63;
    while (((n >> bit) & 1ULL) == 0) --bit;
    for (; bit >= 0; --bit) {
        Rational f2 = F * L;
        Rational l2 = L * L - two * sign_pow;
        sign_pow *= sign_pow;
        F = std::move(f2);
        L = std::move(l2);
        if ((n >> bit) & 1ULL) {
            Rational fs = (p * F + L) / two;
            Rational ls = (D * F + p * L) / two;
            F = std::move(fs);
            L = std::move(ls);
            sign_pow *= neg_q;
        }
    }
    return {std::move(F), std::move(L)};
}

/// F_{-n} = -(-q)^{-n} F_n, the negative-index extension consistent with
/// both the backward recurrence and the Binet formula for every q != 0.
/// (The variant -(-q)^{n} F_n coincides with it only when |q| = 1.)
inline Rational neg_index_fib(const Rational& p, const Rational& q, long long n) {
    Rational fn = pq_fibonacci(p, q, n);
    if (fn.is_zero()) return fn;
    return -(pow(-q, -n) * fn);
}

} // namespace horadam
