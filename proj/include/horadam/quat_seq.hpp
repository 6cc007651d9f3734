#pragma once

#include "horadam/params.hpp"
#include "horadam/quaternion.hpp"
#include "horadam/scalar_seq.hpp"

#include <cstddef>
#include <mutex>
#include <utility>
#include <vector>

namespace horadam {

/// All constants attached to one parameter set (p, q, a, b):
/// the derived root constants, the fixed quaternions omega = q i + p j - k,
/// Q_{L,0} and Q_{F,0}, the scalars [q] = 1 - q + q^2 - q^3, r and s, and
/// the root quaternions alpha_bar = 1 + alpha i + alpha^2 j + alpha^3 k,
/// beta_bar likewise.
///
/// The context is logically immutable and safe to share across threads;
/// scalar_term memoizes recurrence values behind a mutex.
class HoradamQuatContext {
public:
    explicit HoradamQuatContext(HoradamParams params)
        : params_(std::move(params)),
          consts_(DerivedConstants::from(params_)),
          omega_(Rational(0), params_.q, params_.p, Rational(-1)),
          bracket_q_(Rational(1) - params_.q + params_.q * params_.q -
                     params_.q * params_.q * params_.q),
          lucas_q0_(make_seed_quat(lucas_params(params_.p, params_.q))),
          fib_q0_(make_seed_quat(fibonacci_params(params_.p, params_.q))),
          alpha_bar_(make_root_quat(consts_.alpha)),
          beta_bar_(make_root_quat(consts_.beta)) {
        auto rs = rs_constants_of(params_.p, params_.q);
        r_ = std::move(rs.first);
        s_ = std::move(rs.second);
        fwd_ = {params_.a, params_.b};
    }

    HoradamQuatContext(const HoradamQuatContext& o)
        : params_(o.params_), consts_(o.consts_), omega_(o.omega_), bracket_q_(o.bracket_q_),
          lucas_q0_(o.lucas_q0_), fib_q0_(o.fib_q0_), alpha_bar_(o.alpha_bar_),
          beta_bar_(o.beta_bar_), r_(o.r_), s_(o.s_) {
        std::scoped_lock lock(o.mutex_);
        fwd_ = o.fwd_;
        bwd_ = o.bwd_;
    }

    const HoradamParams& params() const { return params_; }
    const DerivedConstants& consts() const { return consts_; }
    const Quaternion<Rational>& omega() const { return omega_; }
    const Rational& bracket_q() const { return bracket_q_; }
    const Quaternion<Rational>& lucas_q0() const { return lucas_q0_; }
    const Quaternion<Rational>& fib_q0() const { return fib_q0_; }
    const Rational& r_const() const { return r_; }
    const Rational& s_const() const { return s_; }
    const Quaternion<QuadExt>& alpha_bar() const { return alpha_bar_; }
    const Quaternion<QuadExt>& beta_bar() const { return beta_bar_; }

    /// Memoized W_n; any integer n.
    Rational scalar_term(long long n) const {
        std::scoped_lock lock(mutex_);
        if (n >= 0) {
            while (static_cast<long long>(fwd_.size()) <= n) {
                size_t k = fwd_.size();
                fwd_.push_back(params_.p * fwd_[k - 1] + params_.q * fwd_[k - 2]);
            }
            return fwd_[static_cast<size_t>(n)];
        }
        size_t depth = static_cast<size_t>(-n); // want W_{-depth} = bwd_[depth - 1]
        while (bwd_.size() < depth) {
            // W_{-(k+1)} = (W_{-k+1} - p W_{-k}) / q
            size_t k = bwd_.size();
            const Rational& w_k = k == 0 ? fwd_[0] : bwd_[k - 1];
            const Rational& w_k1 = k == 0 ? fwd_[1] : (k == 1 ? fwd_[0] : bwd_[k - 2]);
            bwd_.push_back((w_k1 - params_.p * w_k) / params_.q);
        }
        return bwd_[depth - 1];
    }

    QuadExt lift(const Rational& v) const { return QuadExt::from_rational(v, consts_.disc); }

    Quaternion<QuadExt> lift(const Quaternion<Rational>& u) const {
        return map_components(u, [&](const Rational& c) { return lift(c); });
    }

    /// (F2+F4+F6)/2 and 1 + p/2 (F2+F4+F6) + q (F1+F3+F5) over the
    /// (p,q)-Fibonacci numbers.
    static std::pair<Rational, Rational> rs_constants_of(const Rational& p, const Rational& q) {
        Rational f[7];
        f[0] = Rational(0);
        f[1] = Rational(1);
        for (int i = 2; i <= 6; ++i) f[i] = p * f[i - 1] + q * f[i - 2];
        Rational even = f[2] + f[4] + f[6];
        Rational odd = f[1] + f[3] + f[5];
        Rational half(1, 2);
        Rational r = Rational(1) + p * half * even + q * odd;
        Rational s = half * even;
        return {std::move(r), std::move(s)};
    }

private:
    static Quaternion<Rational> make_seed_quat(const HoradamParams& params) {
        Rational w2 = params.p * params.b + params.q * params.a;
        Rational w3 = params.p * w2 + params.q * params.b;
        return {params.a, params.b, std::move(w2), std::move(w3)};
    }

    Quaternion<QuadExt> make_root_quat(const QuadExt& root) const {
        QuadExt one = QuadExt::from_rational(Rational(1), consts_.disc);
        QuadExt r2 = root * root;
        return {one, root, r2, r2 * root};
    }

    HoradamParams params_;
    DerivedConstants consts_;
    Quaternion<Rational> omega_;
    Rational bracket_q_;
    Quaternion<Rational> lucas_q0_;
    Quaternion<Rational> fib_q0_;
    Quaternion<QuadExt> alpha_bar_;
    Quaternion<QuadExt> beta_bar_;
    Rational r_, s_;

    mutable std::mutex mutex_;
    mutable std::vector<Rational> fwd_; // W_0, W_1, ...
    mutable std::vector<Rational> bwd_; // W_{-1}, W_{-2}, ...
};

/// Q_{w,n} = W_n + W_{n+1} i + W_{n+2} j + W_{n+3} k.
inline Quaternion<Rational> qw_term(const HoradamQuatContext& ctx, long long n) {
    return {ctx.scalar_term(n), ctx.scalar_term(n + 1), ctx.scalar_term(n + 2),
            ctx.scalar_term(n + 3)};
}

/// Q_{w,n} = (A alpha_bar alpha^n - B beta_bar beta^n) / (alpha - beta).
/// Every component has zero sqrt(D) part and matches qw_term.
inline Quaternion<QuadExt> binet_quat(const HoradamQuatContext& ctx, long long n) {
    const DerivedConstants& c = ctx.consts();
    QuadExt sa = c.A * pow(c.alpha, n);
    QuadExt sb = c.B * pow(c.beta, n);
    QuadExt inv_delta = c.delta.inverse();
    return (ctx.alpha_bar() * sa - ctx.beta_bar() * sb) * inv_delta;
}

enum class SpecialKind { Fibonacci, Lucas };

/// The (p,q)-Fibonacci quaternion (seeds 0, 1) or (p,q)-Lucas quaternion
/// (seeds 2, p) at index n.
inline Quaternion<Rational> special_quat(SpecialKind kind, const Rational& p, const Rational& q,
                                         long long n) {
    HoradamParams params =
        kind == SpecialKind::Fibonacci ? fibonacci_params(p, q) : lucas_params(p, q);
    HoradamQuatContext ctx(std::move(params));
    return qw_term(ctx, n);
}

/// (b - a beta)(b - a alpha) = b^2 - p a b - q a^2.
inline Rational ab_product(const HoradamParams& params) {
    return params.b * params.b - params.p * params.a * params.b -
           params.q * params.a * params.a;
}

inline std::pair<Rational, Rational> rs_constants(const Rational& p, const Rational& q) {
    return HoradamQuatContext::rs_constants_of(p, q);
}

} // namespace horadam
