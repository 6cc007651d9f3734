#pragma once

#include <utility>

namespace horadam {

/// Hamilton quaternion w + x i + y j + z k with coefficients in a
/// commutative ring R (here Rational or QuadExt). Multiplication follows
/// i^2 = j^2 = k^2 = ijk = -1. R must supply +, -, *, ==, and is_zero().
template <typename R>
struct Quaternion {
    R w, x, y, z;

    Quaternion(R w_, R x_, R y_, R z_)
        : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

    friend bool operator==(const Quaternion& a, const Quaternion& b) {
        return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
    }

    Quaternion operator-() const { return Quaternion(-w, -x, -y, -z); }

    friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
        return Quaternion(a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z);
    }

    friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
        return Quaternion(a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z);
    }

    friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
        return Quaternion(a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w);
    }

    // scalars of R are central, so one-sided definitions suffice
    friend Quaternion operator*(const Quaternion& a, const R& s) {
        return Quaternion(a.w * s, a.x * s, a.y * s, a.z * s);
    }
    friend Quaternion operator*(const R& s, const Quaternion& a) { return a * s; }

    friend Quaternion operator+(const Quaternion& a, const R& s) {
        return Quaternion(a.w + s, a.x, a.y, a.z);
    }
    friend Quaternion operator-(const Quaternion& a, const R& s) {
        return Quaternion(a.w - s, a.x, a.y, a.z);
    }

    Quaternion& operator+=(const Quaternion& o) { return *this = *this + o; }
    Quaternion& operator-=(const Quaternion& o) { return *this = *this - o; }
    Quaternion& operator*=(const Quaternion& o) { return *this = *this * o; }

    /// Negates the vector part.
    Quaternion conjugate() const { return Quaternion(w, -x, -y, -z); }

    /// w^2 + x^2 + y^2 + z^2; multiplicative.
    R norm() const { return w * w + x * x + y * y + z * z; }

    bool is_zero() const {
        return w.is_zero() && x.is_zero() && y.is_zero() && z.is_zero();
    }

    /// True when the scalar part vanishes (pure vector quaternion).
    bool is_pure() const { return w.is_zero(); }
};

template <typename R>
Quaternion<R> commutator(const Quaternion<R>& u, const Quaternion<R>& v) {
    return u * v - v * u;
}

/// Applies f to each component; used to lift Quaternion<Rational> into
/// Quaternion<QuadExt> and to project back.
template <typename R, typename F>
auto map_components(const Quaternion<R>& u, F&& f) -> Quaternion<decltype(f(u.w))> {
    return {f(u.w), f(u.x), f(u.y), f(u.z)};
}

} // namespace horadam
