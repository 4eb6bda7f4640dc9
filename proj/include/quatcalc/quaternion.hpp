#pragma once

/**
 * @file quaternion.hpp
 * @brief Hamilton quaternions, polar form, and the parallel/perpendicular
 *        split of a displacement relative to a base point.
 *
 * A quaternion is written q = w + i*x + j*y + k*z with the usual
 * multiplication table i^2 = j^2 = k^2 = -1, ij = -ji = k (cyclic).
 *
 * Every point with a nonzero imaginary part has a polar form
 *
 *     q = x0 + u * r,    r = |imag(q)|,   u = imag(q)/r,   u^2 = -1,
 *
 * i.e. u is a position-dependent "local i". A displacement d taken at base
 * point q splits into the part commuting with q and the part that conjugates
 * it:
 *
 *     d_par  = (d - u*d*u) / 2      (commutes: d_par * q == q * d_par)
 *     d_perp = d - d_par            (conjugates: d_perp * q == conj(q) * d_perp)
 *
 * d_par spans {1, u}; d_perp is the Euclidean complement of that plane.
 */

#include <cmath>
#include <ostream>

#include "quatcalc/errors.hpp"

namespace quatcalc {

struct Quaternion {
    double w = 0.0; // scalar part
    double x = 0.0; // i component
    double y = 0.0; // j component
    double z = 0.0; // k component

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_)
        : w(w_), x(x_), y(y_), z(z_) {}
    constexpr Quaternion(double real) : w(real) {} // NOLINT: implicit by design

    constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }

    constexpr Quaternion& operator+=(const Quaternion& o) {
        w += o.w; x += o.x; y += o.y; z += o.z;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& o) {
        w -= o.w; x -= o.x; y -= o.y; z -= o.z;
        return *this;
    }
    constexpr Quaternion& operator*=(double s) {
        w *= s; x *= s; y *= s; z *= s;
        return *this;
    }
    constexpr Quaternion& operator/=(double s) { return *this *= 1.0 / s; }

    friend constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
    friend constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
    friend constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
    friend constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
    friend constexpr Quaternion operator/(Quaternion a, double s) { return a /= s; }

    /// Hamilton product. Bilinear and associative, not commutative.
    friend constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
        return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
    }

    friend constexpr bool operator==(const Quaternion& a, const Quaternion& b) {
        return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
    }

    /// Conjugation: negates exactly the three imaginary components.
    constexpr Quaternion conj() const { return {w, -x, -y, -z}; }

    constexpr Quaternion imag() const { return {0.0, x, y, z}; }

    constexpr double norm2() const { return w * w + x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm2()); }

    constexpr double imag_norm2() const { return x * x + y * y + z * z; }
    /// The polar radius r = sqrt(x^2 + y^2 + z^2).
    double imag_norm() const { return std::sqrt(imag_norm2()); }

    /// q^{-1} = conj(q) / |q|^2. Unchecked: the zero quaternion yields infs.
    constexpr Quaternion inverse() const {
        const double n2 = norm2();
        return {w / n2, -x / n2, -y / n2, -z / n2};
    }

    friend std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
        return os << '[' << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ']';
    }
};

inline constexpr Quaternion unit_i{0.0, 1.0, 0.0, 0.0};
inline constexpr Quaternion unit_j{0.0, 0.0, 1.0, 0.0};
inline constexpr Quaternion unit_k{0.0, 0.0, 0.0, 1.0};

constexpr Quaternion conj(const Quaternion& q) { return q.conj(); }

/// Componentwise |a-b| <= atol + rtol*max(|a|,|b|).
inline bool approx_equal(const Quaternion& a, const Quaternion& b,
                         double atol = 1e-12, double rtol = 1e-10) {
    auto ok = [&](double p, double q) {
        return std::abs(p - q) <= atol + rtol * std::max(std::abs(p), std::abs(q));
    };
    return ok(a.w, b.w) && ok(a.x, b.x) && ok(a.y, b.y) && ok(a.z, b.z);
}

/// Below this radius a point counts as pure-real and has no polar frame.
inline double pure_real_threshold(const Quaternion& q) {
    return 1e-12 * (1.0 + q.norm());
}

inline bool is_pure_real(const Quaternion& q) {
    return q.imag_norm() <= pure_real_threshold(q);
}

/// Polar form q = x0 + u*r with u a unit imaginary, u*u = -1, r > 0.
struct PolarForm {
    double x0 = 0.0;
    double r = 0.0;
    Quaternion u; // pure imaginary, unit norm

    Quaternion reconstruct() const { return Quaternion{x0} + u * r; }
};

inline PolarForm polar(const Quaternion& q) {
    const double r = q.imag_norm();
    if (r <= pure_real_threshold(q))
        throw pure_real_error("polar: imaginary part below the pure-real threshold");
    return {q.w, r, q.imag() / r};
}

/// A displacement decomposed at a base point into the component commuting
/// with the point (parallel) and the component conjugating it (perpendicular).
struct TangentSplit {
    Quaternion parallel;
    Quaternion perp;
    PolarForm frame; // polar form of the base point
};

inline TangentSplit split(const Quaternion& base, const Quaternion& delta) {
    const PolarForm pf = polar(base);
    const Quaternion parallel = (delta - pf.u * delta * pf.u) * 0.5;
    return {parallel, delta - parallel, pf};
}

} // namespace quatcalc
