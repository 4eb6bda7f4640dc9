#pragma once

/// Minimal complex 2x2 matrix arithmetic for the su(2) layer and its
/// brute-force oracles. Deliberately separate from the quaternion type:
/// the algebra constants differ (J_a^2 = -I/4, not -1).

#include <cmath>
#include <complex>
#include <ostream>

namespace quatcalc {

struct Mat2 {
    using C = std::complex<double>;

    // row-major [[a, b], [c, d]]
    C a{0.0}, b{0.0}, c{0.0}, d{0.0};

    friend Mat2 operator+(const Mat2& x, const Mat2& y) {
        return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
    }
    friend Mat2 operator-(const Mat2& x, const Mat2& y) {
        return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
    }
    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend Mat2 operator*(const Mat2& x, C s) { return {x.a * s, x.b * s, x.c * s, x.d * s}; }
    friend Mat2 operator*(C s, const Mat2& x) { return x * s; }
    friend Mat2 operator*(const Mat2& x, double s) { return x * C{s, 0.0}; }
    friend Mat2 operator*(double s, const Mat2& x) { return x * C{s, 0.0}; }
    friend Mat2 operator-(const Mat2& x) { return {-x.a, -x.b, -x.c, -x.d}; }

    Mat2& operator+=(const Mat2& y) { return *this = *this + y; }
    Mat2& operator-=(const Mat2& y) { return *this = *this - y; }

    /// Conjugate transpose.
    Mat2 adjoint() const { return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)}; }

    C trace() const { return a + d; }

    double frobenius_norm() const {
        return std::sqrt(std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d));
    }

    friend std::ostream& operator<<(std::ostream& os, const Mat2& m) {
        return os << "[[" << m.a << ", " << m.b << "], [" << m.c << ", " << m.d << "]]";
    }
};

inline Mat2 mat2_identity() { return {1.0, 0.0, 0.0, 1.0}; }

inline Mat2 commutator(const Mat2& x, const Mat2& y) { return x * y - y * x; }

/// Integer matrix power by repeated multiplication; oracle-grade.
inline Mat2 mat_power(const Mat2& m, int n) {
    Mat2 result = mat2_identity();
    for (int k = 0; k < n; ++k)
        result = result * m;
    return result;
}

/// Matrix exponential by scaling-and-squaring with a long Taylor tail;
/// oracle-grade for the moderate norms used here.
inline Mat2 mat_exp(const Mat2& m) {
    int scale = 0;
    double norm = m.frobenius_norm();
    while (norm > 0.5) {
        norm *= 0.5;
        ++scale;
    }
    const double factor = std::ldexp(1.0, -scale);
    const Mat2 small = m * factor;

    Mat2 sum = mat2_identity();
    Mat2 term = mat2_identity();
    for (int k = 1; k <= 24; ++k) {
        term = term * small * (1.0 / k);
        sum += term;
    }
    for (int k = 0; k < scale; ++k)
        sum = sum * sum;
    return sum;
}

} // namespace quatcalc
