#pragma once

/// Spin-1/2 realization of the calculus: arguments of the form
/// x = x0*I + sum_a x_a J_a with J_a = -(i/2)*sigma_a, so J_a^2 = -I/4 and
/// [J_a, J_b] = eps_abc J_c. The tangent split is commutator-based and never
/// rotates the basis; the first-order differential is assembled from matrix
/// functions evaluated through the spectral projectors of x.

#include <complex>
#include <stdexcept>
#include <utility>

#include "analytic.hpp"
#include "errors.hpp"
#include "mat2.hpp"

namespace quatcalc {

inline const Mat2 kJ1{{0.0, 0.0}, {0.0, -0.5}, {0.0, -0.5}, {0.0, 0.0}};
inline const Mat2 kJ2{{0.0, 0.0}, {-0.5, 0.0}, {0.5, 0.0}, {0.0, 0.0}};
inline const Mat2 kJ3{{0.0, -0.5}, {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.5}};

/// Max Frobenius deviation of [J1,J2]-J3 and its cyclic partners.
/// Zero in exact arithmetic; the entries are small dyadic rationals.
inline double structure_constants_deviation() {
    const double d12 = (commutator(kJ1, kJ2) - kJ3).frobenius_norm();
    const double d23 = (commutator(kJ2, kJ3) - kJ1).frobenius_norm();
    const double d31 = (commutator(kJ3, kJ1) - kJ2).frobenius_norm();
    return std::max({d12, d23, d31});
}

struct Su2Element {
    double x0 = 0.0, x1 = 0.0, x2 = 0.0, x3 = 0.0;

    /// Length of the generator part; the analogue of the imaginary radius.
    double r() const { return std::sqrt(x1 * x1 + x2 * x2 + x3 * x3); }

    double coeff_norm() const { return std::sqrt(x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3); }

    /// x0*I + x1*J1 + x2*J2 + x3*J3, written out so the map is exact.
    Mat2 matrix() const {
        return {{x0, -x3 / 2.0}, {-x2 / 2.0, -x1 / 2.0},
                {x2 / 2.0, -x1 / 2.0}, {x0, x3 / 2.0}};
    }

    /// Inverse of matrix(); throws if m is not in span{I, J1, J2, J3}.
    static Su2Element from_matrix(const Mat2& m) {
        const Su2Element y{(m.a.real() + m.d.real()) / 2.0,
                           -(m.b.imag() + m.c.imag()),
                           m.c.real() - m.b.real(),
                           m.d.imag() - m.a.imag()};
        const double residual = (m - y.matrix()).frobenius_norm();
        if (residual > 1e-9 * (1.0 + m.frobenius_norm()))
            throw std::invalid_argument("Su2Element: matrix is outside span{I, J1, J2, J3}");
        return y;
    }

    friend Su2Element operator+(const Su2Element& a, const Su2Element& b) {
        return {a.x0 + b.x0, a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3};
    }
    friend Su2Element operator-(const Su2Element& a, const Su2Element& b) {
        return {a.x0 - b.x0, a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3};
    }
    friend Su2Element operator*(const Su2Element& a, double s) {
        return {a.x0 * s, a.x1 * s, a.x2 * s, a.x3 * s};
    }
    friend Su2Element operator*(double s, const Su2Element& a) { return a * s; }
    friend bool operator==(const Su2Element& a, const Su2Element& b) {
        return a.x0 == b.x0 && a.x1 == b.x1 && a.x2 == b.x2 && a.x3 == b.x3;
    }

    friend std::ostream& operator<<(std::ostream& os, const Su2Element& e) {
        return os << '[' << e.x0 << ", " << e.x1 << ", " << e.x2 << ", " << e.x3 << ']';
    }
};

inline bool approx_equal(const Su2Element& a, const Su2Element& b,
                         double atol = 1e-12, double rtol = 1e-10) {
    auto ok = [&](double p, double q) {
        return std::abs(p - q) <= atol + rtol * std::max(std::abs(p), std::abs(q));
    };
    return ok(a.x0, b.x0) && ok(a.x1, b.x1) && ok(a.x2, b.x2) && ok(a.x3, b.x3);
}

/// Below this radius the element is a scalar matrix and has no split.
inline double pure_scalar_threshold(const Su2Element& x) {
    return 1e-12 * (1.0 + x.coeff_norm());
}

/// Tangent split by double commutator: perp = -(1/r^2)[x,[x,delta]],
/// parallel = delta - perp. No eigenbasis is ever constructed.
inline std::pair<Su2Element, Su2Element> su2_split(const Su2Element& x, const Su2Element& delta) {
    const double r = x.r();
    if (r <= pure_scalar_threshold(x))
        throw pure_scalar_error("su2_split: scalar base point has no preferred direction");
    const Mat2 xm = x.matrix();
    const Mat2 nested = commutator(xm, commutator(xm, delta.matrix()));
    const Su2Element perp = Su2Element::from_matrix(nested * (-1.0 / (r * r)));
    return {delta - perp, perp};
}

namespace detail {

/// Spectral data of x = x0 + r*(unit generator): projectors onto the two
/// eigenspaces and the matching eigenvalues x0 -/+ ir/2.
struct Su2Spectral {
    Mat2 p_plus, p_minus;
    std::complex<double> lambda_plus, lambda_minus;
};

inline Su2Spectral su2_spectral(const Su2Element& x, double r) {
    const Mat2 id = mat2_identity();
    const Mat2 generator = x.matrix() - id * x.x0;
    const Mat2 sigma_hat = generator * std::complex<double>{0.0, 2.0 / r};
    return {(id + sigma_hat) * 0.5, (id - sigma_hat) * 0.5,
            {x.x0, -r / 2.0}, {x.x0, r / 2.0}};
}

inline Mat2 su2_matrix_function(const AnalyticFunction& f, const Su2Spectral& s,
                                std::complex<double> shift) {
    return s.p_plus * eval_complex(f, s.lambda_plus + shift)
         + s.p_minus * eval_complex(f, s.lambda_minus + shift);
}

} // namespace detail

/// F evaluated on a spin-1/2 argument through its spectral decomposition.
inline Mat2 su2_eval(const AnalyticFunction& f, const Su2Element& x) {
    const double r = x.r();
    if (r <= pure_scalar_threshold(x)) {
        const std::complex<double> v = eval_complex(f, {x.x0, 0.0});
        return mat2_identity() * v;
    }
    return detail::su2_matrix_function(f, detail::su2_spectral(x, r), {0.0, 0.0});
}

/// First-order differential of F at x in direction delta:
///   F'(x) dpar + {F(x+ir) - F(x-ir)} (2ir)^-1 dperp
///   + {F(x+ir) + F(x-ir) - 2F(x)} (2r)^-1 [J3, dperp],
/// with [J3, dperp] taken in its frame-free form (1/r)[x, delta].
inline Mat2 su2_first_order(const AnalyticFunction& f, const Su2Element& x,
                            const Su2Element& delta) {
    if (!f.real_coefficients())
        throw eval_domain_error("su2_first_order: coefficients must be real");
    const double r = x.r();
    if (r <= pure_scalar_threshold(x))
        throw pure_scalar_error("su2_first_order: base point is a scalar matrix");

    const auto [parallel, perp] = su2_split(x, delta);
    const auto spectral = detail::su2_spectral(x, r);
    const Mat2 f_x = detail::su2_matrix_function(f, spectral, {0.0, 0.0});
    const Mat2 f_up = detail::su2_matrix_function(f, spectral, {0.0, r});
    const Mat2 f_down = detail::su2_matrix_function(f, spectral, {0.0, -r});
    const Mat2 fp_x = detail::su2_matrix_function(derivative(f), spectral, {0.0, 0.0});

    const Mat2 j3_bracket = commutator(x.matrix(), delta.matrix()) * (1.0 / r);
    const std::complex<double> inv_2ir{0.0, -1.0 / (2.0 * r)};

    return fp_x * parallel.matrix()
         + (f_up - f_down) * inv_2ir * perp.matrix()
         + (f_up + f_down - f_x * 2.0) * (1.0 / (2.0 * r)) * j3_bracket;
}

} // namespace quatcalc
