#pragma once

/**
 * @file fueter.hpp
 * @brief The Fueter box operator, a 4-D Laplacian, and the bridge between
 *        the perpendicular partial and the box.
 *
 * The box operator acts by left multiplication, one imaginary unit per real
 * coordinate:
 *
 *     box F = dF/dx0 + i dF/dx1 + j dF/dx2 + k dF/dx3.
 *
 * For the analytic family the box needs no stencil at all: it collapses to
 * -2 times the perpendicular difference quotient,
 *
 *     dF/dx_perp = -1/2 box F,
 *
 * so box_analytic is exact and noise-free while box_numeric is the honest
 * finite-difference route. Their agreement is the bridge identity; feeding
 * box_analytic through the 4-D Laplacian checks the third-order equation
 * laplacian4(box F) = 0 satisfied by this function class.
 */

#include <stdexcept>

#include "quatcalc/analytic.hpp"
#include "quatcalc/errors.hpp"
#include "quatcalc/quaternion.hpp"

namespace quatcalc {

/// Finite-difference discretization: step size and accuracy order.
struct StencilConfig {
    double h = 1e-4;
    int order = 2; // 2 or 4

    void validate() const {
        if (!(h > 0.0))
            throw std::invalid_argument("StencilConfig: h must be positive");
        if (order != 2 && order != 4)
            throw std::invalid_argument("StencilConfig: order must be 2 or 4");
    }
};

inline StencilConfig default_first_derivative_stencil() { return {1e-4, 2}; }
inline StencilConfig default_second_derivative_stencil() { return {1e-3, 2}; }

/// box F computed exactly as -2 * perp_ratio(F, x). Real-coefficient F only:
/// that is the class the identity is established for.
inline Quaternion box_analytic(const AnalyticFunction& F, const Quaternion& x) {
    if (!F.real_coefficients())
        throw eval_domain_error("box_analytic: requires real coefficients");
    return -2.0 * perp_ratio(F, x);
}

namespace detail {

template <typename Field>
Quaternion central_difference(Field&& g, const Quaternion& x, const Quaternion& dir,
                              const StencilConfig& cfg) {
    const double h = cfg.h;
    if (cfg.order == 2)
        return (g(x + h * dir) - g(x - h * dir)) / (2.0 * h);
    return (-1.0 * g(x + 2.0 * h * dir) + 8.0 * g(x + h * dir) - 8.0 * g(x - h * dir) +
            g(x - 2.0 * h * dir)) /
           (12.0 * h);
}

template <typename Field>
Quaternion central_second_difference(Field&& g, const Quaternion& x, const Quaternion& dir,
                                     const StencilConfig& cfg) {
    const double h = cfg.h;
    if (cfg.order == 2)
        return (g(x + h * dir) - 2.0 * g(x) + g(x - h * dir)) / (h * h);
    return (-1.0 * g(x + 2.0 * h * dir) + 16.0 * g(x + h * dir) - 30.0 * g(x) +
            16.0 * g(x - h * dir) - g(x - 2.0 * h * dir)) /
           (12.0 * h * h);
}

} // namespace detail

/// box F by central differences along the four real coordinates, the
/// imaginary units multiplying from the left.
inline Quaternion box_numeric(const AnalyticFunction& F, const Quaternion& x,
                              const StencilConfig& cfg = default_first_derivative_stencil()) {
    cfg.validate();
    auto g = [&F](const Quaternion& q) { return eval(F, q); };
    const Quaternion d0 = detail::central_difference(g, x, Quaternion{1.0}, cfg);
    const Quaternion d1 = detail::central_difference(g, x, unit_i, cfg);
    const Quaternion d2 = detail::central_difference(g, x, unit_j, cfg);
    const Quaternion d3 = detail::central_difference(g, x, unit_k, cfg);
    return d0 + unit_i * d1 + unit_j * d2 + unit_k * d3;
}

/// Four-coordinate Laplacian of a quaternion-valued field by central second
/// differences, componentwise.
template <typename Field>
Quaternion laplacian4(Field&& g, const Quaternion& x,
                      const StencilConfig& cfg = default_second_derivative_stencil()) {
    cfg.validate();
    Quaternion sum;
    sum += detail::central_second_difference(g, x, Quaternion{1.0}, cfg);
    sum += detail::central_second_difference(g, x, unit_i, cfg);
    sum += detail::central_second_difference(g, x, unit_j, cfg);
    sum += detail::central_second_difference(g, x, unit_k, cfg);
    return sum;
}

} // namespace quatcalc
