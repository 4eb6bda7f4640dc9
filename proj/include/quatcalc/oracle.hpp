#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force reference machinery the closed forms are judged
 *        against: direct noncommutative expansion, quadrature of the
 *        exponential expansion integral, and residual slope fitting.
 *
 * Nothing here reuses the differential's closed forms except where a
 * residual is, by definition, "value minus closed form".
 */

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "quatcalc/analytic.hpp"
#include "quatcalc/differential.hpp"
#include "quatcalc/quaternion.hpp"

namespace quatcalc {

/// Exact first-order term of (x + d)^n: the sum over all placements of d,
/// sum_{m=0}^{n-1} x^{n-m-1} d x^m. Independent route to dcal on pow(n).
inline Quaternion direct_power_first_order(int n, const Quaternion& x, const Quaternion& delta) {
    if (n < 1)
        throw std::invalid_argument("direct_power_first_order: n >= 1 required");
    std::vector<Quaternion> p(static_cast<std::size_t>(n));
    p[0] = Quaternion{1.0};
    for (int m = 1; m < n; ++m)
        p[m] = p[m - 1] * x;
    Quaternion sum;
    for (int m = 0; m < n; ++m)
        sum += p[n - 1 - m] * delta * p[m];
    return sum;
}

namespace detail {

/// Gauss-Legendre nodes and weights on [0, 1].
inline void gauss_legendre01(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(static_cast<std::size_t>(n), 0.0);
    weights.assign(static_cast<std::size_t>(n), 0.0);
    const double pi = std::acos(-1.0);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Newton from the Chebyshev-like initial guess; converges in a few steps.
        double t = std::cos(pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 64; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int k = 0; k < n; ++k) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k + 1.0) * t * p1 - k * p2) / (k + 1.0);
            }
            pp = n * (t * p0 - p1) / (t * t - 1.0);
            const double step = p0 / pp;
            t -= step;
            if (std::abs(step) < 1e-15)
                break;
        }
        const double w = 2.0 / ((1.0 - t * t) * pp * pp);
        // map [-1,1] -> [0,1]
        nodes[static_cast<std::size_t>(i)] = 0.5 * (1.0 - t);
        nodes[static_cast<std::size_t>(n - 1 - i)] = 0.5 * (1.0 + t);
        weights[static_cast<std::size_t>(i)] = 0.5 * w;
        weights[static_cast<std::size_t>(n - 1 - i)] = 0.5 * w;
    }
}

} // namespace detail

/// Gauss-Legendre quadrature of integral_0^1 e^{(1-s)x} d e^{sx} ds,
/// the integral representation of the first-order term of e^{x+d}.
inline Quaternion exp_expansion_quadrature(const Quaternion& x, const Quaternion& delta,
                                           int nodes) {
    if (nodes < 8)
        throw std::invalid_argument("exp_expansion_quadrature: nodes >= 8 required");
    std::vector<double> s, w;
    detail::gauss_legendre01(nodes, s, w);
    const AnalyticFunction e = AnalyticFunction::exp();
    Quaternion sum;
    for (int i = 0; i < nodes; ++i) {
        const Quaternion left = eval(e, (1.0 - s[static_cast<std::size_t>(i)]) * x);
        const Quaternion right = eval(e, s[static_cast<std::size_t>(i)] * x);
        sum += w[static_cast<std::size_t>(i)] * (left * delta * right);
    }
    return sum;
}

enum class SlopeStatus {
    Ok,
    DegenerateResidual, // every residual below the rounding floor
    PoorFit             // r2 < 0.99: fit unusable
};

/// Log-log convergence-order fit of residuals against step sizes.
struct SlopeReport {
    std::vector<double> epsilons;
    std::vector<double> residuals;
    double slope = 0.0;
    double r2 = 0.0;
    SlopeStatus status = SlopeStatus::DegenerateResidual;

    bool usable() const { return status == SlopeStatus::Ok; }
};

/// Least-squares slope of log(residual) vs log(epsilon). Requires at least
/// three strictly decreasing epsilons.
inline SlopeReport fit_slope(std::vector<double> epsilons, std::vector<double> residuals) {
    if (epsilons.size() != residuals.size() || epsilons.size() < 3)
        throw std::invalid_argument("fit_slope: need >= 3 matched points");
    for (std::size_t i = 1; i < epsilons.size(); ++i)
        if (!(epsilons[i] < epsilons[i - 1]))
            throw std::invalid_argument("fit_slope: epsilons must strictly decrease");

    SlopeReport rep;
    rep.epsilons = std::move(epsilons);
    rep.residuals = std::move(residuals);

    bool all_floor = true;
    for (double r : rep.residuals)
        all_floor = all_floor && r < 1e-14;
    if (all_floor) {
        rep.status = SlopeStatus::DegenerateResidual;
        return rep;
    }

    const std::size_t n = rep.epsilons.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double lx = std::log(rep.epsilons[i]);
        const double ly = std::log(rep.residuals[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        syy += ly * ly;
    }
    const double dn = static_cast<double>(n);
    const double cov = sxy - sx * sy / dn;
    const double varx = sxx - sx * sx / dn;
    const double vary = syy - sy * sy / dn;
    rep.slope = cov / varx;
    rep.r2 = vary > 0.0 ? (cov * cov) / (varx * vary) : 0.0;
    rep.status = rep.r2 >= 0.99 ? SlopeStatus::Ok : SlopeStatus::PoorFit;
    return rep;
}

inline const std::vector<double>& default_epsilons() {
    static const std::vector<double> eps{1e-2, 1e-3, 1e-4};
    return eps;
}

/// Residuals of the order-truncated expansion of F(x + eps*d), with the
/// log-log slope quantifying the O(d^{order+1}) claim.
inline SlopeReport residual_slope(const AnalyticFunction& F, const Quaternion& x,
                                  const Quaternion& delta, int order,
                                  const std::vector<double>& epsilons = default_epsilons()) {
    if (order != 1 && order != 2)
        throw std::invalid_argument("residual_slope: order must be 1 or 2");
    const Quaternion base = eval(F, x);
    const Quaternion first = dcal(F, x, delta);
    const Quaternion second = order == 2 ? dcal2(F, x, delta) : Quaternion{};
    std::vector<double> residuals;
    residuals.reserve(epsilons.size());
    for (double eps : epsilons) {
        Quaternion r = eval(F, x + eps * delta) - base - eps * first;
        if (order == 2)
            r -= (eps * eps) * second;
        residuals.push_back(r.norm());
    }
    return fit_slope(epsilons, std::move(residuals));
}

} // namespace quatcalc
