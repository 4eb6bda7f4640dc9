#pragma once

/**
 * @file integral.hpp
 * @brief Line integrals along polyline paths: the differential line integral
 *        with its fundamental-theorem contract, integration by parts, the
 *        symmetric power integral, and the antiderivative reduction.
 *
 * A Path is a polyline; each leg is cut into N straight increments and every
 * increment contributes its term evaluated at the segment START (left rule,
 * which is what makes the telescoping argument behind the fundamental
 * theorem literal). Sums accumulate per leg, then legs combine in order, so
 * concatenating two paths reproduces the sum of their integrals bit for bit.
 *
 * line_integral_D sums dcal(F, x_n, delta_n): it converges at O(1/N) to
 * F(b) - F(a), independent of the path between the endpoints. The symmetric
 * integral instead places the increment in every slot of x^n with weight
 * 1/(n+1), which converges to (b^{n+1} - a^{n+1})/(n+1).
 */

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quatcalc/analytic.hpp"
#include "quatcalc/differential.hpp"
#include "quatcalc/errors.hpp"
#include "quatcalc/quaternion.hpp"

namespace quatcalc {

/// Polyline with a uniform refinement count per leg.
struct Path {
    std::vector<Quaternion> waypoints;
    int segments_per_leg = 1;

    void validate() const {
        if (waypoints.size() < 2)
            throw std::invalid_argument("Path: need at least 2 waypoints");
        if (segments_per_leg < 1)
            throw std::invalid_argument("Path: segments_per_leg must be >= 1");
        for (std::size_t i = 1; i < waypoints.size(); ++i)
            if (waypoints[i] == waypoints[i - 1])
                throw std::invalid_argument("Path: consecutive waypoints must be distinct");
    }

    const Quaternion& start() const { return waypoints.front(); }
    const Quaternion& end() const { return waypoints.back(); }
    bool closed() const { return waypoints.front() == waypoints.back(); }
};

/// Counters reported by the refinement walk.
struct IntegralDiagnostics {
    std::int64_t increments = 0;
    std::int64_t real_axis_hits = 0; // increments whose base point is pure real
};

namespace detail {

/// Visit every refinement increment of the path, one leg's subtotal at a
/// time. Term(x, delta) -> Quaternion; the per-leg subtotals are summed in
/// leg order for bitwise-reproducible concatenation.
template <typename Term>
Quaternion sum_refinement(const Path& path, IntegralDiagnostics* diag, Term&& term) {
    path.validate();
    if (diag)
        *diag = {};
    const int N = path.segments_per_leg;
    Quaternion total;
    for (std::size_t leg = 0; leg + 1 < path.waypoints.size(); ++leg) {
        const Quaternion a = path.waypoints[leg];
        const Quaternion b = path.waypoints[leg + 1];
        Quaternion subtotal;
        Quaternion prev = a;
        for (int n = 1; n <= N; ++n) {
            const Quaternion next =
                n == N ? b : a + (b - a) * (static_cast<double>(n) / static_cast<double>(N));
            if (diag) {
                ++diag->increments;
                if (is_pure_real(prev))
                    ++diag->real_axis_hits;
            }
            subtotal += term(prev, next - prev);
            prev = next;
        }
        total += subtotal;
    }
    return total;
}

} // namespace detail

/// Riemann-type sum of dcal(F, x, delta) over the refinement; converges to
/// eval(F, end) - eval(F, start) at O(1/N).
inline Quaternion line_integral_D(const AnalyticFunction& F, const Path& path,
                                  IntegralDiagnostics* diag = nullptr) {
    const DcalOperator op(F);
    return detail::sum_refinement(
        path, diag, [&op](const Quaternion& x, const Quaternion& d) { return op(x, d); });
}

/// Both sides of integration by parts:
///   lhs = sum F(x) dcal(G, x, delta)
///   rhs = F(b)G(b) - F(a)G(a) - sum dcal(F, x, delta) G(x).
/// The two agree as N grows. Real-coefficient F and G only.
inline std::pair<Quaternion, Quaternion> line_integral_parts(const AnalyticFunction& F,
                                                             const AnalyticFunction& G,
                                                             const Path& path) {
    if (!F.real_coefficients() || !G.real_coefficients())
        throw eval_domain_error("line_integral_parts: requires real coefficients");
    path.validate();
    const DcalOperator opF(F), opG(G);

    Quaternion sum_F_dG, sum_dF_G;
    detail::sum_refinement(path, nullptr, [&](const Quaternion& x, const Quaternion& d) {
        const auto f = opF.value_and_differential(x, d);
        const auto g = opG.value_and_differential(x, d);
        sum_F_dG += f.value * g.differential;
        sum_dF_G += f.differential * g.value;
        return Quaternion{};
    });

    const Quaternion boundary = eval(F, path.end()) * eval(G, path.end()) -
                                eval(F, path.start()) * eval(G, path.start());
    return {sum_F_dG, boundary - sum_dF_G};
}

/// The symmetric power integral: per increment, delta is placed in every
/// slot of x^n with weight 1/(n+1). Converges to
/// (end^{n+1} - start^{n+1})/(n+1) at O(1/N).
inline Quaternion symmetric_integral(int n, const Path& path,
                                     IntegralDiagnostics* diag = nullptr) {
    if (n < 0)
        throw std::invalid_argument("symmetric_integral: n must be nonnegative");
    const double inv = 1.0 / (n + 1.0);
    std::vector<Quaternion> p(static_cast<std::size_t>(n) + 1);
    return detail::sum_refinement(path, diag, [&](const Quaternion& x, const Quaternion& d) {
        p[0] = Quaternion{1.0};
        for (int m = 1; m <= n; ++m)
            p[static_cast<std::size_t>(m)] = p[static_cast<std::size_t>(m - 1)] * x;
        Quaternion term;
        for (int m = 0; m <= n; ++m)
            term += p[static_cast<std::size_t>(m)] * d * p[static_cast<std::size_t>(n - m)];
        return term * inv;
    });
}

/// Integral of f reduced through its antiderivative: checks derivative(h)=f
/// on a grid of real points, then returns line_integral_D(h, path), which
/// tends to h(end) - h(start).
inline Quaternion antiderivative_rule(const AnalyticFunction& f, const AnalyticFunction& h,
                                      const Path& path, IntegralDiagnostics* diag = nullptr) {
    const AnalyticFunction hp = derivative(h);
    for (int k = 0; k < 10; ++k) {
        const double t = 0.3 + 0.1 * k;
        const Quaternion want = eval(f, Quaternion{t});
        const Quaternion got = eval(hp, Quaternion{t});
        if (!approx_equal(got, want, 1e-10, 1e-10))
            throw antiderivative_mismatch(
                "antiderivative_rule: derivative(h) differs from f at t = " + std::to_string(t));
    }
    return line_integral_D(h, path, diag);
}

} // namespace quatcalc
