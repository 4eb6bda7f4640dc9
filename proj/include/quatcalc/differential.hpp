#pragma once

/**
 * @file differential.hpp
 * @brief First- and second-order quaternionic differentials.
 *
 * The first-order differential of an analytic F at x applied to a
 * displacement delta is
 *
 *     dcal(F, x, d) = F'(x) d_par + (F(x) - F(x*)) (x - x*)^{-1} d_perp.
 *
 * The parallel piece is ordinary calculus in the plane span{1, u_x}; the
 * perpendicular piece is the nonlocal conjugate difference quotient, because
 * d_perp hops across x and conjugates it on the way. On the real axis the
 * quotient degenerates to 0/0 and the operator extends by continuity to
 * F'(x0) * d (real displacement parallel, imaginary perpendicular, same
 * coefficient in the limit).
 *
 * The second-order term follows the same decomposition; its closed form is
 * the four-product expression implemented in dcal2, kept exactly in the
 * arrangement of its derivation since the factors do not commute.
 */

#include <utility>

#include "quatcalc/analytic.hpp"
#include "quatcalc/errors.hpp"
#include "quatcalc/quaternion.hpp"

namespace quatcalc {

/// A differential together with the split it used. order is 1 or 2.
struct DifferentialResult {
    Quaternion value;
    TangentSplit split;
    int order = 1;
};

namespace detail {

/// Split with the real-axis fallback: pure-real base points treat the real
/// part of delta as parallel and the imaginary part as perpendicular.
inline TangentSplit split_extended(const Quaternion& x, const Quaternion& delta) {
    if (is_pure_real(x))
        return {Quaternion{delta.w}, delta.imag(), PolarForm{x.w, 0.0, Quaternion{}}};
    return split(x, delta);
}

} // namespace detail

/// First-order differential with the reusable derivative precomputed.
/// Prefer this over repeated dcal() calls in refinement loops.
class DcalOperator {
public:
    explicit DcalOperator(AnalyticFunction F)
        : f_(std::move(F)), fprime_(derivative(f_)) {}

    /// F(x) and dcal(F, x, delta) from one pass: the lift of F carries both
    /// the value and the perpendicular coefficient.
    struct ValueDifferential {
        Quaternion value;
        Quaternion differential;
    };

    ValueDifferential value_and_differential(const Quaternion& x, const Quaternion& delta) const {
        const TangentSplit ts = detail::split_extended(x, delta);
        const LiftSplit lf = lift_split(f_, x);
        const Quaternion fp = eval(fprime_, x);
        return {lf.a + lf.ratio * x.imag(), fp * ts.parallel + lf.ratio * ts.perp};
    }

    DifferentialResult result(const Quaternion& x, const Quaternion& delta) const {
        const TangentSplit ts = detail::split_extended(x, delta);
        const Quaternion fp = eval(fprime_, x);
        const Quaternion ratio = perp_ratio(f_, x);
        return {fp * ts.parallel + ratio * ts.perp, ts, 1};
    }

    Quaternion operator()(const Quaternion& x, const Quaternion& delta) const {
        return result(x, delta).value;
    }

    const AnalyticFunction& function() const { return f_; }
    const AnalyticFunction& derivative_function() const { return fprime_; }

private:
    AnalyticFunction f_;
    AnalyticFunction fprime_;
};

inline Quaternion dcal(const AnalyticFunction& F, const Quaternion& x, const Quaternion& delta) {
    return DcalOperator(F)(x, delta);
}

inline DifferentialResult dcal_result(const AnalyticFunction& F, const Quaternion& x,
                                      const Quaternion& delta) {
    return DcalOperator(F).result(x, delta);
}

/// Second-order term of F(x + d): the four-product expression
///
///   1/2 F''(x) d_par^2
///   + (F(x) - F(x*)) (x - x*)^{-2} (d_perp d_par - d d_perp)
///   + F'(x) (x - x*)^{-1} d d_perp
///   + F'(x*) (x* - x)^{-1} d_perp d_par
///
/// with every product taken in the order written. The real-axis limit is
/// not defined here; base points with r <= ratio_limit_switch are refused.
inline Quaternion dcal2(const AnalyticFunction& F, const Quaternion& x, const Quaternion& delta) {
    if (x.imag_norm() <= ratio_limit_switch)
        throw pure_real_error("dcal2: base point too close to the real axis");

    const TangentSplit ts = split(x, delta);
    const AnalyticFunction Fp = derivative(F);

    const LiftSplit lf = lift_split(F, x);
    const LiftSplit lp = lift_split(Fp, x);
    const Quaternion im = x.imag();

    const Quaternion Fx = lf.a + lf.ratio * im;
    const Quaternion Fxs = lf.a - lf.ratio * im;       // F(x*)
    const Quaternion Fp_x = lp.a + lp.ratio * im;      // F'(x)
    const Quaternion Fp_xs = lp.a - lp.ratio * im;     // F'(x*)
    const Quaternion Fpp_x = eval(derivative(Fp), x);  // F''(x)

    const Quaternion dx = x - conj(x);                 // x - x*
    const Quaternion dxi = dx.inverse();

    const Quaternion t1 = 0.5 * (Fpp_x * (ts.parallel * ts.parallel));
    const Quaternion t2 = ((Fx - Fxs) * (dxi * dxi)) * (ts.perp * ts.parallel - delta * ts.perp);
    const Quaternion t3 = (Fp_x * dxi) * (delta * ts.perp);
    const Quaternion t4 = (Fp_xs * -dxi) * (ts.perp * ts.parallel);
    return t1 + t2 + t3 + t4;
}

inline DifferentialResult dcal2_result(const AnalyticFunction& F, const Quaternion& x,
                                       const Quaternion& delta) {
    return {dcal2(F, x, delta), split(x, delta), 2};
}

/// The perpendicular term of dcal rearranged as a commutator:
/// with C = (x* - x)^{-1} d_perp, the term equals [C, F(x)] = C F(x) - F(x) C.
inline Quaternion commutator_form(const AnalyticFunction& F, const Quaternion& x,
                                  const Quaternion& delta) {
    const TangentSplit ts = split(x, delta); // throws pure_real_error on the axis
    const Quaternion C = (conj(x) - x).inverse() * ts.perp;
    const Quaternion Fx = eval(F, x);
    return C * Fx - Fx * C;
}

/// Differential of the unit imaginary frame: d(u_x) = d_perp / r.
/// The parallel displacement moves x within its own complex plane and leaves
/// u_x fixed; only the perpendicular part tilts the frame.
inline Quaternion d_unit_imaginary(const Quaternion& x, const Quaternion& delta) {
    const TangentSplit ts = split(x, delta);
    return ts.perp / ts.frame.r;
}

} // namespace quatcalc
