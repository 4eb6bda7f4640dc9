#pragma once

/**
 * @file analytic.hpp
 * @brief Real-analytic functions evaluated at quaternionic arguments through
 *        the complex lift.
 *
 * The admissible function class is a power series F(x) = sum_n c_n x^n whose
 * coefficients multiply from the left (real coefficients are the common
 * case), plus a handful of named functions. Anything with a quaternion
 * factor inside, like x*a*x, is unrepresentable by construction.
 *
 * Evaluation never sums a quaternion series. A real-coefficient f applied to
 * x = x0 + u*r is computed by lifting to the ordinary complex point
 * z = x0 + i*r:
 *
 *     f(z) = a + i*b   =>   f(x) = a + b*u
 *
 * which is exact in the function and makes f(conj(x)) = a - b*u free. Both
 * values are carried jointly as
 *
 *     F(x) = A + R*imag(x)
 *
 * where R is the perpendicular difference quotient
 * (F(x) - F(x*)) (x - x*)^{-1} = b/r (a real scalar for real-coefficient F).
 * R stays finite on the real axis: for r below ratio_limit_switch it is
 * replaced by its Taylor limit f'(x0) - f'''(x0) r^2/6, avoiding the 0/0.
 */

#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "quatcalc/errors.hpp"
#include "quatcalc/quaternion.hpp"

namespace quatcalc {

enum class FuncKind { Exp, Sin, Cos, Log, Recip, Pow, Series };

/// Below this imaginary radius the perpendicular ratio switches from the
/// direct b/r quotient to its Taylor limit.
inline constexpr double ratio_limit_switch = 1e-6;

class AnalyticFunction {
public:
    static AnalyticFunction exp() { return AnalyticFunction(FuncKind::Exp); }
    static AnalyticFunction sin() { return AnalyticFunction(FuncKind::Sin); }
    static AnalyticFunction cos() { return AnalyticFunction(FuncKind::Cos); }
    static AnalyticFunction log() { return AnalyticFunction(FuncKind::Log); }
    static AnalyticFunction recip() { return AnalyticFunction(FuncKind::Recip); }

    static AnalyticFunction pow(int n) {
        AnalyticFunction f(FuncKind::Pow);
        f.n_ = n;
        return f;
    }

    /// F(x) = sum_n coeffs[n] * (x - center)^n, coefficients applied on the
    /// left; center must be real.
    static AnalyticFunction power_series(std::vector<Quaternion> coeffs, double center = 0.0) {
        AnalyticFunction f(FuncKind::Series);
        f.series_ = std::move(coeffs);
        f.center_ = center;
        return f;
    }

    static AnalyticFunction constant(const Quaternion& c) { return power_series({c}); }

    /// left * F, composing with any existing left coefficient.
    AnalyticFunction scaled(const Quaternion& left) const {
        AnalyticFunction f = *this;
        if (kind_ == FuncKind::Series) {
            for (Quaternion& c : f.series_)
                c = left * c;
        } else {
            f.coeff_ = left * f.coeff_;
        }
        return f;
    }

    FuncKind kind() const { return kind_; }
    int exponent() const { return n_; }
    const Quaternion& left_coeff() const { return coeff_; }
    const std::vector<Quaternion>& coefficients() const { return series_; }
    double center() const { return center_; }

    bool real_coefficients() const {
        if (kind_ == FuncKind::Series) {
            for (const Quaternion& c : series_)
                if (c.x != 0.0 || c.y != 0.0 || c.z != 0.0)
                    return false;
            return true;
        }
        return coeff_.x == 0.0 && coeff_.y == 0.0 && coeff_.z == 0.0;
    }

private:
    explicit AnalyticFunction(FuncKind k) : kind_(k) {}

    FuncKind kind_;
    int n_ = 0;                     // Pow exponent
    Quaternion coeff_{1.0};         // left multiplier (named kinds)
    std::vector<Quaternion> series_; // Series coefficients c_0, c_1, ...
    double center_ = 0.0;           // Series expansion point (real)
};

namespace detail {

inline std::complex<double> ipow(std::complex<double> z, int n) {
    if (n < 0)
        return 1.0 / ipow(z, -n);
    std::complex<double> result{1.0, 0.0};
    while (n > 0) {
        if (n & 1)
            result *= z;
        z *= z;
        n >>= 1;
    }
    return result;
}

inline double ipow_real(double t, int n) {
    double result = 1.0;
    for (int i = 0; i < n; ++i)
        result *= t;
    return result;
}

/// Named-kind value at a complex point, left coefficient not applied.
inline std::complex<double> base_lift(FuncKind kind, int n, std::complex<double> z) {
    switch (kind) {
    case FuncKind::Exp:
        return std::exp(z);
    case FuncKind::Sin:
        return std::sin(z);
    case FuncKind::Cos:
        return std::cos(z);
    case FuncKind::Log:
        if (std::abs(z) < 1e-150)
            throw eval_domain_error("log: evaluation at zero");
        return std::log(z);
    case FuncKind::Recip:
        if (std::abs(z) < 1e-150)
            throw eval_domain_error("recip: pole at zero");
        return 1.0 / z;
    case FuncKind::Pow:
        if (n < 0 && std::abs(z) < 1e-150)
            throw eval_domain_error("pow: pole at zero");
        return ipow(z, n);
    case FuncKind::Series:
        break;
    }
    throw eval_domain_error("base_lift: series handled elsewhere");
}

} // namespace detail

inline AnalyticFunction derivative(const AnalyticFunction& F) {
    switch (F.kind()) {
    case FuncKind::Exp:
        return AnalyticFunction::exp().scaled(F.left_coeff());
    case FuncKind::Sin:
        return AnalyticFunction::cos().scaled(F.left_coeff());
    case FuncKind::Cos:
        return AnalyticFunction::sin().scaled(F.left_coeff() * -1.0);
    case FuncKind::Log:
        return AnalyticFunction::recip().scaled(F.left_coeff());
    case FuncKind::Recip:
        return AnalyticFunction::pow(-2).scaled(F.left_coeff() * -1.0);
    case FuncKind::Pow: {
        const int n = F.exponent();
        if (n == 0)
            return AnalyticFunction::power_series({});
        return AnalyticFunction::pow(n - 1).scaled(F.left_coeff() * static_cast<double>(n));
    }
    case FuncKind::Series: {
        const auto& c = F.coefficients();
        std::vector<Quaternion> d;
        for (std::size_t k = 1; k < c.size(); ++k)
            d.push_back(c[k] * static_cast<double>(k));
        return AnalyticFunction::power_series(std::move(d), F.center());
    }
    }
    throw eval_domain_error("derivative: unreachable");
}

/// Scalar complex evaluation of a real-coefficient function. Used by the
/// su(2) expansion and by product/quotient checks that work directly on
/// lifted values.
inline std::complex<double> eval_complex(const AnalyticFunction& F, std::complex<double> z) {
    if (!F.real_coefficients())
        throw eval_domain_error("eval_complex: requires real coefficients");
    if (F.kind() == FuncKind::Series) {
        std::complex<double> zp{1.0, 0.0};
        std::complex<double> acc{0.0, 0.0};
        const std::complex<double> y = z - F.center();
        for (const Quaternion& c : F.coefficients()) {
            acc += c.w * zp;
            zp *= y;
        }
        return acc;
    }
    return F.left_coeff().w * detail::base_lift(F.kind(), F.exponent(), z);
}

/// Joint value/ratio decomposition: F(x) = a + ratio*imag(x) and
/// F(conj(x)) = a - ratio*imag(x). `ratio` is exactly the perpendicular
/// difference quotient (F(x) - F(x*)) (x - x*)^{-1}.
struct LiftSplit {
    Quaternion a;
    Quaternion ratio;
};

namespace detail {

/// f'(x0) - f'''(x0) r^2/6, the small-r limit of Im f(x0+ir)/r for a base
/// function that is real-analytic at x0. Closed derivative forms per kind.
inline double named_ratio_limit(FuncKind kind, int n, double x0, double r) {
    double f1 = 0.0, f3 = 0.0;
    switch (kind) {
    case FuncKind::Exp:
        f1 = f3 = std::exp(x0);
        break;
    case FuncKind::Sin:
        f1 = std::cos(x0);
        f3 = -f1;
        break;
    case FuncKind::Cos:
        f1 = -std::sin(x0);
        f3 = -f1;
        break;
    case FuncKind::Log:
        f1 = 1.0 / x0;
        f3 = 2.0 / (x0 * x0 * x0);
        break;
    case FuncKind::Recip: {
        const double x2 = x0 * x0;
        f1 = -1.0 / x2;
        f3 = -6.0 / (x2 * x2);
        break;
    }
    case FuncKind::Pow: {
        f1 = n == 0 ? 0.0 : n * std::pow(x0, n - 1);
        const double c3 = static_cast<double>(n) * (n - 1) * (n - 2);
        f3 = c3 == 0.0 ? 0.0 : c3 * std::pow(x0, n - 3);
        break;
    }
    case FuncKind::Series:
        throw eval_domain_error("named_ratio_limit: series handled elsewhere");
    }
    return f1 - f3 * r * r / 6.0;
}

} // namespace detail

inline LiftSplit lift_split(const AnalyticFunction& F, const Quaternion& x) {
    const double x0 = x.w;
    const double r = x.imag_norm();

    if (F.kind() == FuncKind::Series) {
        const double y0 = x0 - F.center();
        const std::complex<double> zy{y0, r};
        const bool use_limit = r <= ratio_limit_switch;
        std::complex<double> zp{1.0, 0.0};
        Quaternion a;
        Quaternion ratio;
        const auto& coeffs = F.coefficients();
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            const int n = static_cast<int>(k);
            a += coeffs[k] * zp.real();
            if (use_limit) {
                double lim = 0.0;
                if (n >= 1)
                    lim += n * detail::ipow_real(y0, n - 1);
                if (n >= 3)
                    lim -= n * (n - 1.0) * (n - 2.0) * detail::ipow_real(y0, n - 3) * r * r / 6.0;
                ratio += coeffs[k] * lim;
            } else {
                ratio += coeffs[k] * (zp.imag() / r);
            }
            zp *= zy;
        }
        return {a, ratio};
    }

    // Named kinds. A point numerically on the branch cut of log is rejected;
    // poles are caught inside base_lift.
    if (F.kind() == FuncKind::Log && x0 <= 0.0 && r <= pure_real_threshold(x))
        throw eval_domain_error("log: branch point on the nonpositive real axis");

    const std::complex<double> z{x0, r};
    const std::complex<double> w = detail::base_lift(F.kind(), F.exponent(), z);

    bool use_limit = r <= ratio_limit_switch;
    if (F.kind() == FuncKind::Log)
        use_limit = use_limit && x0 > 2.0 * r;
    if (F.kind() == FuncKind::Recip || (F.kind() == FuncKind::Pow && F.exponent() < 0))
        use_limit = use_limit && std::abs(x0) > 2.0 * r;

    const Quaternion a = F.left_coeff() * w.real();
    const double ratio_scalar = use_limit
                                    ? detail::named_ratio_limit(F.kind(), F.exponent(), x0, r)
                                    : w.imag() / r;
    return {a, F.left_coeff() * ratio_scalar};
}

/// F evaluated at a quaternionic argument. For real-coefficient F the result
/// lies in span{1, u_x}; pure-real arguments reduce to ordinary real
/// evaluation.
inline Quaternion eval(const AnalyticFunction& F, const Quaternion& x) {
    const LiftSplit ls = lift_split(F, x);
    return ls.a + ls.ratio * x.imag();
}

/// The perpendicular partial (F(x) - F(x*)) (x - x*)^{-1}. Real scalar for
/// real-coefficient F; defined on the real axis by its continuity limit.
inline Quaternion perp_ratio(const AnalyticFunction& F, const Quaternion& x) {
    return lift_split(F, x).ratio;
}

/// The complex point x0 + i*r a quaternion lifts to.
inline std::complex<double> complex_lift(const Quaternion& x) {
    return {x.w, x.imag_norm()};
}

/// Substitute the local unit imaginary of x for i in a lifted value:
/// a + i*b  ->  a + b*u_x. Requires imag(x) != 0 unless b == 0.
inline Quaternion from_lift(std::complex<double> w, const Quaternion& x) {
    const double r = x.imag_norm();
    if (r <= 0.0)
        return Quaternion{w.real()};
    return Quaternion{w.real()} + (w.imag() / r) * x.imag();
}

} // namespace quatcalc
