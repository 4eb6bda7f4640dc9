#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <functional>

#include "quatcalc/differential.hpp"
#include "quatcalc/oracle.hpp"
#include "quatcalc/random.hpp"

using quatcalc::AnalyticFunction;
using quatcalc::Quaternion;
using quatcalc::approx_equal;
using quatcalc::dcal;
using quatcalc::dcal2;
using quatcalc::unit_i;
using quatcalc::unit_j;
using quatcalc::unit_k;

namespace {

const double pi = std::acos(-1.0);

using CFn = std::function<std::complex<double>(std::complex<double>)>;

// First-order differential of a scalar function given only through its
// complex lift (value and derivative). Independent of AnalyticFunction
// internals; used to differentiate products and quotients that are not
// representable as a single AnalyticFunction.
Quaternion dcal_lifted(const CFn& f, const CFn& df, const Quaternion& x, const Quaternion& d) {
    const auto ts = quatcalc::split(x, d);
    const auto z = quatcalc::complex_lift(x);
    const Quaternion deriv = quatcalc::from_lift(df(z), x);
    const double ratio = f(z).imag() / x.imag_norm();
    return deriv * ts.parallel + ratio * ts.perp;
}

} // namespace

TEST_CASE("dcal: worked examples") {
    CHECK(approx_equal(dcal(AnalyticFunction::pow(2), Quaternion{1, 1, 0, 0}, unit_j),
                       2.0 * unit_j, 1e-13, 1e-13));
    CHECK(approx_equal(dcal(AnalyticFunction::pow(2), Quaternion{1, 1, 0, 0}, Quaternion{1.0}),
                       Quaternion{2, 2, 0, 0}, 1e-13, 1e-13));
    CHECK(approx_equal(dcal(AnalyticFunction::pow(2), unit_i, unit_j), Quaternion{}, 1e-13, 1e-13));
    CHECK(approx_equal(dcal(AnalyticFunction::exp(), (pi / 2) * unit_i, unit_j),
                       (2.0 / pi) * unit_j, 1e-13, 1e-13));
}

TEST_CASE("dcal: real-axis extension") {
    CHECK(approx_equal(dcal(AnalyticFunction::pow(2), Quaternion{3.0}, unit_j), 6.0 * unit_j));
    quatcalc::Rng rng(3);
    const Quaternion d = rng.quat_box(1.0);
    // collapses to F'(x0) * d
    CHECK(approx_equal(dcal(AnalyticFunction::exp(), Quaternion{0.5}, d), std::exp(0.5) * d,
                       1e-13, 1e-13));
    CHECK(approx_equal(dcal(AnalyticFunction::sin(), Quaternion{}, d), d, 1e-13, 1e-13));
}

TEST_CASE("dcal: linearity and structure") {
    quatcalc::Rng rng(7);
    const auto F = AnalyticFunction::power_series({1.0, -0.5, 2.0, 0.25});
    for (int iter = 0; iter < 100; ++iter) {
        const Quaternion x = rng.point(0.1, 2.0);
        const Quaternion d1 = rng.quat_box(1.0);
        const Quaternion d2 = rng.quat_box(1.0);
        const Quaternion v1 = dcal(F, x, d1);
        const Quaternion v2 = dcal(F, x, d2);
        CHECK(approx_equal(dcal(F, x, d1 + d2), v1 + v2, 1e-13, 1e-12));
        CHECK(approx_equal(dcal(F, x, 2.5 * d1), 2.5 * v1, 1e-14, 1e-14));
        CHECK(approx_equal(dcal(F, x, Quaternion{}), Quaternion{}));
    }
}

TEST_CASE("dcal result carries the split it used") {
    const Quaternion x{1, 1, 0, 0};
    const auto res = quatcalc::dcal_result(AnalyticFunction::pow(2), x, unit_i + unit_j);
    CHECK(res.order == 1);
    CHECK(approx_equal(res.split.parallel + res.split.perp, unit_i + unit_j));
    const Quaternion rebuilt = eval(derivative(AnalyticFunction::pow(2)), x) * res.split.parallel +
                               quatcalc::perp_ratio(AnalyticFunction::pow(2), x) * res.split.perp;
    CHECK(approx_equal(res.value, rebuilt));

    quatcalc::DcalOperator op(AnalyticFunction::sin());
    CHECK(approx_equal(op(x, unit_j), dcal(AnalyticFunction::sin(), x, unit_j)));
}

TEST_CASE("dcal matches the direct power oracle") {
    quatcalc::Rng rng(2);
    for (int iter = 0; iter < 100; ++iter) {
        const Quaternion x = rng.point(0.05, 1.5);
        const Quaternion d = rng.unit_quat();
        for (int n = 1; n <= 8; ++n) {
            const Quaternion got = dcal(AnalyticFunction::pow(n), x, d);
            const Quaternion want = quatcalc::direct_power_first_order(n, x, d);
            CHECK(approx_equal(got, want, 1e-12, 1e-12));
        }
    }
}

TEST_CASE("dcal on powers matches the explicit geometric-sum form") {
    // n x^{n-1} d_par + (sum_m x^{n-m-1} conj(x)^m) d_perp
    quatcalc::Rng rng(19);
    for (int iter = 0; iter < 50; ++iter) {
        const Quaternion x = rng.point(0.1, 1.5);
        const Quaternion d = rng.unit_quat();
        const auto ts = quatcalc::split(x, d);
        for (int n = 1; n <= 6; ++n) {
            Quaternion xp{1.0}, xsp{1.0};
            std::vector<Quaternion> xpow, xspow;
            for (int m = 0; m < n; ++m) {
                xpow.push_back(xp);
                xspow.push_back(xsp);
                xp = xp * x;
                xsp = xsp * conj(x);
            }
            Quaternion geo;
            for (int m = 0; m < n; ++m)
                geo += xpow[n - 1 - m] * xspow[m];
            const Quaternion par_term = static_cast<double>(n) * xpow[n - 1];
            const Quaternion expect = par_term * ts.parallel + geo * ts.perp;
            CHECK(approx_equal(dcal(AnalyticFunction::pow(n), x, d), expect, 1e-12, 1e-12));
        }
    }
}

TEST_CASE("scaling by a left coefficient commutes with dcal") {
    quatcalc::Rng rng(23);
    for (int iter = 0; iter < 100; ++iter) {
        const Quaternion x = rng.point(0.1, 2.0);
        const Quaternion d = rng.unit_quat();
        const Quaternion c = rng.quat_box(1.5);
        const auto F = AnalyticFunction::pow(3);
        CHECK(approx_equal(dcal(F.scaled(c), x, d), c * dcal(F, x, d), 1e-12, 1e-11));
        const auto S = AnalyticFunction::power_series({unit_j, c, unit_k * 0.5});
        // first-order residual still quadratic with quaternion coefficients
        const auto rep = quatcalc::residual_slope(S, x, d, 1);
        if (rep.usable())
            CHECK_THAT(rep.slope, Catch::Matchers::WithinAbs(2.0, 0.2));
        else
            CHECK(rep.status == quatcalc::SlopeStatus::DegenerateResidual);
    }
}

TEST_CASE("first-order residual slopes across the standard family") {
    quatcalc::Rng rng(29);
    std::vector<AnalyticFunction> funcs;
    for (int n = 0; n <= 8; ++n)
        funcs.push_back(AnalyticFunction::pow(n));
    funcs.push_back(AnalyticFunction::exp());
    funcs.push_back(AnalyticFunction::sin());
    funcs.push_back(AnalyticFunction::cos());
    int usable = 0;
    for (const auto& f : funcs)
        for (int iter = 0; iter < 10; ++iter) {
            const Quaternion x = rng.point(0.1, 2.0);
            const Quaternion d = rng.unit_quat();
            const auto rep = quatcalc::residual_slope(f, x, d, 1);
            if (!rep.usable()) {
                CHECK(rep.status == quatcalc::SlopeStatus::DegenerateResidual);
                continue;
            }
            ++usable;
            CHECK_THAT(rep.slope, Catch::Matchers::WithinAbs(2.0, 0.2));
        }
    CHECK(usable > 80);
}

TEST_CASE("Leibnitz product rule through the lift") {
    quatcalc::Rng rng(31);
    struct Named {
        AnalyticFunction fn;
        CFn f, df;
    };
    const std::vector<Named> fns = {
        {AnalyticFunction::exp(), [](std::complex<double> z) { return std::exp(z); },
         [](std::complex<double> z) { return std::exp(z); }},
        {AnalyticFunction::sin(), [](std::complex<double> z) { return std::sin(z); },
         [](std::complex<double> z) { return std::cos(z); }},
        {AnalyticFunction::pow(3), [](std::complex<double> z) { return z * z * z; },
         [](std::complex<double> z) { return 3.0 * z * z; }},
    };
    for (int iter = 0; iter < 70; ++iter) {
        const Quaternion x = rng.point(0.1, 2.0);
        const Quaternion d = rng.unit_quat();
        for (const auto& A : fns)
            for (const auto& B : fns) {
                CFn prod = [&](std::complex<double> z) { return A.f(z) * B.f(z); };
                CFn dprod = [&](std::complex<double> z) {
                    return A.df(z) * B.f(z) + A.f(z) * B.df(z);
                };
                const Quaternion lhs = dcal_lifted(prod, dprod, x, d);
                const Quaternion rhs = dcal(A.fn, x, d) * eval(B.fn, x) +
                                       eval(A.fn, x) * dcal(B.fn, x, d);
                CHECK(approx_equal(lhs, rhs, 1e-11, 1e-10));
            }
    }
}

TEST_CASE("quotient rule: G times 1/G differentiates to zero") {
    quatcalc::Rng rng(37);
    for (int iter = 0; iter < 100; ++iter) {
        const Quaternion x = rng.point(0.1, 2.0);
        const Quaternion d = rng.unit_quat();

        // G = exp: 1/G has lift 1/e^z with derivative -e^{-z}
        const Quaternion t1 = dcal(AnalyticFunction::exp(), x, d) *
                              eval(AnalyticFunction::recip(), eval(AnalyticFunction::exp(), x));
        CFn invf = [](std::complex<double> z) { return 1.0 / std::exp(z); };
        CFn dinvf = [](std::complex<double> z) { return -1.0 / std::exp(z); };
        const Quaternion t2 = eval(AnalyticFunction::exp(), x) * dcal_lifted(invf, dinvf, x, d);
        CHECK(approx_equal(t1 + t2, Quaternion{}, 1e-10, 1e-10));
    }
}

TEST_CASE("dcal2: worked examples") {
    CHECK(approx_equal(dcal2(AnalyticFunction::pow(2), Quaternion{1, 1, 0, 0}, unit_j),
                       Quaternion{-1.0}, 1e-13, 1e-13));
    CHECK(approx_equal(dcal2(AnalyticFunction::pow(3), unit_i, unit_j), -unit_i, 1e-13, 1e-13));
    quatcalc::Rng rng(41);
    for (int iter = 0; iter < 20; ++iter) {
        const Quaternion x = rng.point(0.1, 2.0);
        CHECK(approx_equal(dcal2(AnalyticFunction::pow(2), x, Quaternion{1.0}), Quaternion{1.0},
                           1e-12, 1e-12));
    }
    CHECK_THROWS_AS(dcal2(AnalyticFunction::pow(2), Quaternion{1.0, 1e-7, 0, 0}, unit_j),
                    quatcalc::pure_real_error);
    CHECK_THROWS_AS(dcal2(AnalyticFunction::pow(2), Quaternion{3.0}, unit_j),
                    quatcalc::pure_real_error);
}

TEST_CASE("dcal2 against the placement oracle for cubes") {
    // second order term of (x+d)^3: x d^2 + d x d + d^2 x
    quatcalc::Rng rng(43);
    for (int iter = 0; iter < 100; ++iter) {
        const Quaternion x = rng.point(0.1, 2.0);
        const Quaternion d = rng.unit_quat();
        const Quaternion want = x * d * d + d * x * d + d * d * x;
        CHECK(approx_equal(dcal2(AnalyticFunction::pow(3), x, d), want, 1e-11, 1e-11));
    }
}

TEST_CASE("dcal2 residual slopes are cubic") {
    quatcalc::Rng rng(47);
    const auto funcs = {AnalyticFunction::exp(), AnalyticFunction::sin(),
                        AnalyticFunction::pow(5),
                        AnalyticFunction::power_series({0.5, 1.0, -1.0, 0.0, 2.0})};
    int usable = 0;
    for (const auto& f : funcs)
        for (int iter = 0; iter < 15; ++iter) {
            const Quaternion x = rng.point(0.15, 2.0);
            const Quaternion d = rng.unit_quat();
            const auto rep = quatcalc::residual_slope(f, x, d, 2);
            if (!rep.usable())
                continue;
            ++usable;
            CHECK_THAT(rep.slope, Catch::Matchers::WithinAbs(3.0, 0.2));
        }
    CHECK(usable > 40);
}

TEST_CASE("commutator form") {
    CHECK(approx_equal(quatcalc::commutator_form(AnalyticFunction::pow(2), Quaternion{1, 1, 0, 0},
                                                 unit_j),
                       2.0 * unit_j, 1e-13, 1e-13));
    quatcalc::Rng rng(53);
    for (int iter = 0; iter < 200; ++iter) {
        const Quaternion x = rng.point(0.05, 2.0);
        const Quaternion d = rng.unit_quat();
        const auto F = AnalyticFunction::power_series({1.0, 0.5, -2.0, 1.5});

        // equals dcal minus its parallel part
        const auto res = quatcalc::dcal_result(F, x, d);
        const Quaternion perp_term = res.value - eval(derivative(F), x) * res.split.parallel;
        CHECK(approx_equal(quatcalc::commutator_form(F, x, d), perp_term, 1e-12, 1e-11));

        // constants commute; parallel-only displacements vanish
        CHECK(approx_equal(quatcalc::commutator_form(AnalyticFunction::constant(1.0), x, d),
                           Quaternion{}));
        CHECK(approx_equal(quatcalc::commutator_form(F, x, res.split.parallel), Quaternion{},
                           1e-12, 1e-12));
    }
    CHECK_THROWS_AS(quatcalc::commutator_form(AnalyticFunction::exp(), Quaternion{1.0}, unit_j),
                    quatcalc::pure_real_error);
}

TEST_CASE("differential of the unit imaginary") {
    CHECK(approx_equal(quatcalc::d_unit_imaginary(Quaternion{1, 1, 0, 0}, unit_j), unit_j));
    CHECK(approx_equal(quatcalc::d_unit_imaginary(2.0 * unit_k, unit_i), 0.5 * unit_i));

    quatcalc::Rng rng(59);
    for (int iter = 0; iter < 50; ++iter) {
        const Quaternion x = rng.point(0.2, 2.0);
        const Quaternion d = rng.unit_quat();
        const auto ts = quatcalc::split(x, d);
        CHECK(approx_equal(quatcalc::d_unit_imaginary(x, ts.parallel), Quaternion{}, 1e-12, 1e-12));

        // finite-difference frame comparison: u(x + eps d) - u(x) = eps * du + O(eps^2)
        const Quaternion du = quatcalc::d_unit_imaginary(x, d);
        std::vector<double> eps{1e-2, 1e-3, 1e-4};
        std::vector<double> res;
        for (double e : eps) {
            const Quaternion u1 = quatcalc::polar(x + e * d).u;
            res.push_back((u1 - ts.frame.u - e * du).norm());
        }
        const auto rep = quatcalc::fit_slope(eps, res);
        if (rep.usable())
            CHECK_THAT(rep.slope, Catch::Matchers::WithinAbs(2.0, 0.2));
        else
            CHECK(rep.status == quatcalc::SlopeStatus::DegenerateResidual);
    }
    CHECK_THROWS_AS(quatcalc::d_unit_imaginary(Quaternion{1.0}, unit_j),
                    quatcalc::pure_real_error);
}
