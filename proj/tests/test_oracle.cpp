#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "quatcalc/oracle.hpp"
#include "quatcalc/random.hpp"

using quatcalc::AnalyticFunction;
using quatcalc::Quaternion;
using quatcalc::SlopeStatus;
using quatcalc::approx_equal;
using quatcalc::unit_i;
using quatcalc::unit_j;
using quatcalc::unit_k;

namespace {
const double pi = std::acos(-1.0);
}

TEST_CASE("direct power expansion") {
    quatcalc::Rng rng(5);
    const Quaternion x = rng.quat_box(2.0);
    const Quaternion d = rng.quat_box(2.0);
    CHECK(quatcalc::direct_power_first_order(1, x, d) == d);
    CHECK(approx_equal(quatcalc::direct_power_first_order(2, Quaternion{1, 1, 0, 0}, unit_j),
                       Quaternion{0, 0, 2, 0}));
    // n = 3: x^2 d + x d x + d x^2 assembled by hand
    const Quaternion want = x * x * d + x * d * x + d * x * x;
    CHECK(approx_equal(quatcalc::direct_power_first_order(3, x, d), want, 1e-13, 1e-13));
    CHECK_THROWS_AS(quatcalc::direct_power_first_order(0, x, d), std::invalid_argument);
}

TEST_CASE("gauss-legendre nodes integrate polynomials exactly") {
    std::vector<double> s, w;
    quatcalc::detail::gauss_legendre01(8, s, w);
    REQUIRE(s.size() == 8);
    double total = 0, p5 = 0, p15 = 0;
    for (int i = 0; i < 8; ++i) {
        total += w[i];
        p5 += w[i] * std::pow(s[i], 5);
        p15 += w[i] * std::pow(s[i], 15);
    }
    CHECK_THAT(total, Catch::Matchers::WithinAbs(1.0, 1e-14));
    CHECK_THAT(p5, Catch::Matchers::WithinAbs(1.0 / 6.0, 1e-14));
    // degree 15 = 2*8-1 is still exact for 8 nodes
    CHECK_THAT(p15, Catch::Matchers::WithinAbs(1.0 / 16.0, 1e-14));
}

TEST_CASE("exp expansion quadrature: closed cases") {
    quatcalc::Rng rng(9);
    const Quaternion d = rng.quat_box(1.0);
    CHECK(approx_equal(quatcalc::exp_expansion_quadrature(Quaternion{}, d, 16), d, 1e-14, 1e-14));

    // parallel displacement commutes with the exponentials
    const Quaternion x = rng.point(0.1, 2.0);
    const auto ts = quatcalc::split(x, rng.quat_box(1.0));
    const Quaternion expx = eval(AnalyticFunction::exp(), x);
    CHECK(approx_equal(quatcalc::exp_expansion_quadrature(x, ts.parallel, 64),
                       expx * ts.parallel, 1e-12, 1e-11));

    CHECK(approx_equal(quatcalc::exp_expansion_quadrature((pi / 2) * unit_i, unit_j, 64),
                       (2.0 / pi) * unit_j, 1e-12, 1e-12));

    CHECK_THROWS_AS(quatcalc::exp_expansion_quadrature(x, d, 4), std::invalid_argument);
}

TEST_CASE("quadrature converges to dcal(exp) as nodes double") {
    quatcalc::Rng rng(13);
    for (int iter = 0; iter < 20; ++iter) {
        const Quaternion x = rng.point(0.1, 3.0);
        const Quaternion d = rng.unit_quat();
        const Quaternion ref = quatcalc::dcal(AnalyticFunction::exp(), x, d);
        double prev = 1e9;
        for (int nodes : {8, 16, 32, 64}) {
            const double err = (quatcalc::exp_expansion_quadrature(x, d, nodes) - ref).norm();
            CHECK(err <= std::max(prev, 2e-13));
            prev = err;
        }
        CHECK(prev <= 1e-10); // 64-node agreement for |x| <= 3
    }
}

TEST_CASE("slope fitting") {
    auto exact2 = quatcalc::fit_slope({1e-2, 1e-3, 1e-4}, {1e-4, 1e-6, 1e-8});
    CHECK(exact2.status == SlopeStatus::Ok);
    CHECK_THAT(exact2.slope, Catch::Matchers::WithinAbs(2.0, 1e-12));
    CHECK_THAT(exact2.r2, Catch::Matchers::WithinAbs(1.0, 1e-12));

    auto degen = quatcalc::fit_slope({1e-2, 1e-3, 1e-4}, {1e-15, 3e-16, 9e-15});
    CHECK(degen.status == SlopeStatus::DegenerateResidual);
    CHECK_FALSE(degen.usable());

    auto noisy = quatcalc::fit_slope({1e-2, 1e-3, 1e-4}, {1e-4, 1e-6, 1e-5});
    CHECK(noisy.status == SlopeStatus::PoorFit);

    CHECK_THROWS_AS(quatcalc::fit_slope({1e-2, 1e-3}, {1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(quatcalc::fit_slope({1e-4, 1e-3, 1e-2}, {1, 1, 1}), std::invalid_argument);
}

TEST_CASE("residual slopes of the first-order expansion") {
    const Quaternion x{1, 1, 0, 0};

    auto rep = quatcalc::residual_slope(AnalyticFunction::pow(2), x, unit_j, 1);
    REQUIRE(rep.usable());
    CHECK_THAT(rep.slope, Catch::Matchers::WithinAbs(2.0, 1e-3));
    // the quadratic's residual is exactly eps^2
    for (std::size_t i = 0; i < rep.epsilons.size(); ++i)
        CHECK_THAT(rep.residuals[i],
                   Catch::Matchers::WithinAbs(rep.epsilons[i] * rep.epsilons[i], 1e-12));

    auto rep2 = quatcalc::residual_slope(AnalyticFunction::pow(2), x, unit_j, 2);
    CHECK(rep2.status == SlopeStatus::DegenerateResidual);

    auto repe = quatcalc::residual_slope(AnalyticFunction::exp(), Quaternion{1, 1, 0, 1}, unit_j, 1);
    REQUIRE(repe.usable());
    CHECK_THAT(repe.slope, Catch::Matchers::WithinAbs(2.0, 0.2));

    CHECK_THROWS_AS(quatcalc::residual_slope(AnalyticFunction::exp(), x, unit_j, 3),
                    std::invalid_argument);
}

TEST_CASE("first-order slope never sags below 2 on the standard family") {
    quatcalc::Rng rng(21);
    const auto funcs = {AnalyticFunction::exp(), AnalyticFunction::sin(), AnalyticFunction::cos(),
                        AnalyticFunction::pow(3), AnalyticFunction::pow(5)};
    for (const auto& f : funcs)
        for (int iter = 0; iter < 20; ++iter) {
            const Quaternion x = rng.point(0.1, 2.0);
            const Quaternion d = rng.unit_quat();
            const auto rep = quatcalc::residual_slope(f, x, d, 1);
            if (rep.usable())
                CHECK(rep.slope > 1.8);
            else
                CHECK(rep.status == SlopeStatus::DegenerateResidual);
        }
}
