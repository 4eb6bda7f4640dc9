// Walks through the first- and second-order differential of a few analytic
// functions at a quaternionic point: the parallel/perpendicular split of the
// displacement, the value of the differential, and how fast the linear model
// tracks the true increment as the step shrinks.
#include <cstdio>
#include <iostream>

#include "quatcalc/quatcalc.hpp"

using namespace quatcalc;

int main() {
    const Quaternion x{1.0, 1.0, 0.5, 0.0};
    const Quaternion d{0.3, -0.2, 0.7, 0.4};

    std::cout << "base point x      = " << x << "\n";
    std::cout << "displacement d    = " << d << "\n";
    const TangentSplit ts = split(x, d);
    std::cout << "  parallel part   = " << ts.parallel << "\n";
    std::cout << "  perpendicular   = " << ts.perp << "\n";
    std::cout << "  polar radius r  = " << ts.frame.r << "\n\n";

    for (const auto& [name, f] : {std::pair{"exp", AnalyticFunction::exp()},
                                  std::pair{"x^3", AnalyticFunction::pow(3)},
                                  std::pair{"sin", AnalyticFunction::sin()}}) {
        std::cout << name << "(x)    = " << eval(f, x) << "\n";
        std::cout << "D" << name << "(x;d) = " << dcal(f, x, d) << "\n\n";
    }

    std::cout << "linear-model residual for exp, step = eps * d:\n";
    const AnalyticFunction f = AnalyticFunction::exp();
    double prev = 0.0;
    for (const double eps : {1e-1, 1e-2, 1e-3, 1e-4}) {
        const Quaternion step = d * eps;
        const double resid = (eval(f, x + step) - eval(f, x) - dcal(f, x, step)).norm();
        std::printf("  eps = %.0e   residual = %.3e%s\n", eps, resid,
                    prev > 0.0 ? ("   (shrank " + std::to_string(prev / resid) + "x)").c_str()
                               : "");
        prev = resid;
    }

    std::cout << "\nsecond order: adding the quadratic term for x^3\n";
    for (const double eps : {1e-1, 1e-2, 1e-3}) {
        const AnalyticFunction cubic = AnalyticFunction::pow(3);
        const Quaternion step = d * eps;
        const Quaternion model =
            eval(cubic, x) + dcal(cubic, x, step) + dcal2(cubic, x, step);
        std::printf("  eps = %.0e   residual = %.3e\n", eps,
                    (eval(cubic, x + step) - model).norm());
    }

    std::cout << "\non the real axis the operator collapses to f'(x0) * d:\n";
    const Quaternion x_real{2.0};
    std::cout << "  D exp(2; d) = " << dcal(f, x_real, d) << "\n";
    std::cout << "  exp(2) * d  = " << eval(f, x_real) * d << "\n";
    return 0;
}
