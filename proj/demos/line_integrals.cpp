// Line integrals of the differential along polyline paths: convergence to
// the endpoint difference, path independence, closed loops, and the
// symmetric power integral with its closed form.
#include <cstdio>
#include <iostream>

#include "quatcalc/quatcalc.hpp"

using namespace quatcalc;

int main() {
    const Quaternion a{1.0, 0.0, 0.0, 0.0};
    const Quaternion b{0.0, 0.0, 1.0, 0.0};
    const AnalyticFunction cubic = AnalyticFunction::pow(3);
    const Quaternion endpoint = eval(cubic, b) - eval(cubic, a);

    std::cout << "integral of D(x^3) along the straight path " << a << " -> " << b << "\n";
    std::cout << "endpoint difference: " << endpoint << "\n";
    for (const int N : {100, 1000, 10000}) {
        const Quaternion value = line_integral_D(cubic, Path{{a, b}, N});
        std::printf("  N = %5d   error = %.3e\n", N, (value - endpoint).norm());
    }

    const Quaternion mid{0.8, 0.3, 0.7, -0.2};
    const Quaternion direct = line_integral_D(cubic, Path{{a, b}, 4000});
    const Quaternion detour = line_integral_D(cubic, Path{{a, mid, b}, 4000});
    std::cout << "\nsame endpoints, different routes:\n";
    std::cout << "  direct " << direct << "\n";
    std::cout << "  detour " << detour << "\n";

    const AnalyticFunction f = AnalyticFunction::exp();
    const Path loop{{{1.0, 0.5, 0.0, 0.0},
                     {0.0, 1.0, 0.5, 0.0},
                     {-0.5, 0.5, 1.0, 0.5},
                     {1.0, 0.5, 0.0, 0.0}},
                    4000};
    std::cout << "\nclosed loop, exp: |integral| = " << line_integral_D(f, loop).norm() << "\n";

    std::cout << "\nsymmetric integral of x^2 from " << a << " to i:\n";
    const Quaternion i_unit{0.0, 1.0, 0.0, 0.0};
    const Quaternion closed = (eval(cubic, i_unit) - eval(cubic, a)) * (1.0 / 3.0);
    std::cout << "  closed form (b^3 - a^3)/3 = " << closed << "\n";
    for (const int N : {100, 1000, 10000}) {
        const Quaternion value = symmetric_integral(2, Path{{a, i_unit}, N});
        std::printf("  N = %5d   error = %.3e\n", N, (value - closed).norm());
    }
    return 0;
}
