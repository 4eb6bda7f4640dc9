#pragma once

/// Deterministic case generator shared by the verification suites and tests.
/// Uniform doubles are produced from raw engine bits so that a given seed
/// yields the same stream on every platform.

#include <cstdint>
#include <random>

#include "quatcalc/quaternion.hpp"

namespace quatcalc {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double u01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }

    Quaternion quat_box(double half_width) {
        return {uniform(-half_width, half_width), uniform(-half_width, half_width),
                uniform(-half_width, half_width), uniform(-half_width, half_width)};
    }

    /// Unit-norm displacement.
    Quaternion unit_quat() {
        for (;;) {
            Quaternion q = quat_box(1.0);
            const double n = q.norm();
            if (n > 0.1)
                return q / n;
        }
    }

    /// Base point with imaginary radius above min_r and norm below max_norm.
    Quaternion point(double min_r, double max_norm) {
        for (;;) {
            Quaternion q = quat_box(max_norm / 2.0);
            if (q.imag_norm() > min_r && q.norm() < max_norm)
                return q;
        }
    }

private:
    std::mt19937_64 eng_;
};

} // namespace quatcalc
