// Copyright 2026 the carleman-lab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "carleman_lab/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace carleman::quadrature {

namespace {
constexpr double kPi = 3.14159265358979323846;

/// (sin q / q)^p with the q -> 0 limit; smooth and bounded on [0, pi/2].
double sinc_pow(double q, double p) {
    if (q < 1e-8) return 1.0;
    return std::pow(std::sin(q) / q, p);
}

/// int over q in [qa,qb] of q^p * H(q) dq where H is linearly interpolated
/// between its endpoint values.
double q_moment_linear(double qa, double qb, double ha, double hb, double p) {
    const PowerMoments m = power_moments(qa, qb, p);
    if (qb <= qa) return 0.0;
    const double slope = (hb - ha) / (qb - qa);
    return ha * m.m0 + slope * (m.m1 - qa * m.m0);
}

/// Helper on one monotone half of [0,pi]: integrates fhat * sin^p over
/// [a,b] contained in [0,pi/2] (left=true) or [pi/2,pi] (left=false).
double half_interval(double a, double b, double fa, double fb, double p, bool left) {
    if (b <= a) return 0.0;
    if (left) {
        const double ha = fa * sinc_pow(a, p);
        const double hb = fb * sinc_pow(b, p);
        return q_moment_linear(a, b, ha, hb, p);
    }
    // mirror: q = pi - theta, orientation flips
    const double qa = kPi - b, qb = kPi - a;
    const double ha = fb * sinc_pow(qa, p);
    const double hb = fa * sinc_pow(qb, p);
    return q_moment_linear(qa, qb, ha, hb, p);
}
} // namespace

PowerMoments power_moments(double a, double b, double p) {
    if (p <= -1.0 && a <= 0.0)
        throw std::invalid_argument("power_moments: non-integrable weight at 0");
    PowerMoments m;
    if (p == -1.0) {
        m.m0 = std::log(b / a);
        m.m1 = b - a;
        return m;
    }
    m.m0 = (std::pow(b, p + 1.0) - std::pow(a, p + 1.0)) / (p + 1.0);
    m.m1 = (std::pow(b, p + 2.0) - std::pow(a, p + 2.0)) / (p + 2.0);
    return m;
}

double linear_power_integral(double a, double b, double fa, double fb, double p) {
    if (b <= a) return 0.0;
    return q_moment_linear(a, b, fa, fb, p);
}

double linear_sin_power_integral(double a, double b, double fa, double fb, double p) {
    if (b <= a) return 0.0;
    if (a < 0.0 || b > kPi + 1e-12)
        throw std::invalid_argument("linear_sin_power_integral: interval outside [0,pi]");
    const double half = 0.5 * kPi;
    if (b <= half) return half_interval(a, b, fa, fb, p, true);
    if (a >= half) return half_interval(a, b, fa, fb, p, false);
    const double fm = fa + (fb - fa) * (half - a) / (b - a);
    return half_interval(a, half, fa, fm, p, true) +
           half_interval(half, b, fm, fb, p, false);
}

double sin_power_integral(double a, double b, double p) {
    return linear_sin_power_integral(a, b, 1.0, 1.0, p);
}

} // namespace carleman::quadrature
