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

#include "carleman_lab/weights.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace carleman::weights {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kRootTol = 1e-10;
} // namespace

double phi(double t) {
    return -t + 0.1 * (t * std::atan(t) - 0.5 * std::log1p(t * t));
}

double phi_prime(double t) {
    return -1.0 + 0.1 * std::atan(t);
}

double phi_double_prime(double t) {
    return 0.1 / (1.0 + t * t);
}

double phi_third(double t) {
    const double q = 1.0 + t * t;
    return -t / (5.0 * q * q);
}

double phi_fourth(double t) {
    const double q = 1.0 + t * t;
    return (6.0 * t * t - 2.0) / (10.0 * q * q * q);
}

double turning_point(double mu, double tau) {
    if (!(mu > 0.0))
        throw std::invalid_argument("turning_point: mu must be positive");
    if (!(tau > 0.0))
        throw std::invalid_argument("turning_point: tau must be positive");

    const double ratio = mu / tau;
    // phi' has range (-1 - pi/20, -1 + pi/20); outside it the equation
    // tau*phi' = -mu has no finite solution.
    if (ratio >= 1.0 + kPi / 20.0)
        return -std::numeric_limits<double>::infinity();
    if (ratio <= 1.0 - kPi / 20.0)
        return std::numeric_limits<double>::infinity();

    const auto g = [&](double t) { return phi_prime(t) + ratio; };

    // phi' is strictly increasing, so grow a bracket then bisect.
    double lo = -1.0, hi = 1.0;
    while (g(lo) > 0.0) lo *= 2.0;
    while (g(hi) < 0.0) hi *= 2.0;
    while (hi - lo > kRootTol) {
        const double mid = 0.5 * (lo + hi);
        if (g(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

CarlemanWeight::CarlemanWeight(double tau_) : tau(tau_) {
    if (!(tau > 0.0))
        throw std::invalid_argument("CarlemanWeight: tau must be positive");
}

} // namespace carleman::weights
