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

#ifndef CARLEMAN_LAB_QUADRATURE_HPP
#define CARLEMAN_LAB_QUADRATURE_HPP

namespace carleman::quadrature {

// Cell-wise moment rules for the degenerate weights y^p and sin(theta)^p.
// Linear interpolants are integrated exactly against the weight, which keeps
// the composite rules second order even when p is in (-1,0).

/// First two moments of y^p over [a,b], 0 <= a < b, p > -1.
/// m0 = int y^p dy, m1 = int y^{p+1} dy.  Handles p == -1 for m0 via log.
struct PowerMoments {
    double m0;
    double m1;
};
PowerMoments power_moments(double a, double b, double p);

/// int_a^b fhat(y) y^p dy with fhat linear, fhat(a)=fa, fhat(b)=fb.
double linear_power_integral(double a, double b, double fa, double fb, double p);

/// int_a^b fhat(theta) sin(theta)^p dtheta on [0,pi] with fhat linear.
/// The integrable endpoint degeneracy of sin^p is absorbed into exact
/// power moments of the distance to the nearest endpoint.
double linear_sin_power_integral(double a, double b, double fa, double fb, double p);

/// int_a^b sin(theta)^p dtheta, p > -1, on [0,pi].
double sin_power_integral(double a, double b, double p);

} // namespace carleman::quadrature

#endif
