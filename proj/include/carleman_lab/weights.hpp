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

#ifndef CARLEMAN_LAB_WEIGHTS_HPP
#define CARLEMAN_LAB_WEIGHTS_HPP

namespace carleman::weights {

// The weight is expressed in the conformal variable t = ln r.  Callers working
// in Cartesian coordinates compose with t = ln|y|.

/// phi(t) = -t + (t*atan(t) - log(1+t^2)/2) / 10.  Strictly decreasing.
double phi(double t);

/// phi'(t) = -1 + atan(t)/10.  Monotone increasing, range (-1-pi/20, -1+pi/20).
double phi_prime(double t);

/// phi''(t) = 1 / (10 (1+t^2)) > 0 (pseudoconvexity).
double phi_double_prime(double t);

/// phi'''(t) = -t / (5 (1+t^2)^2).
double phi_third(double t);

/// phi''''(t) = (6 t^2 - 2) / (10 (1+t^2)^3).
double phi_fourth(double t);

/// Solves tau * phi'(t) = -mu.  Returns the unique finite root when
/// mu/tau lies in (1 - pi/20, 1 + pi/20); otherwise -inf when -mu is below
/// the range of tau*phi' (mu/tau >= 1 + pi/20), +inf when above.
/// The finite root is located by safeguarded bisection to 1e-10 absolute.
/// Throws std::invalid_argument for non-positive mu or tau.
double turning_point(double mu, double tau);

/// Conjugation weight varphi = tau * phi with its derivatives.
struct CarlemanWeight {
    double tau;

    explicit CarlemanWeight(double tau_);

    double conjugated(double t) const { return tau * phi(t); }
    double conjugated_prime(double t) const { return tau * phi_prime(t); }
    double conjugated_double_prime(double t) const { return tau * phi_double_prime(t); }
    double conjugated_fourth(double t) const { return tau * phi_fourth(t); }
    double turning_point(double mu) const { return weights::turning_point(mu, tau); }
};

} // namespace carleman::weights

#endif
