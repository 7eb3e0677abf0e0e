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

#ifndef CARLEMAN_LAB_SPECTRUM_HPP
#define CARLEMAN_LAB_SPECTRUM_HPP

#include <vector>

namespace carleman::spectrum {

// Spherical eigenproblem on the half circle, two equivalent conventions:
//   v-form (conjugated):  lambda_k = -(1-2s)^2/4 - (k-s+1/2)^2
//   u-form (weighted SL): -(sin^{1-2s} u')' = Lambda sin^{1-2s} u,
//                          Lambda_k = k (k+1-2s)
// linked by lambda = -Lambda - (1-2s)^2/2 and by the radial exponent
// mu_k^2 = Lambda_k + (1-2s)^2/4, mu_k = k - s + 1/2 (unit spectral gap).

/// lambda_k in the conjugated convention.
double explicit_eigenvalue(int k, double s);

/// Lambda_k = k(k+1-2s) in the weighted Sturm-Liouville convention.
double sl_eigenvalue_closed_form(int k, double s);

/// mu_k = k - s + 1/2.
double radial_exponent(int k, double s);

/// Coefficients alpha_0..alpha_k of the degree-k polynomial solving
/// (1-x^2) P'' + 2(mu-1) x P' + (k^2 - 2 k mu + k) P = 0, where mu in (0,1)
/// is the order of the underlying generalized Legendre equation (mu = s for
/// the spherical eigenfunctions).  Normalized to unit weighted L2 norm
/// int_{-1}^{1} (1-x^2)^{-mu} P^2 dx = 1 with positive leading coefficient;
/// coefficients of parity opposite to k vanish.
std::vector<double> legendre_coeffs(int k, double mu);

/// Exact moment int_{-1}^{1} (1-x^2)^{-mu} x^m dx (zero for odd m).
double legendre_weight_moment(int m, double mu);

struct EigenPair {
    int k = 0;
    double s = 0.5;
    double lambda_paper = 0.0; ///< conjugated-convention eigenvalue
    double mu = 0.0;           ///< radial exponent k - s + 1/2
    std::vector<double> coeffs;

    static EigenPair make(int k, double s);
};

enum class EigenForm { u, v };

/// u-form: P_k(cos theta); v-form: sin(theta)^{(1-2s)/2} P_k(cos theta).
double eigenfunction_eval(const EigenPair& pair, double theta, EigenForm form);

/// Eigenvalues Lambda_0..Lambda_K of the conservative symmetric tridiagonal
/// discretization of the weighted Sturm-Liouville problem with natural
/// (weighted Neumann) boundary conditions, ascending.  n_nodes is the total
/// node count of the uniform theta mesh.  Independent oracle for the closed
/// forms above.
std::vector<double> sturm_liouville_spectrum(double s, int k_max, int n_nodes);

/// min_k | x - mu_k |, mu_k = k - s + 1/2.
double dist_to_spectrum(double x, double s);

/// Piecewise parametrix kernel K_mu(t, s_var) for the conjugated radial
/// operator, with varphi = tau * phi and T = turning_point(mu, tau):
///   t > T:            -exp(varphi(t)-varphi(s)) / (2 mu) * exp(-mu|t-s|)
///   T > t > s:         exp(varphi(t)-varphi(s)) * sinh(mu (s-t)) / mu
///   T > t, s > t:      0
/// Exponents are combined before exponentiation, so the critical regime is
/// evaluated without overflow.
double parametrix_kernel(double mu, double tau, double t, double s_var);

/// (d_t^2 + (tau phi')^2 - mu^2 - 2 tau phi' d_t - tau phi'') g on a uniform
/// t-grid (centered differences; first/last entries zero).
std::vector<double> radial_conjugated_apply(const std::vector<double>& g,
                                            double t0, double dt,
                                            double mu, double tau);

} // namespace carleman::spectrum

#endif
