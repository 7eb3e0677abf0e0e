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

#include "carleman_lab/spectrum.hpp"

#include "carleman_lab/quadrature.hpp"
#include "carleman_lab/weights.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace carleman::spectrum {

namespace {
constexpr double kPi = 3.14159265358979323846;

void check_k(int k) {
    if (k < 0) throw std::invalid_argument("spectrum: k must be >= 0");
}
void check_s(double s) {
    if (!(s > 0.0 && s < 1.0))
        throw std::invalid_argument("spectrum: s must lie in (0,1)");
}

double log_sinh(double a) {
    // log(sinh a) for a > 0, stable for both tails
    if (a < 1e-6) return std::log(a) + a * a / 6.0;
    if (a > 20.0) return a - std::log(2.0) + std::log1p(-std::exp(-2.0 * a));
    return std::log(std::sinh(a));
}
} // namespace

double explicit_eigenvalue(int k, double s) {
    check_k(k);
    check_s(s);
    const double a = 1.0 - 2.0 * s;
    const double m = k - s + 0.5;
    return -0.25 * a * a - m * m;
}

double sl_eigenvalue_closed_form(int k, double s) {
    check_k(k);
    check_s(s);
    return k * (k + 1.0 - 2.0 * s);
}

double radial_exponent(int k, double s) {
    check_k(k);
    check_s(s);
    return k - s + 0.5;
}

double legendre_weight_moment(int m, double mu) {
    if (m < 0) throw std::invalid_argument("legendre_weight_moment: m >= 0");
    if (m % 2 == 1) return 0.0;
    const int p = m / 2;
    // int_{-1}^1 (1-x^2)^{-mu} x^{2p} dx = B(p + 1/2, 1 - mu)
    return std::beta(p + 0.5, 1.0 - mu);
}

std::vector<double> legendre_coeffs(int k, double mu) {
    check_k(k);
    if (!(mu > 0.0 && mu < 1.0))
        throw std::invalid_argument("legendre_coeffs: mu must lie in (0,1)");

    const double c = static_cast<double>(k) * k - 2.0 * k * mu + k;
    // alpha_{j+2} = (j(j-1) - 2 j (mu-1) - c) alpha_j / ((j+2)(j+1));
    // the j = k multiplier of alpha_k vanishes identically, which is what
    // terminates the series at degree k.
    std::vector<double> a(static_cast<std::size_t>(k) + 3, 0.0);
    a[static_cast<std::size_t>(k % 2)] = 1.0;
    for (int j = 0; j <= k; ++j) {
        const double num = j * (j - 1.0) - 2.0 * j * (mu - 1.0) - c;
        a[static_cast<std::size_t>(j) + 2] =
            num * a[static_cast<std::size_t>(j)] / ((j + 2.0) * (j + 1.0));
    }
    double amax = 0.0;
    for (int j = 0; j <= k; ++j) amax = std::max(amax, std::abs(a[j]));
    if (std::abs(a[static_cast<std::size_t>(k) + 1]) > 1e-12 * amax ||
        std::abs(a[static_cast<std::size_t>(k) + 2]) > 1e-12 * amax)
        throw std::logic_error("legendre_coeffs: recursion failed to truncate");
    a.resize(static_cast<std::size_t>(k) + 1);

    // unit weighted L2 norm, positive leading coefficient
    double norm2 = 0.0;
    for (int i = 0; i <= k; ++i)
        for (int j = 0; j <= k; ++j)
            if (a[i] != 0.0 && a[j] != 0.0)
                norm2 += a[i] * a[j] * legendre_weight_moment(i + j, mu);
    const double scale = 1.0 / std::sqrt(norm2);
    for (auto& v : a) v *= scale;
    if (a[static_cast<std::size_t>(k)] < 0.0)
        for (auto& v : a) v = -v;
    return a;
}

EigenPair EigenPair::make(int k, double s) {
    EigenPair p;
    p.k = k;
    p.s = s;
    p.lambda_paper = explicit_eigenvalue(k, s);
    p.mu = radial_exponent(k, s);
    p.coeffs = legendre_coeffs(k, s);
    return p;
}

double eigenfunction_eval(const EigenPair& pair, double theta, EigenForm form) {
    const double x = std::cos(theta);
    double pk = 0.0;
    for (std::size_t j = pair.coeffs.size(); j-- > 0;)
        pk = pk * x + pair.coeffs[j];
    if (form == EigenForm::u) return pk;
    return std::pow(std::sin(theta), 0.5 * (1.0 - 2.0 * pair.s)) * pk;
}

std::vector<double> sturm_liouville_spectrum(double s, int k_max, int n_nodes) {
    check_s(s);
    if (k_max < 0) throw std::invalid_argument("sturm_liouville_spectrum: k_max >= 0");
    if (n_nodes < k_max + 8)
        throw std::invalid_argument("sturm_liouville_spectrum: grid too coarse for k_max");

    const int n = n_nodes;
    const double p_flux = 2.0 * s - 1.0;
    const double p_mass = 1.0 - 2.0 * s;
    std::vector<double> th(n);
    for (int j = 0; j < n; ++j)
        th[j] = kPi * static_cast<double>(j) / (n - 1);

    // exact-flux face coefficients and exact mass moments
    std::vector<double> kappa(n - 1), mass(n);
    for (int j = 0; j + 1 < n; ++j)
        kappa[j] = 1.0 / quadrature::sin_power_integral(th[j], th[j + 1], p_flux);
    for (int j = 0; j < n; ++j) {
        const double lo = j == 0 ? th[0] : 0.5 * (th[j - 1] + th[j]);
        const double hi = j == n - 1 ? th[n - 1] : 0.5 * (th[j] + th[j + 1]);
        mass[j] = quadrature::sin_power_integral(lo, hi, p_mass);
    }

    Eigen::VectorXd diag(n), sub(n - 1);
    for (int j = 0; j < n; ++j) {
        double d = 0.0;
        if (j > 0) d += kappa[j - 1];
        if (j + 1 < n) d += kappa[j];
        diag[j] = d / mass[j];
    }
    for (int j = 0; j + 1 < n; ++j)
        sub[j] = -kappa[j] / std::sqrt(mass[j] * mass[j + 1]);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("sturm_liouville_spectrum: eigensolver failed");

    std::vector<double> out(static_cast<std::size_t>(k_max) + 1);
    for (int k = 0; k <= k_max; ++k) out[static_cast<std::size_t>(k)] = es.eigenvalues()[k];
    return out;
}

double dist_to_spectrum(double x, double s) {
    check_s(s);
    const double k_star = std::round(x + s - 0.5);
    double best = std::numeric_limits<double>::infinity();
    for (double k : {k_star - 1.0, k_star, k_star + 1.0}) {
        if (k < 0.0) continue;
        best = std::min(best, std::abs(x - (k - s + 0.5)));
    }
    best = std::min(best, std::abs(x - (0.0 - s + 0.5)));
    return best;
}

double parametrix_kernel(double mu, double tau, double t, double s_var) {
    if (!(mu > 0.0) || !(tau > 0.0))
        throw std::invalid_argument("parametrix_kernel: mu, tau must be positive");
    const double T = weights::turning_point(mu, tau);
    const double dphi = tau * (weights::phi(t) - weights::phi(s_var));
    if (t > T) {
        // exponent dphi - mu|t-s| is non-positive up to O(1) here
        return -0.5 / mu * std::exp(dphi - mu * std::abs(t - s_var));
    }
    if (t > s_var) {
        const double a = mu * (t - s_var);
        return -std::exp(dphi + log_sinh(a)) / mu; // sinh(mu(s-t)) = -sinh(a)
    }
    return 0.0;
}

std::vector<double> radial_conjugated_apply(const std::vector<double>& g,
                                            double t0, double dt,
                                            double mu, double tau) {
    std::vector<double> out(g.size(), 0.0);
    for (std::size_t i = 1; i + 1 < g.size(); ++i) {
        const double t = t0 + dt * static_cast<double>(i);
        const double vp = tau * weights::phi_prime(t);
        const double vpp = tau * weights::phi_double_prime(t);
        const double d2 = (g[i + 1] - 2.0 * g[i] + g[i - 1]) / (dt * dt);
        const double d1 = (g[i + 1] - g[i - 1]) / (2.0 * dt);
        out[i] = d2 + (vp * vp - mu * mu - vpp) * g[i] - 2.0 * vp * d1;
    }
    return out;
}

} // namespace carleman::spectrum
