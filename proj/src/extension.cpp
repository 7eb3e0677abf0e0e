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

#include "carleman_lab/extension.hpp"

#include "carleman_lab/quadrature.hpp"
#include "carleman_lab/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace carleman::extension {

namespace {

constexpr int kSeriesTerms = 30;
constexpr int kRkSteps = 50000;
constexpr double kAsymptoticZ = 20.0; ///< xi*y at the asymptotic start

/// Frobenius branches at y = 0:
///   p(y) = sum A_m y^{2m},        A_0 = 1, A_{m+1} = xi^2 A_m /((2m+2)(2m+2-2s))
///   q(y) = sum B_m y^{2m+2s},     B_0 = 1, B_{m+1} = xi^2 B_m /((2m+2)(2m+2+2s))
struct FrobeniusBasis {
    double xi2, s;
    void eval(double y, double& p, double& dp, double& q, double& dq) const {
        p = 1.0;
        dp = 0.0;
        double am = 1.0, ypow = 1.0;
        for (int m = 0; m < kSeriesTerms; ++m) {
            const double anext = xi2 * am / ((2.0 * m + 2.0) * (2.0 * m + 2.0 - 2.0 * s));
            ypow *= y * y;
            p += anext * ypow;
            dp += anext * (2.0 * m + 2.0) * ypow / y;
            am = anext;
        }
        const double y2s = std::pow(y, 2.0 * s);
        double bm = 1.0;
        q = y2s;
        dq = 2.0 * s * y2s / y;
        ypow = y2s;
        for (int m = 0; m < kSeriesTerms; ++m) {
            const double bnext = xi2 * bm / ((2.0 * m + 2.0) * (2.0 * m + 2.0 + 2.0 * s));
            ypow *= y * y;
            q += bnext * ypow;
            dq += bnext * (2.0 * m + 2.0 + 2.0 * s) * ypow / y;
            bm = bnext;
        }
    }
};

/// Two-sided state derivative of the profile ODE.
inline void ode_rhs(double y, double th, double dth, double xi2, double s,
                    double& f0, double& f1) {
    f0 = dth;
    f1 = xi2 * th - (1.0 - 2.0 * s) / y * dth;
}

/// Large-argument expansion of the decaying branch, three terms:
/// theta ~ y^{s-1/2} e^{-xi y} S(xi y),
/// S(z) = 1 + c1/(8z) + c1 c2 / (2 (8z)^2), c1 = 4s^2-1, c2 = 4s^2-9.
struct AsymptoticTail {
    double xi, s, anchor; ///< exponent is shifted by e^{+xi*anchor}
    double series(double z) const {
        const double c1 = 4.0 * s * s - 1.0;
        const double c2 = 4.0 * s * s - 9.0;
        return 1.0 + c1 / (8.0 * z) + c1 * c2 / (2.0 * 64.0 * z * z);
    }
    void eval(double y, double& th, double& dth) const {
        const double z = xi * y;
        const double c1 = 4.0 * s * s - 1.0;
        const double c2 = 4.0 * s * s - 9.0;
        const double S = series(z);
        const double dS = (-c1 / (8.0 * z * z) - c1 * c2 / (64.0 * z * z * z)) * xi;
        const double amp = std::pow(y, s - 0.5) * std::exp(-xi * (y - anchor));
        th = amp * S;
        dth = amp * ((s - 0.5) / y * S - xi * S + dS);
    }
};

} // namespace

ExtensionProfile::ExtensionProfile(double xi, double s) : xi_(std::abs(xi)), s_(s) {
    if (xi == 0.0)
        throw std::invalid_argument("ExtensionProfile: xi must be nonzero");
    if (!(s > 0.0 && s < 1.0))
        throw std::invalid_argument("ExtensionProfile: s must lie in (0,1)");

    const double xi2 = xi_ * xi_;
    y_start_ = 0.05 / std::max(1.0, xi_);
    y_max_ = kAsymptoticZ / xi_;

    // backward RK4 from the asymptotic start
    const AsymptoticTail tail{xi_, s_, y_max_};
    const double h = (y_max_ - y_start_) / kRkSteps;
    double y = y_max_, th, dth;
    tail.eval(y_max_, th, dth);

    ys_.resize(kRkSteps + 1);
    th_.resize(kRkSteps + 1);
    dth_.resize(kRkSteps + 1);
    ys_[kRkSteps] = y;
    th_[kRkSteps] = th;
    dth_[kRkSteps] = dth;
    for (int step = kRkSteps; step-- > 0;) {
        const double hh = -h;
        double k1a, k1b, k2a, k2b, k3a, k3b, k4a, k4b;
        ode_rhs(y, th, dth, xi2, s_, k1a, k1b);
        ode_rhs(y + 0.5 * hh, th + 0.5 * hh * k1a, dth + 0.5 * hh * k1b, xi2, s_, k2a, k2b);
        ode_rhs(y + 0.5 * hh, th + 0.5 * hh * k2a, dth + 0.5 * hh * k2b, xi2, s_, k3a, k3b);
        ode_rhs(y + hh, th + hh * k3a, dth + hh * k3b, xi2, s_, k4a, k4b);
        th += hh / 6.0 * (k1a + 2.0 * k2a + 2.0 * k3a + k4a);
        dth += hh / 6.0 * (k1b + 2.0 * k2b + 2.0 * k3b + k4b);
        y += hh;
        ys_[static_cast<std::size_t>(step)] = y;
        th_[static_cast<std::size_t>(step)] = th;
        dth_[static_cast<std::size_t>(step)] = dth;
    }
    if (!std::isfinite(th) || !std::isfinite(dth))
        throw std::runtime_error("ExtensionProfile: backward integration diverged "
                                 "(non-decaying shot)");

    // match theta_back = A p + B q at y_start
    const FrobeniusBasis basis{xi2, s_};
    double p, dp, q, dq;
    basis.eval(y_start_, p, dp, q, dq);
    const double wr = p * dq - dp * q;
    const double A = (th * dq - dth * q) / wr;
    const double B = (p * dth - dp * th) / wr;
    if (!(std::abs(A) > 0.0) || !std::isfinite(A) || !std::isfinite(B))
        throw std::runtime_error("ExtensionProfile: Frobenius matching failed "
                                 "(degenerate Wronskian or non-finite shot)");

    const double inv_a = 1.0 / A;
    for (auto& v : th_) v *= inv_a;
    for (auto& v : dth_) v *= inv_a;
    coef_b_ = B * inv_a;
    tail_scale_ = inv_a;
    dtn_frobenius_ = -2.0 * s_ * coef_b_;

    // Richardson extraction from profile values at eta, 2 eta:
    // F(0,eta) = (theta(eta) - 1) * 2s / eta^{2s} = -m + O(eta^{2-2s}).
    const double eta = 1e-4 * y_start_ / 0.05; // scales like 2e-3/max(1,xi)
    const double e = 2.0 - 2.0 * s_;
    const double f1 = (series_theta(eta) - 1.0) * 2.0 * s_ / std::pow(eta, 2.0 * s_);
    const double f2 = (series_theta(2.0 * eta) - 1.0) * 2.0 * s_ / std::pow(2.0 * eta, 2.0 * s_);
    const double w1 = std::pow(2.0 * eta, e), w2 = std::pow(eta, e);
    dtn_ = -(f1 * w1 - f2 * w2) / (w1 - w2);
}

double ExtensionProfile::series_theta(double y) const {
    const FrobeniusBasis basis{xi_ * xi_, s_};
    double p, dp, q, dq;
    basis.eval(y, p, dp, q, dq);
    return p + coef_b_ * q;
}

double ExtensionProfile::eval(double y2) const {
    if (y2 < 0.0) throw std::invalid_argument("ExtensionProfile::eval: y2 < 0");
    if (y2 == 0.0) return 1.0;
    if (y2 <= y_start_) return series_theta(y2);
    if (y2 >= y_max_) {
        const AsymptoticTail tail{xi_, s_, y_max_};
        double th, dth;
        tail.eval(y2, th, dth);
        return tail_scale_ * th;
    }
    // cubic Hermite between stored steps
    const double h = (y_max_ - y_start_) / kRkSteps;
    auto i = static_cast<std::size_t>((y2 - y_start_) / h);
    i = std::min(i, ys_.size() - 2);
    const double u = (y2 - ys_[i]) / (ys_[i + 1] - ys_[i]);
    const double u2 = u * u, u3 = u2 * u;
    const double dy = ys_[i + 1] - ys_[i];
    return (2 * u3 - 3 * u2 + 1) * th_[i] + (u3 - 2 * u2 + u) * dy * dth_[i] +
           (-2 * u3 + 3 * u2) * th_[i + 1] + (u3 - u2) * dy * dth_[i + 1];
}

double extension_profile(double xi, double s, double y2) {
    return ExtensionProfile(xi, s).eval(y2);
}

double dtn_symbol(double xi, double s) {
    if (xi == 0.0) throw std::invalid_argument("dtn_symbol: xi must be nonzero");
    return ExtensionProfile(xi, s).dtn();
}

double normalized_dtn(double xi, double s) {
    return dtn_symbol(xi, s) / dtn_symbol(1.0, s);
}

void SpectralBoundaryData::validate() const {
    if (xi.size() != amp.size())
        throw std::invalid_argument("SpectralBoundaryData: size mismatch");
    for (std::size_t i = 0; i < xi.size(); ++i) {
        if (xi[i] < 0.0)
            throw std::invalid_argument("SpectralBoundaryData: frequencies must be >= 0");
        if (i > 0 && xi[i] <= xi[i - 1])
            throw std::invalid_argument("SpectralBoundaryData: frequencies must increase");
    }
}

grid::GridFunction cs_extend(const SpectralBoundaryData& data, double s,
                             std::shared_ptr<const grid::HalfPlaneGrid> g) {
    data.validate();
    const double h1 = g->y1[1] - g->y1[0];
    const double nyquist = 3.14159265358979323846 / h1;
    for (double x : data.xi)
        if (x > nyquist)
            throw std::invalid_argument("cs_extend: frequency above tangential Nyquist limit");

    grid::GridFunction out(g);
    const auto& gr = *out.grid;
    for (std::size_t m = 0; m < data.xi.size(); ++m) {
        const double xi = data.xi[m];
        const std::complex<double> amp = data.amp[m];
        if (amp == std::complex<double>(0.0, 0.0)) continue;
        std::vector<double> prof(gr.n2(), 1.0);
        if (xi != 0.0) {
            ExtensionProfile profile(xi, s);
            for (std::size_t j = 0; j < gr.n2(); ++j) prof[j] = profile.eval(gr.y2[j]);
        }
        for (std::size_t i = 0; i < gr.n1(); ++i) {
            const double c = std::cos(xi * gr.y1[i]), sn = std::sin(xi * gr.y1[i]);
            const double wave = amp.real() * c - amp.imag() * sn;
            for (std::size_t j = 0; j < gr.n2(); ++j)
                out.at(i, j) += wave * prof[j];
        }
    }
    return out;
}

grid::GridFunction homogeneous_solution(int k, double s,
                                        std::shared_ptr<const grid::HalfPlaneGrid> g) {
    if (k < 0 || k > 6)
        throw std::invalid_argument("homogeneous_solution: supported degrees are 0..6");
    const std::vector<double> a = spectrum::legendre_coeffs(k, s);
    // |y|^k P_k(cos theta) = sum_j a_j y1^j (y1^2+y2^2)^{(k-j)/2}, with k-j even
    return grid::GridFunction::sample(std::move(g), [k, a](double x, double z) {
        const double r2 = x * x + z * z;
        double val = 0.0;
        for (int j = k % 2; j <= k; j += 2) {
            if (a[static_cast<std::size_t>(j)] == 0.0) continue;
            val += a[static_cast<std::size_t>(j)] * std::pow(x, j) *
                   std::pow(r2, 0.5 * (k - j));
        }
        return val;
    });
}

grid::GridFunction blow_up_rescale(const grid::GridFunction& w, double sigma,
                                   double s) {
    const auto& g = *w.grid;
    if (!(sigma > 0.0))
        throw std::invalid_argument("blow_up_rescale: sigma must be positive");
    if (sigma > 0.95 * std::min({-g.y1.front(), g.y1.back(), g.y2.back()}))
        throw std::invalid_argument("blow_up_rescale: B_sigma does not fit in the grid");

    const double norm = grid::weighted_norm(w, grid::Region::half_ball(sigma), 1.0 - 2.0 * s);
    if (!(norm > 0.0))
        throw std::invalid_argument("blow_up_rescale: zero weighted norm on B_sigma");
    // w_sigma(y) = w(sigma y) / (sigma^{-(n+1)/2 - (1-2s)/2} * norm), n = 1
    const double denom = std::pow(sigma, -1.0 - 0.5 * (1.0 - 2.0 * s)) * norm;

    // Realize on the sigma-scaled subgrid: the contiguous node range whose
    // outermost nodes reach past B_sigma, so every cell meeting B_sigma stays
    // whole and the B_1^+ quadrature of the output is the exact change of
    // variables of the B_sigma^+ quadrature of the input.
    std::size_t i_lo = 0, i_hi = g.n1() - 1, j_hi = g.n2() - 1;
    while (i_lo + 1 < g.n1() && g.y1[i_lo + 1] <= -sigma) ++i_lo;
    {
        std::size_t i = 0;
        while (i + 1 < g.n1() && g.y1[i] < sigma) ++i;
        i_hi = i;
    }
    {
        std::size_t j = 0;
        while (j + 1 < g.n2() && g.y2[j] < sigma) ++j;
        j_hi = j;
    }
    std::vector<double> x_nodes, z_nodes;
    std::vector<std::size_t> xi_idx, zj_idx;
    for (std::size_t i = i_lo; i <= i_hi; ++i) {
        x_nodes.push_back(g.y1[i] / sigma);
        xi_idx.push_back(i);
    }
    for (std::size_t j = 0; j <= j_hi; ++j) {
        z_nodes.push_back(g.y2[j] / sigma);
        zj_idx.push_back(j);
    }
    auto sub = grid::HalfPlaneGrid::from_axes(std::move(x_nodes), std::move(z_nodes));
    grid::GridFunction out(sub);
    for (std::size_t i = 0; i < xi_idx.size(); ++i)
        for (std::size_t j = 0; j < zj_idx.size(); ++j)
            out.at(i, j) = w(xi_idx[i], zj_idx[j]) / denom;
    return out;
}

} // namespace carleman::extension
