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

#include "carleman_lab/coords.hpp"

#include "carleman_lab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace carleman::coords {

namespace {
constexpr double kPi = 3.14159265358979323846;
} // namespace

std::shared_ptr<const ConformalChart>
ConformalChart::make(double t0, double t1, int nt, int ntheta, double s) {
    if (!(t1 > t0)) throw std::invalid_argument("ConformalChart: t1 <= t0");
    if (nt < 3 || ntheta < 5) throw std::invalid_argument("ConformalChart: too few nodes");
    if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("ConformalChart: s out of range");

    auto c = std::make_shared<ConformalChart>();
    c->t.resize(nt);
    for (int i = 0; i < nt; ++i)
        c->t[i] = t0 + (t1 - t0) * static_cast<double>(i) / (nt - 1);
    const double gamma = std::clamp(2.0 / (2.0 - 2.0 * s), 1.0, 3.0);
    c->theta = make_theta_axis(ntheta - 1, gamma);
    return c;
}

std::vector<double> make_theta_axis(int n, double gamma) {
    if (n < 2) throw std::invalid_argument("make_theta_axis: n >= 2");
    std::vector<double> th(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        const double xi = static_cast<double>(j) / n;
        const double m = xi <= 0.5 ? 0.5 * std::pow(2.0 * xi, gamma)
                                   : 1.0 - 0.5 * std::pow(2.0 * (1.0 - xi), gamma);
        th[static_cast<std::size_t>(j)] = kPi * m;
    }
    th.front() = 0.0;
    th.back() = kPi;
    return th;
}

double angular_integral(const std::vector<double>& theta,
                        const std::vector<double>& f, double power) {
    if (theta.size() != f.size())
        throw std::invalid_argument("angular_integral: size mismatch");
    double total = 0.0;
    for (std::size_t j = 0; j + 1 < theta.size(); ++j)
        total += quadrature::linear_sin_power_integral(theta[j], theta[j + 1],
                                                       f[j], f[j + 1], power);
    return total;
}

std::vector<double> axis_derivative(const std::vector<double>& axis,
                                    const std::vector<double>& f) {
    if (axis.size() != f.size() || axis.size() < 3)
        throw std::invalid_argument("axis_derivative: bad sizes");
    const std::size_t n = axis.size();
    std::vector<double> d(n);
    d[0] = (f[1] - f[0]) / (axis[1] - axis[0]);
    d[n - 1] = (f[n - 1] - f[n - 2]) / (axis[n - 1] - axis[n - 2]);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double hl = axis[i] - axis[i - 1], hr = axis[i + 1] - axis[i];
        d[i] = (f[i + 1] * hl * hl - f[i - 1] * hr * hr + f[i] * (hr * hr - hl * hl)) /
               (hl * hr * (hl + hr));
    }
    return d;
}

ChartFunction::ChartFunction(std::shared_ptr<const ConformalChart> c)
    : chart(std::move(c)), values(chart->nt() * chart->ntheta(), 0.0) {}

ChartFunction to_conformal(const grid::GridFunction& w,
                           std::shared_ptr<const ConformalChart> chart,
                           const FractionalParams& params) {
    ChartFunction u(std::move(chart));
    const auto& c = *u.chart;
    const double half = 0.5 * (params.n - 2.0 * params.s);
    for (std::size_t it = 0; it < c.nt(); ++it) {
        const double r = std::exp(c.t[it]);
        const double amp = std::exp(half * c.t[it]);
        for (std::size_t jt = 0; jt < c.ntheta(); ++jt) {
            const double x = r * std::cos(c.theta[jt]);
            const double z = std::max(0.0, r * std::sin(c.theta[jt]));
            u.at(it, jt) = amp * w.bilinear(x, z);
        }
    }
    return u;
}

grid::GridFunction from_conformal(const ChartFunction& u,
                                  std::shared_ptr<const grid::HalfPlaneGrid> g,
                                  const FractionalParams& params) {
    grid::GridFunction w(std::move(g));
    const auto& gr = *w.grid;
    const auto& c = *u.chart;
    const double half = 0.5 * (params.n - 2.0 * params.s);

    auto chart_bilinear = [&](double t, double th) {
        auto cell = [](const std::vector<double>& ax, double v) -> std::size_t {
            auto it = std::upper_bound(ax.begin(), ax.end(), v);
            std::size_t i = static_cast<std::size_t>(std::distance(ax.begin(), it));
            if (i == 0) return 0;
            if (i >= ax.size()) return ax.size() - 2;
            return i - 1;
        };
        const std::size_t i = cell(c.t, t), j = cell(c.theta, th);
        const double tx = (t - c.t[i]) / (c.t[i + 1] - c.t[i]);
        const double tz = (th - c.theta[j]) / (c.theta[j + 1] - c.theta[j]);
        return (u(i, j) * (1 - tx) + u(i + 1, j) * tx) * (1 - tz) +
               (u(i, j + 1) * (1 - tx) + u(i + 1, j + 1) * tx) * tz;
    };

    for (std::size_t i = 0; i < gr.n1(); ++i) {
        for (std::size_t j = 0; j < gr.n2(); ++j) {
            const double x = gr.y1[i], z = gr.y2[j];
            const double r = std::hypot(x, z);
            if (r <= 0.0) continue;
            const double t = std::log(r);
            if (t < c.t.front() || t > c.t.back()) continue;
            const double th = std::atan2(z, x);
            w.at(i, j) = std::exp(-half * t) * chart_bilinear(t, th);
        }
    }
    return w;
}

ChartFunction u_to_v(const ChartFunction& u, const FractionalParams& params) {
    ChartFunction v(u.chart);
    const auto& c = *u.chart;
    const double e = 0.5 * (1.0 - 2.0 * params.s);
    for (std::size_t it = 0; it < c.nt(); ++it)
        for (std::size_t jt = 0; jt < c.ntheta(); ++jt)
            v.at(it, jt) = std::pow(std::sin(c.theta[jt]), e) * u(it, jt);
    return v;
}

VFormInverse v_to_u(const ChartFunction& v, const FractionalParams& params) {
    VFormInverse out;
    out.u = ChartFunction(v.chart);
    const auto& c = *v.chart;
    const double e = 0.5 * (2.0 * params.s - 1.0);
    const std::size_t m = c.ntheta();
    for (std::size_t it = 0; it < c.nt(); ++it) {
        for (std::size_t jt = 1; jt + 1 < m; ++jt)
            out.u.at(it, jt) = std::pow(std::sin(c.theta[jt]), e) * v(it, jt);
        // endpoint layers: quadratic extrapolation from the three nearest
        // interior nodes, marked low-confidence
        auto extrap = [&](std::size_t j0, std::size_t j1, std::size_t j2, std::size_t jq) {
            const double x0 = c.theta[j0], x1 = c.theta[j1], x2 = c.theta[j2];
            const double f0 = out.u(it, j0), f1 = out.u(it, j1), f2 = out.u(it, j2);
            const double xq = c.theta[jq];
            const double l0 = (xq - x1) * (xq - x2) / ((x0 - x1) * (x0 - x2));
            const double l1 = (xq - x0) * (xq - x2) / ((x1 - x0) * (x1 - x2));
            const double l2 = (xq - x0) * (xq - x1) / ((x2 - x0) * (x2 - x1));
            out.u.at(it, jq) = l0 * f0 + l1 * f1 + l2 * f2;
            out.low_confidence.push_back(c.index(it, jq));
        };
        extrap(1, 2, 3, 0);
        extrap(m - 2, m - 3, m - 4, m - 1);
    }
    return out;
}

ChartFunction apply_conformal_operator(const ChartFunction& u,
                                       const FractionalParams& params) {
    ChartFunction out(u.chart);
    const auto& c = *u.chart;
    const double a = 1.0 - 2.0 * params.s;
    const double shift = 0.25 * (params.n - 2.0 * params.s) * (params.n - 2.0 * params.s);
    const std::size_t nt = c.nt(), m = c.ntheta();
    const double dt = c.t[1] - c.t[0];

    // exact-flux angular face coefficients: 1 / int sin^{2s-1}
    std::vector<double> kappa(m - 1);
    for (std::size_t j = 0; j + 1 < m; ++j)
        kappa[j] = 1.0 / quadrature::sin_power_integral(c.theta[j], c.theta[j + 1], -a);

    for (std::size_t it = 1; it + 1 < nt; ++it) {
        for (std::size_t jt = 1; jt + 1 < m; ++jt) {
            const double sin_pow = std::pow(std::sin(c.theta[jt]), a);
            const double dtt = (u(it + 1, jt) - 2.0 * u(it, jt) + u(it - 1, jt)) / (dt * dt);
            const double flux_hi = kappa[jt] * (u(it, jt + 1) - u(it, jt));
            const double flux_lo = kappa[jt - 1] * (u(it, jt) - u(it, jt - 1));
            const double dth = (flux_hi - flux_lo) /
                               (0.5 * (c.theta[jt + 1] - c.theta[jt - 1]));
            out.at(it, jt) = sin_pow * (dtt - shift * u(it, jt)) + dth;
        }
    }
    return out;
}

grid::GridFunction apply_cartesian_operator(const grid::GridFunction& w,
                                            const FractionalParams& params) {
    grid::GridFunction out(w.grid);
    const auto& g = *w.grid;
    const double a = 1.0 - 2.0 * params.s;
    const std::size_t n1 = g.n1(), n2 = g.n2();
    const double h1 = g.y1[1] - g.y1[0];

    // exact-flux coefficients for y2^{1-2s} d2: flux = (w_{j+1}-w_j) / int y^{2s-1}
    std::vector<double> kappa(n2 - 1);
    for (std::size_t j = 0; j + 1 < n2; ++j) {
        const auto m = quadrature::power_moments(g.y2[j], g.y2[j + 1], -a);
        kappa[j] = 1.0 / m.m0;
    }

    for (std::size_t i = 1; i + 1 < n1; ++i) {
        for (std::size_t j = 1; j + 1 < n2; ++j) {
            const double wy = std::pow(g.y2[j], a);
            const double d11 = (w(i + 1, j) - 2.0 * w(i, j) + w(i - 1, j)) / (h1 * h1);
            const double flux_hi = kappa[j] * (w(i, j + 1) - w(i, j));
            const double flux_lo = kappa[j - 1] * (w(i, j) - w(i, j - 1));
            const double d2 = (flux_hi - flux_lo) / (0.5 * (g.y2[j + 1] - g.y2[j - 1]));
            out.at(i, j) = wy * d11 + d2;
        }
    }
    return out;
}

NeumannTrace neumann_trace(const grid::GridFunction& w, const FractionalParams& params) {
    const auto& g = *w.grid;
    if (g.n2() < 4)
        throw std::invalid_argument("neumann_trace: need >= 4 normal layers");
    const double a = 1.0 - 2.0 * params.s;
    const double e = 2.0 - 2.0 * params.s; // Richardson exponent of the smooth remainder

    double inv_int[3];
    for (int j = 0; j < 3; ++j) {
        const auto m = quadrature::power_moments(g.y2[static_cast<std::size_t>(j)],
                                                 g.y2[static_cast<std::size_t>(j) + 1], -a);
        inv_int[j] = 1.0 / m.m0;
    }
    const double e0 = std::pow(g.y2[1], e), e1 = std::pow(g.y2[2], e), e2 = std::pow(g.y2[3], e);

    NeumannTrace out;
    out.values.resize(g.n1());
    double scale = 0.0, max_dev = 0.0;
    for (std::size_t i = 0; i < g.n1(); ++i) {
        const double f0 = (w(i, 1) - w(i, 0)) * inv_int[0];
        const double f1 = (w(i, 2) - w(i, 1)) * inv_int[1];
        const double f2 = (w(i, 3) - w(i, 2)) * inv_int[2];
        const double h01 = (f0 * e1 - f1 * e0) / (e1 - e0);
        const double h12 = (f1 * e2 - f2 * e1) / (e2 - e1);
        out.values[i] = h01;
        scale = std::max({scale, std::abs(f0), std::abs(h01)});
        max_dev = std::max(max_dev, std::abs(h01 - h12));
    }
    out.converged = max_dev <= std::max(1e-10, 0.25 * std::max(scale, 1e-30));
    return out;
}

} // namespace carleman::coords
