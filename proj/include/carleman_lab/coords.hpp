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

#ifndef CARLEMAN_LAB_COORDS_HPP
#define CARLEMAN_LAB_COORDS_HPP

#include "carleman_lab/grid.hpp"
#include "carleman_lab/params.hpp"

#include <memory>
#include <vector>

namespace carleman::coords {

/// Conformal-polar chart: r = e^t, uniform t axis, angular axis on [0,pi]
/// graded toward both endpoints (where sin theta degenerates) with explicit
/// endpoint layers at theta = 0 and theta = pi.
struct ConformalChart {
    std::vector<double> t;
    std::vector<double> theta;

    static std::shared_ptr<const ConformalChart>
    make(double t0, double t1, int nt, int ntheta, double s);

    std::size_t nt() const { return t.size(); }
    std::size_t ntheta() const { return theta.size(); }
    std::size_t index(std::size_t it, std::size_t jt) const { return it * ntheta() + jt; }
};

/// Symmetric theta axis on [0,pi], n+1 nodes, graded by exponent gamma
/// toward both endpoints (gamma = 1 gives the uniform mesh).
std::vector<double> make_theta_axis(int n, double gamma);

/// int_0^pi fhat(theta) sin(theta)^power dtheta over an axis, cell-wise
/// moment-exact in the degenerate factor.
double angular_integral(const std::vector<double>& theta,
                        const std::vector<double>& f, double power);

/// Centered derivative of f along a (possibly nonuniform) axis.
std::vector<double> axis_derivative(const std::vector<double>& axis,
                                    const std::vector<double>& f);

/// Sampled scalar field on a conformal chart.
struct ChartFunction {
    std::shared_ptr<const ConformalChart> chart;
    std::vector<double> values;

    ChartFunction() = default;
    explicit ChartFunction(std::shared_ptr<const ConformalChart> c);

    double operator()(std::size_t it, std::size_t jt) const {
        return values[chart->index(it, jt)];
    }
    double& at(std::size_t it, std::size_t jt) { return values[chart->index(it, jt)]; }
};

/// u(t,theta) = e^{(n-2s)t/2} w(e^t cos theta, e^t sin theta), resampled
/// bilinearly.  Throws when the chart image leaves w's domain.
ChartFunction to_conformal(const grid::GridFunction& w,
                           std::shared_ptr<const ConformalChart> chart,
                           const FractionalParams& params);

/// Inverse transform onto a Cartesian grid; nodes whose (ln r, theta) fall
/// outside the chart are set to zero.
grid::GridFunction from_conformal(const ChartFunction& u,
                                  std::shared_ptr<const grid::HalfPlaneGrid> g,
                                  const FractionalParams& params);

/// v = sin(theta)^{(1-2s)/2} u.
ChartFunction u_to_v(const ChartFunction& u, const FractionalParams& params);

/// Inverse of u_to_v.  At the degenerate endpoint layers the division is
/// ill-posed; those rows are filled by quadratic extrapolation from the
/// interior and reported as low-confidence node indices.
struct VFormInverse {
    ChartFunction u;
    std::vector<std::size_t> low_confidence;
};
VFormInverse v_to_u(const ChartFunction& v, const FractionalParams& params);

/// Conformal operator sin^{1-2s}(d_t^2 - (n-2s)^2/4) + d_theta(sin^{1-2s} d_theta .)
/// via centered/conservative second-order differences; values on interior
/// nodes, zero on the excluded boundary layers.
ChartFunction apply_conformal_operator(const ChartFunction& u,
                                       const FractionalParams& params);

/// Divergence-form Cartesian operator div(y2^{1-2s} grad w) with exact-flux
/// face coefficients in y2; values on interior nodes only.
grid::GridFunction apply_cartesian_operator(const grid::GridFunction& w,
                                            const FractionalParams& params);

/// Weighted Neumann trace lim_{y2->0} y2^{1-2s} d2 w, via flux-form
/// differences on the two innermost layers and Richardson extrapolation
/// with exponent 2-2s.  `converged` is false when a third-layer check
/// disagrees (oscillating layer values).
struct NeumannTrace {
    std::vector<double> values;
    bool converged = true;
};
NeumannTrace neumann_trace(const grid::GridFunction& w, const FractionalParams& params);

} // namespace carleman::coords

#endif
