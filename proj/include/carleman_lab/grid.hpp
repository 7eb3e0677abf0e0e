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

#ifndef CARLEMAN_LAB_GRID_HPP
#define CARLEMAN_LAB_GRID_HPP

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <memory>
#include <vector>

namespace carleman::grid {

/// Tensor grid on a half-plane rectangle [-X,X] x [0,Y].
/// y1 is uniform; y2 is graded toward the degenerate boundary y2 = 0 as
/// y2_j = Y (j/J)^gamma with gamma = clamp(2/(2-2s), 1, 3), so the weighted
/// quadrature below stays second order.  The j = 0 layer sits exactly on
/// the boundary.
struct HalfPlaneGrid {
    std::vector<double> y1;
    std::vector<double> y2;
    double half_width = 0.0;
    double height = 0.0;
    double grading = 1.0;

    static std::shared_ptr<const HalfPlaneGrid>
    make(double half_width, double height, int n1_half, int n2, double s);

    /// Grid from explicit strictly increasing axes (y2 front must be >= 0).
    static std::shared_ptr<const HalfPlaneGrid>
    from_axes(std::vector<double> y1_nodes, std::vector<double> y2_nodes);

    std::size_t n1() const { return y1.size(); }
    std::size_t n2() const { return y2.size(); }
    std::size_t index(std::size_t i, std::size_t j) const { return i * n2() + j; }
};

/// Sampled scalar field on a HalfPlaneGrid (Cartesian chart).
struct GridFunction {
    std::shared_ptr<const HalfPlaneGrid> grid;
    std::vector<double> values;

    GridFunction() = default;
    explicit GridFunction(std::shared_ptr<const HalfPlaneGrid> g);

    static GridFunction sample(std::shared_ptr<const HalfPlaneGrid> g,
                               const std::function<double(double, double)>& f);

    double operator()(std::size_t i, std::size_t j) const {
        return values[grid->index(i, j)];
    }
    double& at(std::size_t i, std::size_t j) { return values[grid->index(i, j)]; }

    /// Bilinear interpolation; throws when (x,z) is outside the grid.
    double bilinear(double x, double z) const;

    void check_finite() const;
};

/// Map node values through a pointwise function of (y1, y2, value).
GridFunction map(const GridFunction& f,
                 const std::function<double(double, double, double)>& fn);

/// Half-plane region bounded by concentric circles around (c1,c2):
/// r_in^2 <= |y - c|^2 <= r_out^2, intersected with {y2 >= 0}.
struct Region {
    double c1 = 0.0;
    double c2 = 0.0;
    double r_in = 0.0;
    double r_out = 0.0;

    static Region half_ball(double r) { return {0.0, 0.0, 0.0, r}; }
    static Region half_annulus(double r0, double r1) { return {0.0, 0.0, r0, r1}; }
    static Region ball_at(double c1, double c2, double r) { return {c1, c2, 0.0, r}; }
};

/// int over (region) of fhat(y) * y2^power dy, with fhat the cell-wise
/// bilinear interpolant of f.  Cells cut by the region boundary are resolved
/// by recursive subdivision whose depth scales with the mesh so the composite
/// rule converges at order ~2.  Rejects power <= -1 and regions that exceed
/// the grid footprint.
double weighted_integral(const GridFunction& f, const Region& region, double power);

/// sqrt of weighted_integral of f^2 (weighted L2 norm).
double weighted_norm(const GridFunction& f, const Region& region, double power);

/// Trace integral over the y2 = 0 layer: int_a^b fhat(y1, 0) dy1 (second
/// order; partial end cells handled by linear interpolation).
double boundary_integral(const GridFunction& f, double a, double b);
double boundary_integral(const std::vector<double>& trace,
                         const std::vector<double>& y1, double a, double b);

/// int_a^b fhat(y1,0) |y1|^power dy1.  For power <= -1 every cell meeting
/// y1 = 0 must carry zero values (otherwise the weight is non-integrable
/// and the call throws).
double boundary_integral_weighted(const std::vector<double>& trace,
                                  const std::vector<double>& y1,
                                  double a, double b, double power);

enum class OrderMode { bulk, boundary };

/// Least-squares slope of log(integral over B_r) against log r.
/// bulk mode integrates y2^{1-2s} f^2, boundary mode integrates f(.,0)^2.
/// When the integral sequence is not strictly monotone along the shrinking
/// radii (noise floor), `monotone` is false and no fit is returned.
struct VanishingOrderFit {
    double slope = 0.0;
    double residual = 0.0;
    bool monotone = false;
};
VanishingOrderFit vanishing_order(const GridFunction& f,
                                  std::vector<double> radii,
                                  OrderMode mode, double s);

/// Central differences (one-sided at edges): d/dy1 and d/dy2 fields.
struct Gradient {
    GridFunction d1;
    GridFunction d2;
};
Gradient gradient(const GridFunction& f);

/// CSV serialization, columns y1,y2,value.
void write_csv(const GridFunction& f, std::ostream& os);

} // namespace carleman::grid

#endif
