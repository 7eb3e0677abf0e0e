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

#include "carleman_lab/grid.hpp"

#include "carleman_lab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace carleman::grid {

using quadrature::power_moments;

std::shared_ptr<const HalfPlaneGrid>
HalfPlaneGrid::make(double half_width, double height, int n1_half, int n2, double s) {
    if (!(half_width > 0.0 && height > 0.0))
        throw std::invalid_argument("HalfPlaneGrid: extents must be positive");
    if (n1_half < 2 || n2 < 2)
        throw std::invalid_argument("HalfPlaneGrid: too few cells");
    if (!(s > 0.0 && s < 1.0))
        throw std::invalid_argument("HalfPlaneGrid: s must lie in (0,1)");

    auto g = std::make_shared<HalfPlaneGrid>();
    g->half_width = half_width;
    g->height = height;
    g->grading = std::clamp(2.0 / (2.0 - 2.0 * s), 1.0, 3.0);

    g->y1.resize(2 * n1_half + 1);
    for (int i = 0; i <= 2 * n1_half; ++i)
        g->y1[i] = half_width * (static_cast<double>(i - n1_half) / n1_half);
    g->y1[n1_half] = 0.0;

    g->y2.resize(n2 + 1);
    for (int j = 0; j <= n2; ++j)
        g->y2[j] = height * std::pow(static_cast<double>(j) / n2, g->grading);
    return g;
}

std::shared_ptr<const HalfPlaneGrid>
HalfPlaneGrid::from_axes(std::vector<double> y1_nodes, std::vector<double> y2_nodes) {
    if (y1_nodes.size() < 2 || y2_nodes.size() < 2)
        throw std::invalid_argument("HalfPlaneGrid: axes need >= 2 nodes");
    if (y2_nodes.front() < 0.0)
        throw std::invalid_argument("HalfPlaneGrid: y2 axis must start at >= 0");
    for (std::size_t i = 1; i < y1_nodes.size(); ++i)
        if (!(y1_nodes[i] > y1_nodes[i - 1]))
            throw std::invalid_argument("HalfPlaneGrid: y1 axis not strictly increasing");
    for (std::size_t j = 1; j < y2_nodes.size(); ++j)
        if (!(y2_nodes[j] > y2_nodes[j - 1]))
            throw std::invalid_argument("HalfPlaneGrid: y2 axis not strictly increasing");

    auto g = std::make_shared<HalfPlaneGrid>();
    g->half_width = std::max(std::abs(y1_nodes.front()), std::abs(y1_nodes.back()));
    g->height = y2_nodes.back();
    g->y1 = std::move(y1_nodes);
    g->y2 = std::move(y2_nodes);
    return g;
}

GridFunction::GridFunction(std::shared_ptr<const HalfPlaneGrid> g)
    : grid(std::move(g)), values(grid->n1() * grid->n2(), 0.0) {}

GridFunction GridFunction::sample(std::shared_ptr<const HalfPlaneGrid> g,
                                  const std::function<double(double, double)>& f) {
    GridFunction out(std::move(g));
    const auto& gr = *out.grid;
    for (std::size_t i = 0; i < gr.n1(); ++i)
        for (std::size_t j = 0; j < gr.n2(); ++j)
            out.at(i, j) = f(gr.y1[i], gr.y2[j]);
    return out;
}

double GridFunction::bilinear(double x, double z) const {
    const auto& g = *grid;
    if (x < g.y1.front() - 1e-12 || x > g.y1.back() + 1e-12 ||
        z < g.y2.front() - 1e-12 || z > g.y2.back() + 1e-12)
        throw std::out_of_range("GridFunction::bilinear: point outside grid");
    x = std::clamp(x, g.y1.front(), g.y1.back());
    z = std::clamp(z, g.y2.front(), g.y2.back());

    auto cell = [](const std::vector<double>& ax, double v) -> std::size_t {
        auto it = std::upper_bound(ax.begin(), ax.end(), v);
        std::size_t i = static_cast<std::size_t>(std::distance(ax.begin(), it));
        if (i == 0) return 0;
        if (i >= ax.size()) return ax.size() - 2;
        return i - 1;
    };
    const std::size_t i = cell(g.y1, x), j = cell(g.y2, z);
    const double tx = (x - g.y1[i]) / (g.y1[i + 1] - g.y1[i]);
    const double tz = (z - g.y2[j]) / (g.y2[j + 1] - g.y2[j]);
    const double fa = (*this)(i, j), fb = (*this)(i + 1, j);
    const double fc = (*this)(i, j + 1), fd = (*this)(i + 1, j + 1);
    return (fa * (1 - tx) + fb * tx) * (1 - tz) + (fc * (1 - tx) + fd * tx) * tz;
}

void GridFunction::check_finite() const {
    for (double v : values)
        if (!std::isfinite(v))
            throw std::runtime_error("GridFunction: non-finite value");
}

GridFunction map(const GridFunction& f,
                 const std::function<double(double, double, double)>& fn) {
    GridFunction out(f.grid);
    const auto& g = *f.grid;
    for (std::size_t i = 0; i < g.n1(); ++i)
        for (std::size_t j = 0; j < g.n2(); ++j)
            out.at(i, j) = fn(g.y1[i], g.y2[j], f(i, j));
    return out;
}

namespace {

struct CellBox {
    double x0, x1, z0, z1;
};

/// Squared distance range from center (c1,c2) to the box.
inline void box_r2_range(const CellBox& b, double c1, double c2,
                         double& mn, double& mx) {
    const double dx = std::max({0.0, b.x0 - c1, c1 - b.x1});
    const double dz = std::max({0.0, b.z0 - c2, c2 - b.z1});
    mn = dx * dx + dz * dz;
    const double ex = std::max(std::abs(b.x0 - c1), std::abs(b.x1 - c1));
    const double ez = std::max(std::abs(b.z0 - c2), std::abs(b.z1 - c2));
    mx = ex * ex + ez * ez;
}

/// Exact integral of (bilinear f) * z^p over the box.
inline double box_bilinear_moment(const CellBox& b, double fa, double fb,
                                  double fc, double fd, double p) {
    const auto m = power_moments(b.z0, b.z1, p);
    const double dz = b.z1 - b.z0;
    const double c = (m.m1 - b.z0 * m.m0) / dz;
    const double g0 = fa * m.m0 + (fc - fa) * c;
    const double g1 = fb * m.m0 + (fd - fb) * c;
    return 0.5 * (g0 + g1) * (b.x1 - b.x0);
}

struct ClipContext {
    double rin2, rout2, c1, c2, p;
};

/// Bilinear evaluator anchored to the original cell.
struct CellInterp {
    CellBox b;
    double fa, fb, fc, fd;
    double operator()(double x, double z) const {
        const double tx = (x - b.x0) / (b.x1 - b.x0);
        const double tz = (z - b.z0) / (b.z1 - b.z0);
        return (fa * (1 - tx) + fb * tx) * (1 - tz) + (fc * (1 - tx) + fd * tx) * tz;
    }
};

double clip_recurse(const ClipContext& ctx, const CellInterp& f,
                    const CellBox& b, double fa, double fb, double fc, double fd,
                    int depth) {
    double mn, mx;
    box_r2_range(b, ctx.c1, ctx.c2, mn, mx);
    if (mn >= ctx.rout2 || mx <= ctx.rin2) return 0.0;
    if (mn >= ctx.rin2 && mx <= ctx.rout2)
        return box_bilinear_moment(b, fa, fb, fc, fd, ctx.p);
    if (depth == 0) {
        const double xm = 0.5 * (b.x0 + b.x1), zm = 0.5 * (b.z0 + b.z1);
        const double r2 = (xm - ctx.c1) * (xm - ctx.c1) + (zm - ctx.c2) * (zm - ctx.c2);
        if (r2 >= ctx.rin2 && r2 <= ctx.rout2)
            return box_bilinear_moment(b, fa, fb, fc, fd, ctx.p);
        return 0.0;
    }
    const double xm = 0.5 * (b.x0 + b.x1), zm = 0.5 * (b.z0 + b.z1);
    const double fmx0 = f(xm, b.z0), fmx1 = f(xm, b.z1);
    const double f0zm = f(b.x0, zm), f1zm = f(b.x1, zm), fmm = f(xm, zm);
    double out = 0.0;
    out += clip_recurse(ctx, f, {b.x0, xm, b.z0, zm}, fa, fmx0, f0zm, fmm, depth - 1);
    out += clip_recurse(ctx, f, {xm, b.x1, b.z0, zm}, fmx0, fb, fmm, f1zm, depth - 1);
    out += clip_recurse(ctx, f, {b.x0, xm, zm, b.z1}, f0zm, fmm, fc, fmx1, depth - 1);
    out += clip_recurse(ctx, f, {xm, b.x1, zm, b.z1}, fmm, fmx1, fd, f1zm, depth - 1);
    return out;
}

int clip_depth_for(double h) {
    const int d = static_cast<int>(std::ceil(std::log2(1.0 / std::max(h, 1e-12)))) + 3;
    return std::clamp(d, 5, 13);
}

} // namespace

double weighted_integral(const GridFunction& f, const Region& region, double power) {
    if (power <= -1.0)
        throw std::invalid_argument("weighted_integral: power <= -1 is not integrable");
    if (!(region.r_out > region.r_in) || region.r_in < 0.0)
        throw std::invalid_argument("weighted_integral: bad region radii");
    const auto& g = *f.grid;
    if (region.c1 - region.r_out < g.y1.front() - 1e-12 ||
        region.c1 + region.r_out > g.y1.back() + 1e-12 ||
        region.c2 + region.r_out > g.y2.back() + 1e-12)
        throw std::invalid_argument("weighted_integral: region exceeds grid");

    const double h1 = g.y1[1] - g.y1[0];
    const int depth = clip_depth_for(h1);
    const ClipContext ctx{region.r_in * region.r_in, region.r_out * region.r_out,
                          region.c1, region.c2, power};

    // Per-row y2 moments shared across the tangential sweep.
    const std::size_t n1 = g.n1(), n2 = g.n2();
    std::vector<quadrature::PowerMoments> rowm(n2 - 1);
    for (std::size_t j = 0; j + 1 < n2; ++j)
        rowm[j] = power_moments(g.y2[j], g.y2[j + 1], power);

    double total = 0.0;
    for (std::size_t i = 0; i + 1 < n1; ++i) {
        const double x0 = g.y1[i], x1 = g.y1[i + 1];
        // cheap prefilter on the tangential strip
        const double dxs = std::max({0.0, x0 - region.c1, region.c1 - x1});
        if (dxs * dxs > ctx.rout2) continue;
        for (std::size_t j = 0; j + 1 < n2; ++j) {
            const CellBox b{x0, x1, g.y2[j], g.y2[j + 1]};
            double mn, mx;
            box_r2_range(b, ctx.c1, ctx.c2, mn, mx);
            if (mn >= ctx.rout2 || mx <= ctx.rin2) continue;
            const double fa = f(i, j), fb = f(i + 1, j);
            const double fc = f(i, j + 1), fd = f(i + 1, j + 1);
            if (mn >= ctx.rin2 && mx <= ctx.rout2) {
                const auto& m = rowm[j];
                const double c = (m.m1 - b.z0 * m.m0) / (b.z1 - b.z0);
                const double g0 = fa * m.m0 + (fc - fa) * c;
                const double g1 = fb * m.m0 + (fd - fb) * c;
                total += 0.5 * (g0 + g1) * (x1 - x0);
            } else {
                const CellInterp interp{b, fa, fb, fc, fd};
                total += clip_recurse(ctx, interp, b, fa, fb, fc, fd, depth);
            }
        }
    }
    return total;
}

double weighted_norm(const GridFunction& f, const Region& region, double power) {
    GridFunction sq(f.grid);
    for (std::size_t k = 0; k < f.values.size(); ++k)
        sq.values[k] = f.values[k] * f.values[k];
    return std::sqrt(weighted_integral(sq, region, power));
}

double boundary_integral(const std::vector<double>& trace,
                         const std::vector<double>& y1, double a, double b) {
    if (trace.size() != y1.size())
        throw std::invalid_argument("boundary_integral: size mismatch");
    if (a < y1.front() - 1e-12 || b > y1.back() + 1e-12 || b <= a)
        throw std::invalid_argument("boundary_integral: segment outside grid");
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < y1.size(); ++i) {
        const double lo = std::max(a, y1[i]), hi = std::min(b, y1[i + 1]);
        if (hi <= lo) continue;
        const double w = y1[i + 1] - y1[i];
        const double fl = trace[i] + (trace[i + 1] - trace[i]) * (lo - y1[i]) / w;
        const double fh = trace[i] + (trace[i + 1] - trace[i]) * (hi - y1[i]) / w;
        total += 0.5 * (fl + fh) * (hi - lo);
    }
    return total;
}

double boundary_integral(const GridFunction& f, double a, double b) {
    const auto& g = *f.grid;
    std::vector<double> trace(g.n1());
    for (std::size_t i = 0; i < g.n1(); ++i) trace[i] = f(i, 0);
    return boundary_integral(trace, g.y1, a, b);
}

double boundary_integral_weighted(const std::vector<double>& trace,
                                  const std::vector<double>& y1,
                                  double a, double b, double power) {
    if (trace.size() != y1.size())
        throw std::invalid_argument("boundary_integral_weighted: size mismatch");
    if (a < y1.front() - 1e-12 || b > y1.back() + 1e-12 || b <= a)
        throw std::invalid_argument("boundary_integral_weighted: segment outside grid");
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < y1.size(); ++i) {
        double lo = std::max(a, y1[i]), hi = std::min(b, y1[i + 1]);
        if (hi <= lo) continue;
        const double w = y1[i + 1] - y1[i];
        auto interp = [&](double x) {
            return trace[i] + (trace[i + 1] - trace[i]) * (x - y1[i]) / w;
        };
        // split at 0 so |y1|^power reduces to one-sided power moments
        const double pieces[2][2] = {{lo, std::min(hi, 0.0)}, {std::max(lo, 0.0), hi}};
        for (const auto& pc : pieces) {
            if (pc[1] <= pc[0]) continue;
            const double qa = std::min(std::abs(pc[0]), std::abs(pc[1]));
            const double qb = std::max(std::abs(pc[0]), std::abs(pc[1]));
            const double fqa = std::abs(pc[0]) <= std::abs(pc[1]) ? interp(pc[0]) : interp(pc[1]);
            const double fqb = std::abs(pc[0]) <= std::abs(pc[1]) ? interp(pc[1]) : interp(pc[0]);
            if (power <= -1.0 && qa <= 0.0) {
                if (fqa == 0.0 && fqb == 0.0) continue;
                throw std::invalid_argument(
                    "boundary_integral_weighted: non-integrable weight meets "
                    "nonzero trace at y1 = 0");
            }
            total += quadrature::linear_power_integral(qa, qb, fqa, fqb, power);
        }
    }
    return total;
}

VanishingOrderFit vanishing_order(const GridFunction& f,
                                  std::vector<double> radii,
                                  OrderMode mode, double s) {
    if (radii.size() < 4)
        throw std::invalid_argument("vanishing_order: need >= 4 radii");
    for (std::size_t k = 1; k < radii.size(); ++k)
        if (!(radii[k] < radii[k - 1]))
            throw std::invalid_argument("vanishing_order: radii must be strictly decreasing");
    if (radii.front() / radii.back() < 10.0)
        throw std::invalid_argument("vanishing_order: radii must span at least one decade");

    GridFunction sq(f.grid);
    for (std::size_t k = 0; k < f.values.size(); ++k)
        sq.values[k] = f.values[k] * f.values[k];

    std::vector<double> logs(radii.size()), logr(radii.size());
    VanishingOrderFit fit;
    double prev = 0.0;
    for (std::size_t k = 0; k < radii.size(); ++k) {
        double val;
        if (mode == OrderMode::bulk)
            val = weighted_integral(sq, Region::half_ball(radii[k]), 1.0 - 2.0 * s);
        else {
            const auto& g = *f.grid;
            std::vector<double> tr(g.n1());
            for (std::size_t i = 0; i < g.n1(); ++i) tr[i] = sq(i, 0);
            val = boundary_integral(tr, g.y1, -radii[k], radii[k]);
        }
        if (!(val > 0.0) || (k > 0 && !(val < prev))) {
            fit.monotone = false; // noise floor or degenerate input
            return fit;
        }
        prev = val;
        logs[k] = std::log(val);
        logr[k] = std::log(radii[k]);
    }
    fit.monotone = true;

    // ordinary least squares in log-log
    const auto nn = static_cast<double>(radii.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t k = 0; k < radii.size(); ++k) {
        sx += logr[k]; sy += logs[k];
        sxx += logr[k] * logr[k]; sxy += logr[k] * logs[k];
    }
    fit.slope = (nn * sxy - sx * sy) / (nn * sxx - sx * sx);
    const double icept = (sy - fit.slope * sx) / nn;
    fit.residual = 0.0;
    for (std::size_t k = 0; k < radii.size(); ++k)
        fit.residual = std::max(fit.residual,
                                std::abs(logs[k] - (icept + fit.slope * logr[k])));
    return fit;
}

Gradient gradient(const GridFunction& f) {
    const auto& g = *f.grid;
    Gradient out{GridFunction(f.grid), GridFunction(f.grid)};
    const std::size_t n1 = g.n1(), n2 = g.n2();
    for (std::size_t i = 0; i < n1; ++i) {
        for (std::size_t j = 0; j < n2; ++j) {
            // d/dy1
            if (i == 0)
                out.d1.at(i, j) = (f(1, j) - f(0, j)) / (g.y1[1] - g.y1[0]);
            else if (i == n1 - 1)
                out.d1.at(i, j) = (f(i, j) - f(i - 1, j)) / (g.y1[i] - g.y1[i - 1]);
            else {
                const double hl = g.y1[i] - g.y1[i - 1], hr = g.y1[i + 1] - g.y1[i];
                out.d1.at(i, j) = (f(i + 1, j) * hl * hl - f(i - 1, j) * hr * hr +
                                   f(i, j) * (hr * hr - hl * hl)) /
                                  (hl * hr * (hl + hr));
            }
            // d/dy2
            if (j == 0)
                out.d2.at(i, j) = (f(i, 1) - f(i, 0)) / (g.y2[1] - g.y2[0]);
            else if (j == n2 - 1)
                out.d2.at(i, j) = (f(i, j) - f(i, j - 1)) / (g.y2[j] - g.y2[j - 1]);
            else {
                const double hl = g.y2[j] - g.y2[j - 1], hr = g.y2[j + 1] - g.y2[j];
                out.d2.at(i, j) = (f(i, j + 1) * hl * hl - f(i, j - 1) * hr * hr +
                                   f(i, j) * (hr * hr - hl * hl)) /
                                  (hl * hr * (hl + hr));
            }
        }
    }
    return out;
}

void write_csv(const GridFunction& f, std::ostream& os) {
    const auto& g = *f.grid;
    os << "y1,y2,value\n";
    char buf[128];
    for (std::size_t i = 0; i < g.n1(); ++i)
        for (std::size_t j = 0; j < g.n2(); ++j) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n",
                          g.y1[i], g.y2[j], f(i, j));
            os << buf;
        }
}

} // namespace carleman::grid
