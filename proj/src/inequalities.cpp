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

#include "carleman_lab/inequalities.hpp"

#include "carleman_lab/coords.hpp"
#include "carleman_lab/extension.hpp"
#include "carleman_lab/rng.hpp"
#include "carleman_lab/spectrum.hpp"
#include "carleman_lab/weights.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace carleman::ineq {

using grid::GridFunction;
using grid::Region;

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// Quintic smoothstep: C^2, 0 below 0, 1 above 1.
double smooth01(double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return x * x * x * (10.0 + x * (-15.0 + 6.0 * x));
}

/// C^2 annular window: plateau 1 on [a+e, b-e], e = 0.3 (b-a).
double annular_window(double r, double a, double b) {
    const double e = 0.3 * (b - a);
    return smooth01((r - a) / e) * smooth01((b - r) / e);
}

struct SupportInfo {
    double rmin = 0.0, rmax = 0.0, wmax = 0.0;
};

SupportInfo support_info(const GridFunction& w) {
    const auto& g = *w.grid;
    SupportInfo out;
    for (std::size_t i = 0; i < g.n1(); ++i)
        for (std::size_t j = 0; j < g.n2(); ++j)
            out.wmax = std::max(out.wmax, std::abs(w(i, j)));
    if (out.wmax == 0.0) return out;
    const double thresh = 1e-13 * out.wmax;
    out.rmin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < g.n1(); ++i)
        for (std::size_t j = 0; j < g.n2(); ++j)
            if (std::abs(w(i, j)) > thresh) {
                const double r = std::hypot(g.y1[i], g.y2[j]);
                out.rmin = std::min(out.rmin, r);
                out.rmax = std::max(out.rmax, r);
            }
    return out;
}

double interior_radius(const grid::HalfPlaneGrid& g) {
    return 0.995 * std::min({-g.y1.front(), g.y1.back(), g.y2.back()});
}

std::string grid_desc(const grid::HalfPlaneGrid& g) {
    std::ostringstream os;
    os << g.n1() << "x" << g.n2() << " [" << g.y1.front() << "," << g.y1.back()
       << "]x[0," << g.y2.back() << "]";
    return os.str();
}

/// e^{2 tau (phi(ln r) - phi0)} with a zero guard at the origin.
inline double carleman_factor_sq(double r, double tau, double phi0) {
    if (r <= 0.0) return 0.0;
    return std::exp(2.0 * tau * (weights::phi(std::log(r)) - phi0));
}

} // namespace

void InequalityReport::finalize() {
    lhs_sum = 0.0;
    rhs_sum = 0.0;
    for (const auto& t : lhs) lhs_sum += t.second;
    for (const auto& t : rhs) rhs_sum += t.second;
    if (rhs_sum > 0.0) {
        ratio = lhs_sum / rhs_sum;
        vacuous = false;
    } else if (lhs_sum > 0.0) {
        ratio = std::numeric_limits<double>::infinity();
        vacuous = true; // exact-solution input: inequality carries no content
    } else {
        ratio = 0.0;
        vacuous = false;
    }
}

std::string InequalityReport::to_json() const {
    std::ostringstream os;
    os << "{\n  \"inequality\": \"" << inequality << "\",\n";
    os << "  \"params\": {\"s\": " << fmt(s) << ", \"tau\": " << fmt(tau)
       << ", \"log_scale\": " << fmt(log_scale) << ", \"radii\": [";
    for (std::size_t i = 0; i < radii.size(); ++i)
        os << (i ? ", " : "") << fmt(radii[i]);
    os << "]},\n  \"terms\": {";
    bool first = true;
    for (const auto& t : lhs) {
        os << (first ? "" : ", ") << "\"" << t.first << "\": " << fmt(t.second);
        first = false;
    }
    for (const auto& t : rhs) {
        os << (first ? "" : ", ") << "\"" << t.first << "\": " << fmt(t.second);
        first = false;
    }
    os << "},\n  \"ratio\": " << fmt(ratio)
       << ",\n  \"vacuous\": " << (vacuous ? "true" : "false")
       << ",\n  \"grid\": \"" << grid_desc << "\",\n  \"spec_id\": \"" << spec_id
       << "\"\n}";
    return os.str();
}

std::string report_csv_header() {
    return "inequality,spec_id,s,tau,ratio,lhs_sum,rhs_sum,vacuous,grid";
}

std::string report_csv_row(const InequalityReport& r) {
    std::ostringstream os;
    os << r.inequality << "," << r.spec_id << "," << fmt(r.s) << "," << fmt(r.tau)
       << "," << fmt(r.ratio) << "," << fmt(r.lhs_sum) << "," << fmt(r.rhs_sum)
       << "," << (r.vacuous ? 1 : 0) << "," << r.grid_desc;
    return os.str();
}

// ---------------------------------------------------------------------------

std::string family_name(Family f) {
    switch (f) {
        case Family::annular_bump_harmonic: return "annular_harmonic";
        case Family::homogeneous_cutoff: return "homogeneous_cutoff";
        case Family::random_bump: return "random_bump";
    }
    return "?";
}

std::string TestFunctionSpec::id() const {
    std::ostringstream os;
    os << family_name(family) << "_k" << angular_index << "_r" << r_inner << "-"
       << r_outer << "_seed" << seed;
    return os.str();
}

std::vector<TestFunctionSpec> standard_battery(bool quick) {
    const std::vector<std::pair<double, double>> supports = {
        {0.10, 0.30}, {0.15, 0.45}, {0.20, 0.60}, {0.30, 0.70}, {0.12, 0.80}};
    std::vector<TestFunctionSpec> out;
    if (!quick) {
        for (const auto& sp : supports)
            for (int k = 0; k <= 4; ++k) {
                out.push_back({Family::annular_bump_harmonic, sp.first, sp.second, k, 0});
                out.push_back({Family::homogeneous_cutoff, sp.first, sp.second, k, 0});
            }
        for (const auto& sp : supports)
            for (int variant = 0; variant <= 4; ++variant)
                for (std::uint64_t seed = 1; seed <= 4; ++seed)
                    out.push_back({Family::random_bump, sp.first, sp.second, variant, seed});
    } else {
        for (int si : {0, 2})
            for (int k : {0, 2, 4}) {
                out.push_back({Family::annular_bump_harmonic, supports[si].first,
                               supports[si].second, k, 0});
                out.push_back({Family::homogeneous_cutoff, supports[si].first,
                               supports[si].second, k, 0});
            }
        for (int si : {1, 3})
            for (int variant : {0, 1})
                for (std::uint64_t seed : {1, 2})
                    out.push_back({Family::random_bump, supports[si].first,
                                   supports[si].second, variant, seed});
    }
    return out;
}

GridFunction realize(const TestFunctionSpec& spec,
                     std::shared_ptr<const grid::HalfPlaneGrid> g, double s) {
    const double a = spec.r_inner, b = spec.r_outer;
    if (!(a > 0.0 && b > a))
        throw std::invalid_argument("realize: bad support annulus");
    if (b > interior_radius(*g))
        throw std::invalid_argument("realize: support exceeds grid interior");

    switch (spec.family) {
        case Family::annular_bump_harmonic: {
            const auto coeffs = spectrum::legendre_coeffs(spec.angular_index, s);
            return GridFunction::sample(std::move(g), [=](double x, double z) {
                const double r = std::hypot(x, z);
                const double win = annular_window(r, a, b);
                if (win == 0.0) return 0.0;
                const double c = x / r;
                double pk = 0.0;
                for (std::size_t j = coeffs.size(); j-- > 0;) pk = pk * c + coeffs[j];
                return win * pk;
            });
        }
        case Family::homogeneous_cutoff: {
            GridFunction wk = extension::homogeneous_solution(spec.angular_index, s, g);
            return grid::map(wk, [=](double x, double z, double v) {
                return v * annular_window(std::hypot(x, z), a, b);
            });
        }
        case Family::random_bump: {
            Rng rng(spec.seed * 0x9e3779b97f4a7c15ULL + 0xc0ffee123ULL +
                    static_cast<std::uint64_t>(spec.angular_index) * 77ULL);
            const int n_bumps = 2 + spec.angular_index % 3;
            struct Bump {
                double c1, zc, wx, wz, amp;
            };
            std::vector<Bump> bumps(static_cast<std::size_t>(n_bumps));
            for (auto& bp : bumps) {
                bp.c1 = rng.uniform(-0.8 * b, 0.8 * b);
                const double y2c = rng.uniform(0.0, 0.8 * b);
                bp.zc = y2c * y2c;
                bp.wx = rng.uniform(0.2, 0.5) * (b - a);
                bp.wz = rng.uniform(0.2, 0.5) * b * b;
                bp.amp = rng.uniform(-1.0, 1.0);
            }
            return GridFunction::sample(std::move(g), [=](double x, double z) {
                const double r = std::hypot(x, z);
                const double win = annular_window(r, a, b);
                if (win == 0.0) return 0.0;
                double val = 0.0;
                for (const auto& bp : bumps) {
                    const double dx = (x - bp.c1) / bp.wx;
                    const double dz = (z * z - bp.zc) / bp.wz;
                    const double d2 = dx * dx + dz * dz;
                    if (d2 < 1.0) val += bp.amp * smooth01(1.0 - d2);
                }
                return win * val;
            });
        }
    }
    throw std::logic_error("realize: unknown family");
}

// ---------------------------------------------------------------------------

InequalityReport carleman_sides(const GridFunction& w, const GridFunction& f,
                                const std::vector<double>& h, double tau, double s) {
    if (!(tau >= 1.0))
        throw std::invalid_argument("carleman_sides: tau must be >= tau0 = 1");
    if (!(s >= 0.25 && s < 1.0))
        throw std::invalid_argument("carleman_sides: s must lie in [1/4, 1)");
    const auto& g = *w.grid;
    if (h.size() != g.n1())
        throw std::invalid_argument("carleman_sides: trace size mismatch");

    InequalityReport rep;
    rep.inequality = "carleman";
    rep.s = s;
    rep.tau = tau;
    rep.grid_desc = grid_desc(g);

    const SupportInfo sup = support_info(w);
    if (sup.wmax == 0.0) {
        rep.lhs = {{"lhs_gradient", 0.0}, {"lhs_bulk_mass", 0.0}, {"lhs_boundary_mass", 0.0}};
        rep.rhs = {{"rhs_source", 0.0}, {"rhs_neumann", 0.0}};
        rep.finalize();
        return rep;
    }
    const double r_int = interior_radius(g);
    if (sup.rmax > r_int)
        throw std::invalid_argument("carleman_sides: support reaches the grid boundary");
    const double phi0 = weights::phi(std::log(std::sqrt(sup.rmin * sup.rmax)));
    rep.log_scale = tau * phi0;
    rep.radii = {sup.rmin, sup.rmax};
    const Region bulk = Region::half_ball(r_int);

    const grid::Gradient gw = grid::gradient(w);
    GridFunction grad_field(w.grid), mass_field(w.grid), src_field(w.grid);
    for (std::size_t i = 0; i < g.n1(); ++i) {
        for (std::size_t j = 0; j < g.n2(); ++j) {
            const double x = g.y1[i], z = g.y2[j];
            const double r = std::hypot(x, z);
            const double fac = carleman_factor_sq(r, tau, phi0);
            if (fac == 0.0) continue;
            const double lr = std::log(r);
            const double logfac = 1.0 / (1.0 + lr * lr);
            const double gg = gw.d1(i, j) * gw.d1(i, j) + gw.d2(i, j) * gw.d2(i, j);
            grad_field.at(i, j) = fac * logfac * gg;
            const double wv = w(i, j);
            mass_field.at(i, j) = wv == 0.0 ? 0.0 : fac * logfac * wv * wv / (r * r);
            const double fv = f(i, j);
            src_field.at(i, j) = fv == 0.0 ? 0.0 : fac * r * r * fv * fv;
        }
    }
    const double p_bulk = 1.0 - 2.0 * s;
    const double lhs_grad = std::sqrt(grid::weighted_integral(grad_field, bulk, p_bulk));
    const double lhs_mass = tau * std::sqrt(grid::weighted_integral(mass_field, bulk, p_bulk));
    const double rhs_src =
        std::pow(tau, -0.5) * std::sqrt(grid::weighted_integral(src_field, bulk, 2.0 * s - 1.0));

    // boundary terms
    std::vector<double> lhs_tr(g.n1(), 0.0), rhs_tr(g.n1(), 0.0);
    for (std::size_t i = 0; i < g.n1(); ++i) {
        const double x = std::abs(g.y1[i]);
        const double fac = carleman_factor_sq(x, tau, phi0);
        if (fac == 0.0) continue;
        const double lr = std::log(x);
        const double logfac = 1.0 / (1.0 + lr * lr);
        const double wv = w(i, 0);
        lhs_tr[i] = wv == 0.0 ? 0.0 : fac * logfac * std::pow(x, -2.0 * s) * wv * wv;
        const double hv = h[i];
        rhs_tr[i] = hv == 0.0 ? 0.0 : fac * std::pow(x, 2.0 * s) * hv * hv;
    }
    const double lhs_bdry =
        std::pow(tau, s) *
        std::sqrt(grid::boundary_integral(lhs_tr, g.y1, g.y1.front(), g.y1.back()));
    const double rhs_bdry =
        std::pow(tau, 0.5 * (1.0 - 2.0 * s)) *
        std::sqrt(grid::boundary_integral(rhs_tr, g.y1, g.y1.front(), g.y1.back()));

    rep.lhs = {{"lhs_gradient", lhs_grad},
               {"lhs_bulk_mass", lhs_mass},
               {"lhs_boundary_mass", lhs_bdry}};
    rep.rhs = {{"rhs_source", rhs_src}, {"rhs_neumann", rhs_bdry}};
    rep.finalize();
    return rep;
}

InequalityReport carleman_sides(const GridFunction& w, double tau, double s) {
    const FractionalParams params(s);
    const GridFunction f = coords::apply_cartesian_operator(w, params);
    const coords::NeumannTrace h = coords::neumann_trace(w, params);
    return carleman_sides(w, f, h.values, tau, s);
}

InequalityReport trace_interpolation_sides(const std::vector<double>& theta,
                                           const std::vector<double>& u,
                                           double tau, double s) {
    if (!(tau > 1.0))
        throw std::invalid_argument("trace_interpolation_sides: tau must be > 1");
    if (theta.size() != u.size() || theta.size() < 5)
        throw std::invalid_argument("trace_interpolation_sides: bad sizes");
    if (std::abs(theta.front()) > 1e-12 ||
        std::abs(theta.back() - 3.14159265358979323846) > 1e-12)
        throw std::invalid_argument("trace_interpolation_sides: axis must span [0,pi]");

    InequalityReport rep;
    rep.inequality = "trace_interpolation";
    rep.s = s;
    rep.tau = tau;
    rep.grid_desc = "theta axis n=" + std::to_string(theta.size());

    const double lhs = std::hypot(u.front(), u.back());

    std::vector<double> usq(u.size()), dusq(u.size());
    const std::vector<double> du = coords::axis_derivative(theta, u);
    for (std::size_t j = 0; j < u.size(); ++j) {
        usq[j] = u[j] * u[j];
        dusq[j] = du[j] * du[j];
    }
    const double p = 1.0 - 2.0 * s;
    const double rhs_mass =
        std::pow(tau, 1.0 - s) * std::sqrt(coords::angular_integral(theta, usq, p));
    const double rhs_grad =
        std::pow(tau, -s) * std::sqrt(coords::angular_integral(theta, dusq, p));

    rep.lhs = {{"lhs_endpoint", lhs}};
    rep.rhs = {{"rhs_mass", rhs_mass}, {"rhs_gradient", rhs_grad}};
    rep.finalize();
    return rep;
}

InequalityReport herbst_sides(const GridFunction& w, double s) {
    const auto& g = *w.grid;
    InequalityReport rep;
    rep.inequality = "herbst";
    rep.s = s;
    rep.tau = 0.0;
    rep.grid_desc = grid_desc(g);

    std::vector<double> tr(g.n1());
    for (std::size_t i = 0; i < g.n1(); ++i) {
        const double wv = w(i, 0);
        tr[i] = wv * wv;
    }
    const double lhs = std::sqrt(grid::boundary_integral_weighted(
        tr, g.y1, g.y1.front(), g.y1.back(), -2.0 * s));

    const grid::Gradient gw = grid::gradient(w);
    GridFunction gg(w.grid);
    for (std::size_t k = 0; k < gg.values.size(); ++k)
        gg.values[k] = gw.d1.values[k] * gw.d1.values[k] + gw.d2.values[k] * gw.d2.values[k];
    const double rhs = std::sqrt(
        grid::weighted_integral(gg, Region::half_ball(interior_radius(g)), 1.0 - 2.0 * s));

    rep.lhs = {{"lhs_boundary_hardy", lhs}};
    rep.rhs = {{"rhs_gradient", rhs}};
    rep.finalize();
    return rep;
}

InequalityReport caccioppoli_sides(const GridFunction& w, double r0, double r1,
                                   double s) {
    const auto& g = *w.grid;
    if (!(r0 > 0.0 && r1 > r0))
        throw std::invalid_argument("caccioppoli_sides: need 0 < r0 < r1");
    if (2.0 * r1 > interior_radius(g))
        throw std::invalid_argument("caccioppoli_sides: annulus exceeds grid");

    InequalityReport rep;
    rep.inequality = "caccioppoli";
    rep.s = s;
    rep.tau = 0.0;
    rep.radii = {r0, r1};
    rep.grid_desc = grid_desc(g);

    // C^2 cutoff: 1 on (r0, r1), supported in (r0/2, 2 r1),
    // |psi'| <= C/r0 inner and C/r1 outer
    auto psi = [r0, r1](double r) {
        return smooth01((r - 0.5 * r0) / (0.5 * r0)) * smooth01((2.0 * r1 - r) / r1);
    };
    const GridFunction wpsi = grid::map(
        w, [&](double x, double z, double v) { return v * psi(std::hypot(x, z)); });

    const FractionalParams params(s);
    const Region annulus{0.0, 0.0, 0.5 * r0 * (1.0 - 1e-12), 2.0 * r1};
    const double p_bulk = 1.0 - 2.0 * s;

    const grid::Gradient gw = grid::gradient(wpsi);
    GridFunction gg(w.grid);
    for (std::size_t k = 0; k < gg.values.size(); ++k)
        gg.values[k] = gw.d1.values[k] * gw.d1.values[k] + gw.d2.values[k] * gw.d2.values[k];
    const double lhs_grad = grid::weighted_integral(gg, annulus, p_bulk);

    GridFunction wsq(w.grid);
    for (std::size_t k = 0; k < wsq.values.size(); ++k)
        wsq.values[k] = w.values[k] * w.values[k];
    const double rhs_mass = grid::weighted_integral(wsq, annulus, p_bulk) / (r0 * r0);

    const coords::NeumannTrace hpsi = coords::neumann_trace(wpsi, params);
    std::vector<double> btr(g.n1());
    for (std::size_t i = 0; i < g.n1(); ++i) btr[i] = wpsi(i, 0) * hpsi.values[i];
    const double rhs_bdry = std::abs(
        grid::boundary_integral(btr, g.y1, g.y1.front(), g.y1.back()));

    const GridFunction fpsi = coords::apply_cartesian_operator(wpsi, params);
    GridFunction fsq(w.grid);
    for (std::size_t k = 0; k < fsq.values.size(); ++k)
        fsq.values[k] = fpsi.values[k] * fpsi.values[k];
    const double rhs_src = grid::weighted_integral(fsq, annulus, 2.0 * s - 1.0);

    rep.lhs = {{"lhs_gradient_sq", lhs_grad}};
    rep.rhs = {{"rhs_mass_sq", rhs_mass},
               {"rhs_boundary_abs", rhs_bdry},
               {"rhs_source_sq", rhs_src}};
    rep.finalize();
    return rep;
}

InequalityReport antisymmetric_lower_bound_sides(const GridFunction& w,
                                                 double delta, double R,
                                                 double tau, double s) {
    const auto& g = *w.grid;
    if (!(delta > 0.0) || !(R >= 4.0 * delta))
        throw std::invalid_argument(
            "antisymmetric_lower_bound_sides: require R >= 4 delta > 0");
    if (R > interior_radius(g))
        throw std::invalid_argument("antisymmetric_lower_bound_sides: R exceeds grid");
    if (!(tau > 0.0))
        throw std::invalid_argument("antisymmetric_lower_bound_sides: tau must be positive");

    const SupportInfo sup = support_info(w);
    if (sup.wmax > 0.0 && (sup.rmin < delta * (1.0 - 1e-9) || sup.rmax > R * (1.0 + 1e-9)))
        throw std::invalid_argument(
            "antisymmetric_lower_bound_sides: support escapes {delta <= |y| <= R}");

    InequalityReport rep;
    rep.inequality = "antisymmetric_lower_bound";
    rep.s = s;
    rep.tau = tau;
    rep.radii = {delta, R};
    rep.grid_desc = grid_desc(g);
    if (sup.wmax == 0.0) {
        rep.lhs = {{"lhs_inner_mass_sq", 0.0}};
        rep.rhs = {{"rhs_source_sq", 0.0}};
        rep.finalize();
        return rep;
    }

    const FractionalParams params(s);
    const GridFunction f = coords::apply_cartesian_operator(w, params);
    const coords::NeumannTrace h = coords::neumann_trace(w, params);

    const double phi0 = weights::phi(std::log(std::sqrt(sup.rmin * sup.rmax)));
    rep.log_scale = tau * phi0;

    GridFunction mass_field(w.grid), src_field(w.grid);
    for (std::size_t i = 0; i < g.n1(); ++i)
        for (std::size_t j = 0; j < g.n2(); ++j) {
            const double r = std::hypot(g.y1[i], g.y2[j]);
            const double fac = carleman_factor_sq(r, tau, phi0);
            if (fac == 0.0) continue;
            const double wv = w(i, j), fv = f(i, j);
            mass_field.at(i, j) = wv == 0.0 ? 0.0 : fac * wv * wv;
            src_field.at(i, j) = fv == 0.0 ? 0.0 : fac * r * r * fv * fv;
        }
    // annulus factor c = 2: inner window B_{2 delta} \ B_delta
    const double lhs_mass =
        tau * tau / (delta * delta) *
        grid::weighted_integral(mass_field, Region::half_annulus(delta, 2.0 * delta),
                                1.0 - 2.0 * s);
    const double rhs_src = grid::weighted_integral(
        src_field, Region::half_annulus(delta, R), 2.0 * s - 1.0);

    // h = 0 regime check: the would-be Neumann contribution must be
    // negligible against the bulk source term
    std::vector<double> htr(g.n1(), 0.0);
    for (std::size_t i = 0; i < g.n1(); ++i) {
        const double x = std::abs(g.y1[i]);
        const double fac = carleman_factor_sq(x, tau, phi0);
        const double hv = h.values[i];
        htr[i] = hv == 0.0 ? 0.0 : fac * std::pow(x, 2.0 * s) * hv * hv;
    }
    const double h_norm_sq = std::pow(tau, 1.0 - 2.0 * s) *
                             grid::boundary_integral(htr, g.y1, g.y1.front(), g.y1.back());
    if (h_norm_sq > 2.5e-3 * (rhs_src / tau + 1e-300))
        throw std::domain_error(
            "antisymmetric_lower_bound_sides: nonzero Neumann trace, outside the "
            "h = 0 regime");

    rep.lhs = {{"lhs_inner_mass_sq", lhs_mass}};
    rep.rhs = {{"rhs_source_sq", rhs_src}};
    rep.finalize();
    return rep;
}

std::vector<DoublingPoint> doubling_ratios(const GridFunction& w,
                                           const std::vector<double>& radii,
                                           double s) {
    const auto& g = *w.grid;
    std::vector<DoublingPoint> out;
    GridFunction wsq(w.grid);
    for (std::size_t k = 0; k < wsq.values.size(); ++k)
        wsq.values[k] = w.values[k] * w.values[k];
    const double p = 1.0 - 2.0 * s;
    for (double r : radii) {
        if (2.0 * r > interior_radius(g) / 0.995 * 1.0)
            throw std::invalid_argument("doubling_ratios: B_{2r} exceeds grid");
        DoublingPoint pt;
        pt.r = r;
        const double den = grid::weighted_integral(wsq, Region::half_ball(r), p);
        const double num = grid::weighted_integral(wsq, Region::half_ball(2.0 * r), p);
        if (den <= 0.0) {
            pt.ok = false;
            pt.ratio = std::numeric_limits<double>::infinity();
        } else {
            pt.ratio = std::sqrt(num / den);
        }
        out.push_back(pt);
    }
    return out;
}

ThreeBallsResult three_balls_exponent(const GridFunction& w, double r,
                                      double c1, double c2, double s) {
    const double p = 1.0 - 2.0 * s;
    GridFunction wsq(w.grid);
    for (std::size_t k = 0; k < wsq.values.size(); ++k)
        wsq.values[k] = w.values[k] * w.values[k];
    const double n_half =
        std::sqrt(grid::weighted_integral(wsq, Region{c1, c2, 0.0, 0.5 * r}, p));
    const double n_mid =
        std::sqrt(grid::weighted_integral(wsq, Region{c1, c2, 0.0, r}, p));
    const double n_two =
        std::sqrt(grid::weighted_integral(wsq, Region{c1, c2, 0.0, 2.0 * r}, p));

    ThreeBallsResult out;
    if (!(n_half > 0.0) || !(n_two > n_half)) {
        out.degenerate = true;
        return out;
    }
    out.alpha = std::log(n_two / n_mid) / std::log(n_two / n_half);
    out.in_range = out.alpha >= 0.0 && out.alpha <= 1.0;
    return out;
}

} // namespace carleman::ineq
