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

#ifndef CARLEMAN_LAB_INEQUALITIES_HPP
#define CARLEMAN_LAB_INEQUALITIES_HPP

#include "carleman_lab/grid.hpp"
#include "carleman_lab/params.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace carleman::ineq {

/// Named left/right-hand sides of one inequality instance.
/// ratio = (sum of LHS terms) / (sum of RHS terms).  Terms weighted by
/// e^{tau phi} are reported with the common factor e^{log_scale} removed
/// (log_scale = tau * phi at the support midpoint), which keeps every term
/// finite at large tau; the ratio is unaffected.
struct InequalityReport {
    std::string inequality;
    double s = 0.0;
    double tau = 0.0;
    std::vector<double> radii;
    double log_scale = 0.0;
    std::vector<std::pair<std::string, double>> lhs;
    std::vector<std::pair<std::string, double>> rhs;
    double lhs_sum = 0.0;
    double rhs_sum = 0.0;
    double ratio = 0.0;
    bool vacuous = false; ///< RHS numerically zero with nonzero LHS
    std::string grid_desc;
    std::string spec_id;

    void finalize(); ///< fills sums and ratio
    std::string to_json() const;
};

/// CSV header and row for summary tables (one row per report).
std::string report_csv_header();
std::string report_csv_row(const InequalityReport& r);

// ---------------------------------------------------------------------------
// test-function battery

enum class Family : std::uint8_t {
    annular_bump_harmonic, ///< radial C^2 bump x spherical harmonic P_k
    homogeneous_cutoff,    ///< homogeneous solution w_k x radial C^2 cutoff
    random_bump            ///< seeded sum of smooth bumps in (y1, y2^2)
};

std::string family_name(Family f);

/// Compactly supported test function inside an annulus, away from the origin.
struct TestFunctionSpec {
    Family family = Family::annular_bump_harmonic;
    double r_inner = 0.0;
    double r_outer = 0.0;
    int angular_index = 0;
    std::uint64_t seed = 0;

    std::string id() const;
};

/// Standard battery: 5 annular supports x 5 angular indices for the two
/// deterministic families, plus 5 supports x 5 variants x 4 seeds for the
/// random family.  `quick` selects a small but representative subset.
std::vector<TestFunctionSpec> standard_battery(bool quick);

grid::GridFunction realize(const TestFunctionSpec& spec,
                           std::shared_ptr<const grid::HalfPlaneGrid> g, double s);

// ---------------------------------------------------------------------------
// evaluators

/// Symmetric Carleman estimate, both sides.  f and h must be computed
/// consistently with w (use the convenience overload for that); requires
/// tau >= 1 and s in [1/4, 1).
InequalityReport carleman_sides(const grid::GridFunction& w,
                                const grid::GridFunction& f,
                                const std::vector<double>& h,
                                double tau, double s);

/// Computes f and h from w via the discrete operators, then evaluates.
InequalityReport carleman_sides(const grid::GridFunction& w, double tau, double s);

/// Trace interpolation on the half circle (n = 1: the boundary sphere is the
/// two endpoints).  u sampled on a theta axis containing 0 and pi; tau > 1.
InequalityReport trace_interpolation_sides(const std::vector<double>& theta,
                                           const std::vector<double>& u,
                                           double tau, double s);

/// Hardy-trace (Herbst) inequality: boundary |y1|^{-s} mass vs weighted
/// bulk gradient.
InequalityReport herbst_sides(const grid::GridFunction& w, double s);

/// Caccioppoli / interpolation estimate on the annulus (r0/2, 2 r1) with an
/// internally built C^2 cutoff.  Terms are squared norms.
InequalityReport caccioppoli_sides(const grid::GridFunction& w,
                                   double r0, double r1, double s);

/// Antisymmetric-part lower bound (h = 0 regime), annulus factor c = 2.
/// Requires supp w inside {delta <= |y| <= R}, R >= 4 delta, and a
/// numerically vanishing Neumann trace (throws std::domain_error otherwise).
InequalityReport antisymmetric_lower_bound_sides(const grid::GridFunction& w,
                                                 double delta, double R,
                                                 double tau, double s);

/// Weighted-norm doubling ratios over dyadic radii.
struct DoublingPoint {
    double r = 0.0;
    double ratio = 0.0;
    bool ok = true; ///< false when the denominator vanished
};
std::vector<DoublingPoint> doubling_ratios(const grid::GridFunction& w,
                                           const std::vector<double>& radii,
                                           double s);

/// Diagnostic three-balls exponent alpha solving
/// ||w||_r = ||w||_{r/2}^alpha ||w||_{2r}^{1-alpha} (C = 1).
/// In-range alpha in [0,1] certifies log-convexity of the norm profile.
struct ThreeBallsResult {
    double alpha = 0.0;
    bool degenerate = false; ///< equal norms, alpha undefined
    bool in_range = false;
};
ThreeBallsResult three_balls_exponent(const grid::GridFunction& w, double r,
                                      double c1, double c2, double s);

} // namespace carleman::ineq

#endif
