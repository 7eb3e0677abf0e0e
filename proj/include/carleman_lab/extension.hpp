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

#ifndef CARLEMAN_LAB_EXTENSION_HPP
#define CARLEMAN_LAB_EXTENSION_HPP

#include "carleman_lab/grid.hpp"
#include "carleman_lab/params.hpp"

#include <complex>
#include <memory>
#include <vector>

namespace carleman::extension {

/// Per-frequency extension profile: the decaying solution of
///   theta'' + ((1-2s)/y) theta' - xi^2 theta = 0,  theta(0) = 1.
/// Solved by backward integration from an asymptotic start, matched to the
/// Frobenius basis {1 + ..., y^{2s} + ...} near zero; this numerical profile
/// is the oracle for everything downstream.
class ExtensionProfile {
  public:
    ExtensionProfile(double xi, double s);

    double xi() const { return xi_; }
    double s() const { return s_; }

    /// theta(y2); exact normalization theta(0) = 1.
    double eval(double y2) const;

    /// m(xi) = -lim y^{1-2s} theta'(y), extracted from profile values by
    /// flux-form differences and Richardson extrapolation (exponent 2-2s).
    double dtn() const { return dtn_; }

    /// Same limit read off the matched Frobenius coefficient (-2s B);
    /// cross-check for dtn().
    double dtn_frobenius() const { return dtn_frobenius_; }

  private:
    double series_theta(double y) const;
    double xi_ = 0.0, s_ = 0.5;
    double y_start_ = 0.0, y_max_ = 0.0;
    double coef_b_ = 0.0; ///< y^{2s}-branch coefficient after normalization
    double dtn_ = 0.0, dtn_frobenius_ = 0.0;
    double tail_scale_ = 0.0;
    std::vector<double> ys_, th_, dth_; ///< dense trajectory, increasing y
};

/// theta(y2) for one frequency (fresh solve; cache the ExtensionProfile when
/// evaluating many points).
double extension_profile(double xi, double s, double y2);

/// m(xi): weighted Dirichlet-to-Neumann symbol of the extension.
double dtn_symbol(double xi, double s);

/// m(xi)/d_s with d_s = m(1); equals |xi|^{2s} in the continuum.
double normalized_dtn(double xi, double s);

/// Boundary data in frequency space: nonnegative frequencies with complex
/// amplitudes; the reconstructed field sums Re(amp e^{i xi y1}), which
/// enforces the Hermitian symmetry of real data.
struct SpectralBoundaryData {
    std::vector<double> xi;
    std::vector<std::complex<double>> amp;

    void validate() const;
};

/// Caffarelli-Silvestre extension of the boundary data onto the grid.
/// Rejects frequencies beyond the tangential Nyquist limit (aliasing).
grid::GridFunction cs_extend(const SpectralBoundaryData& data, double s,
                             std::shared_ptr<const grid::HalfPlaneGrid> g);

/// w_k(y) = |y|^k P_k(cos theta): homogeneous solution of the bulk equation
/// with zero weighted Neumann data, degree k <= 6.
grid::GridFunction homogeneous_solution(int k, double s,
                                        std::shared_ptr<const grid::HalfPlaneGrid> g);

/// Blow-up rescaling w_sigma(y) = w(sigma y) / (sigma^{-(n+1)/2} sigma^{-(1-2s)/2}
/// ||y2^{(1-2s)/2} w||_{L2(B_sigma^+)}), realized on the sigma-scaled subgrid so
/// that the unit-norm identity on B_1^+ is the exact change of variables.
/// Rejects zero-norm input.
grid::GridFunction blow_up_rescale(const grid::GridFunction& w, double sigma,
                                   double s);

} // namespace carleman::extension

#endif
