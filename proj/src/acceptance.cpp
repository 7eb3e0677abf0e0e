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

#include "carleman_lab/acceptance.hpp"

#include "carleman_lab/coords.hpp"
#include "carleman_lab/extension.hpp"
#include "carleman_lab/inequalities.hpp"
#include "carleman_lab/io.hpp"
#include "carleman_lab/rng.hpp"
#include "carleman_lab/spectrum.hpp"
#include "carleman_lab/sweeps.hpp"
#include "carleman_lab/weights.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <sstream>

namespace carleman::accept {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Check {
    bool pass = true;
    std::ostringstream details;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            details << (details.tellp() > 0 ? "; " : "") << "FAILED: " << what;
        }
    }
    void note(const std::string& what) {
        details << (details.tellp() > 0 ? "; " : "") << what;
    }
};

std::string fm(double v, int prec = 3) {
    std::ostringstream os;
    os.precision(prec);
    os << std::scientific << v;
    return os.str();
}

// --- criterion 1: spectrum ---------------------------------------------------

CriterionResult c1_spectrum(const Config& cfg) {
    CriterionResult res{1, "spectrum oracle matches closed form", false, "", 0.0};
    Check ch;
    const int nodes = cfg.quick ? 1500 : 4000;
    double worst = 0.0;
    for (double s : {0.3, 0.5, 0.75}) {
        const auto ev = spectrum::sturm_liouville_spectrum(s, 6, nodes);
        for (int k = 0; k <= 6; ++k) {
            const double exact = spectrum::sl_eigenvalue_closed_form(k, s);
            const double rel = std::abs(ev[static_cast<std::size_t>(k)] - exact) /
                               std::max(std::abs(exact), 1.0);
            worst = std::max(worst, rel);
            // conversion between the two eigenvalue conventions is exact algebra
            const double lam = spectrum::explicit_eigenvalue(k, s);
            const double a = 1.0 - 2.0 * s;
            ch.require(std::abs(lam + exact + 0.5 * a * a) <= 1e-12,
                       "lambda/Lambda conversion at k=" + std::to_string(k));
        }
    }
    ch.require(worst <= 1e-3, "relative error " + fm(worst) + " > 1e-3");
    for (int k = 0; k <= 6; ++k)
        ch.require(spectrum::explicit_eigenvalue(k, 0.5) == -static_cast<double>(k) * k,
                   "s=1/2 eigenvalue not exactly -k^2 at k=" + std::to_string(k));
    ch.note("max rel err " + fm(worst) + " at " + std::to_string(nodes) + " nodes");
    res.pass = ch.pass;
    res.details = ch.details.str();
    return res;
}

// --- criterion 2: eigenfunctions ----------------------------------------------

CriterionResult c2_eigenfunctions(const Config& cfg) {
    CriterionResult res{2, "generalized Legendre recursion and orthonormality", false, "", 0.0};
    Check ch;
    const int n_theta = cfg.quick ? 8000 : 20000;
    double worst_gram = 0.0;
    for (double s : {0.3, 0.5, 0.75}) {
        const auto p0 = spectrum::legendre_coeffs(0, s);
        ch.require(p0.size() == 1 && p0[0] > 0.0, "P0 must be a positive constant");
        const auto p1 = spectrum::legendre_coeffs(1, s);
        ch.require(p1.size() == 2 && p1[0] == 0.0 && p1[1] > 0.0, "P1 must be a1*x");
        const auto p2 = spectrum::legendre_coeffs(2, s);
        ch.require(std::abs(p2[2] / p2[0] - (2.0 * s - 3.0)) <= 1e-12,
                   "P2 must be a0*(1 + (2mu-3)x^2)");

        // independent quadrature check of weighted orthonormality
        const std::vector<double> theta = coords::make_theta_axis(n_theta, 2.0);
        std::vector<std::vector<double>> vals;
        for (int k = 0; k <= 5; ++k) {
            const auto pair = spectrum::EigenPair::make(k, s);
            std::vector<double> u(theta.size());
            for (std::size_t j = 0; j < theta.size(); ++j)
                u[j] = spectrum::eigenfunction_eval(pair, theta[j], spectrum::EigenForm::u);
            vals.push_back(std::move(u));
        }
        for (int a = 0; a <= 5; ++a)
            for (int b = a; b <= 5; ++b) {
                std::vector<double> prod(theta.size());
                for (std::size_t j = 0; j < theta.size(); ++j)
                    prod[j] = vals[static_cast<std::size_t>(a)][j] *
                              vals[static_cast<std::size_t>(b)][j];
                const double g = coords::angular_integral(theta, prod, 1.0 - 2.0 * s);
                worst_gram = std::max(worst_gram, std::abs(g - (a == b ? 1.0 : 0.0)));
            }
    }
    ch.require(worst_gram <= 1e-6, "orthonormality defect " + fm(worst_gram) + " > 1e-6");
    ch.note("gram defect " + fm(worst_gram));
    res.pass = ch.pass;
    res.details = ch.details.str();
    return res;
}

// --- criterion 3: weight -------------------------------------------------------

CriterionResult c3_weight(const Config&) {
    CriterionResult res{3, "Carleman weight derivatives and gradient range", false, "", 0.0};
    Check ch;
    const double h = 1e-3;
    double worst_fd = 0.0, lo = 1e30, hi = -1e30;
    for (int i = 0; i <= 40000; ++i) {
        const double t = -20.0 + i * 1e-3;
        const double fd = (weights::phi(t + h) - 2.0 * weights::phi(t) + weights::phi(t - h)) / (h * h);
        worst_fd = std::max(worst_fd, std::abs(fd - weights::phi_double_prime(t)));
        const double mp = -weights::phi_prime(t);
        lo = std::min(lo, mp);
        hi = std::max(hi, mp);
        ch.require(weights::phi_double_prime(t) > 0.0, "pseudoconvexity");
    }
    ch.require(worst_fd <= 1e-6, "phi'' vs finite differences: " + fm(worst_fd));
    ch.require(lo >= 1.0 - kPi / 20.0 - 1e-12 && hi <= 1.0 + kPi / 20.0 + 1e-12,
               "-phi' leaves [1-pi/20, 1+pi/20]");
    ch.note("fd defect " + fm(worst_fd) + ", -phi' in [" + fm(lo, 6) + ", " + fm(hi, 6) +
            "] (hence tau|phi'| within [3tau/4, 2tau])");
    res.pass = ch.pass;
    res.details = ch.details.str();
    return res;
}

// --- criterion 4: DtN ----------------------------------------------------------

CriterionResult c4_dtn(const Config& cfg) {
    CriterionResult res{4, "Dirichlet-to-Neumann symbol |xi|^{2s}", false, "", 0.0};
    Check ch;
    const std::vector<double> xis =
        cfg.quick ? std::vector<double>{0.5, 2.0, 8.0}
                  : std::vector<double>{0.5, 0.7, 1.0, 1.5, 2.0, 3.0, 4.0, 6.0, 8.0};
    double worst = 0.0;
    for (double s : {0.25, 0.5, 0.75}) {
        const double d_s = extension::dtn_symbol(1.0, s);
        for (double xi : xis) {
            const double val = extension::dtn_symbol(xi, s) / d_s;
            const double dev = std::abs(val / std::pow(xi, 2.0 * s) - 1.0);
            worst = std::max(worst, dev);
        }
        if (s == 0.5) {
            ch.require(std::abs(d_s - 1.0) <= 1e-6,
                       "d_{1/2} = " + fm(d_s, 10) + " not 1 within 1e-6");
            double worst_prof = 0.0;
            for (double xi : {0.5, 1.0, 3.0}) {
                extension::ExtensionProfile prof(xi, 0.5);
                for (int i = 0; i <= 200; ++i) {
                    const double y = (10.0 / xi) * i / 200.0;
                    worst_prof = std::max(worst_prof,
                                          std::abs(prof.eval(y) - std::exp(-xi * y)));
                }
            }
            ch.require(worst_prof <= 1e-8,
                       "s=1/2 profile differs from exp(-xi y) by " + fm(worst_prof));
            ch.note("s=1/2 profile defect " + fm(worst_prof));
        }
    }
    ch.require(worst <= 1e-3, "normalized symbol deviation " + fm(worst) + " > 1e-3");
    ch.note("max symbol deviation " + fm(worst));
    res.pass = ch.pass;
    res.details = ch.details.str();
    return res;
}

// --- criterion 5: homogeneous solutions ----------------------------------------

CriterionResult c5_homogeneous(const Config& cfg) {
    CriterionResult res{5, "homogeneous solutions: residual decay and doubling", false, "", 0.0};
    Check ch;
    const std::vector<double> ss =
        cfg.quick ? std::vector<double>{0.5} : std::vector<double>{0.3, 0.5, 0.75};
    const int n_coarse = cfg.quick ? 48 : 64;

    for (double s : ss) {
        const FractionalParams params(s);
        for (int k = 0; k <= 4; ++k) {
            double resid[2], trace[2], scale[2];
            for (int lev = 0; lev < 2; ++lev) {
                const int n = n_coarse << lev;
                auto g = grid::HalfPlaneGrid::make(1.0, 1.0, n, n, s);
                const auto w = extension::homogeneous_solution(k, s, g);
                const auto f = coords::apply_cartesian_operator(w, params);
                resid[lev] = grid::weighted_norm(f, grid::Region::half_ball(0.7), 0.0);
                const auto h = coords::neumann_trace(w, params);
                double hmax = 0.0, wmax = 0.0;
                for (std::size_t i = 0; i < g->n1(); ++i) {
                    if (std::abs(g->y1[i]) <= 0.7)
                        hmax = std::max(hmax, std::abs(h.values[i]));
                }
                for (double v : w.values) wmax = std::max(wmax, std::abs(v));
                trace[lev] = hmax;
                scale[lev] = wmax;
            }
            const double floor_abs = 1e-11 * std::max(scale[1], 1.0);
            ch.require(resid[1] <= std::max(resid[0] / 3.0, floor_abs),
                       "bulk residual decay k=" + std::to_string(k) + " s=" + fm(s, 2) +
                           " (" + fm(resid[0]) + " -> " + fm(resid[1]) + ")");
            ch.require(trace[1] <= std::max(trace[0] / 3.0, floor_abs),
                       "Neumann trace decay k=" + std::to_string(k) + " s=" + fm(s, 2) +
                           " (" + fm(trace[0]) + " -> " + fm(trace[1]) + ")");
        }

        // doubling ratio 2^{k+(3-2s)/2} within 1e-3 relative
        auto g = grid::HalfPlaneGrid::make(1.0, 1.0, 160, 160, s);
        for (int k = 0; k <= 4; ++k) {
            const auto w = extension::homogeneous_solution(k, s, g);
            const auto pts = ineq::doubling_ratios(w, {0.2, 0.45}, s);
            const double expect = std::pow(2.0, k + 0.5 * (3.0 - 2.0 * s));
            for (const auto& pt : pts) {
                ch.require(pt.ok && std::abs(pt.ratio / expect - 1.0) <= 1e-3,
                           "doubling k=" + std::to_string(k) + " s=" + fm(s, 2) + " r=" +
                               fm(pt.r, 2) + ": " + fm(pt.ratio, 8) + " vs " + fm(expect, 8));
            }
        }
    }
    res.pass = ch.pass;
    res.details = ch.details.str().empty() ? "residuals decay >= 3x per refinement; "
                                             "doubling ratios within 1e-3"
                                           : ch.details.str();
    return res;
}

// --- criterion 6: Carleman ratio stability --------------------------------------

std::string family_of(const std::string& spec_id) {
    const auto pos = spec_id.find("_k");
    return pos == std::string::npos ? spec_id : spec_id.substr(0, pos);
}

CriterionResult c6_carleman(const Config& cfg) {
    CriterionResult res{6, "Carleman ratios finite and tau-stable", false, "", 0.0};
    Check ch;
    sweeps::SweepConfig sc;
    sc.quick = cfg.quick;
    sc.grid_n = cfg.quick ? 48 : 96;
    sc.threads = cfg.threads;
    sc.seed = cfg.seed;
    sc.s_list = {0.25, 0.5, 0.75};
    sc.tau_list = {2, 4, 8, 16, 32};
    const auto reports = sweeps::carleman_sweep(sc);

    // (s, family, tau) -> max ratio
    std::map<std::tuple<double, std::string, double>, double> maxima;
    double global_max = 0.0;
    for (const auto& r : reports) {
        ch.require(std::isfinite(r.ratio), "non-finite ratio for " + r.spec_id);
        ch.require(!r.vacuous, "vacuous report for " + r.spec_id);
        auto key = std::make_tuple(r.s, family_of(r.spec_id), r.tau);
        maxima[key] = std::max(maxima[key], r.ratio);
        global_max = std::max(global_max, r.ratio);
    }
    double worst_jump = 1.0;
    for (double s : sc.s_list) {
        for (const auto& fam :
             {std::string("annular_harmonic"), std::string("homogeneous_cutoff"),
              std::string("random_bump")}) {
            for (std::size_t i = 0; i + 1 < sc.tau_list.size(); ++i) {
                const double m0 = maxima[{s, fam, sc.tau_list[i]}];
                const double m1 = maxima[{s, fam, sc.tau_list[i + 1]}];
                if (m0 <= 0.0 || m1 <= 0.0) continue;
                const double jump = std::max(m1 / m0, m0 / m1);
                worst_jump = std::max(worst_jump, jump);
                ch.require(jump < 2.0, "per-family max changed " + fm(jump, 3) + "x at s=" +
                                           fm(s, 2) + " family=" + fam + " tau " +
                                           fm(sc.tau_list[i], 2) + "->" +
                                           fm(sc.tau_list[i + 1], 2));
            }
        }
    }
    ch.note(std::to_string(reports.size()) + " reports, max ratio " + fm(global_max) +
            ", worst tau-doubling jump " + fm(worst_jump, 3) + "x");
    res.pass = ch.pass;
    res.details = ch.details.str();
    return res;
}

// --- criterion 7: trace interpolation + Herbst ----------------------------------

CriterionResult c7_trace_herbst(const Config& cfg) {
    CriterionResult res{7, "trace interpolation and Herbst ratios bounded, refinement-stable",
                        false, "", 0.0};
    Check ch;
    sweeps::SweepConfig sc;
    sc.quick = cfg.quick;
    sc.grid_n = cfg.quick ? 40 : 56;
    sc.threads = cfg.threads;
    sc.seed = cfg.seed;
    sc.s_list = {0.25, 0.5, 0.75};
    sc.tau_list = {2, 4, 16, 64};

    auto key_of = [](const ineq::InequalityReport& r) {
        return r.spec_id + "|s" + io::format_double(r.s) + "|tau" + io::format_double(r.tau);
    };

    {
        auto coarse = sweeps::trace_sweep(sc);
        sweeps::SweepConfig sc2 = sc;
        sc2.quick = false; // fine axis
        auto fine = sweeps::trace_sweep(sc2);
        std::map<std::string, double> fine_map;
        for (const auto& r : fine) fine_map[key_of(r)] = r.ratio;
        double max_ratio = 0.0, worst_dev = 0.0;
        for (const auto& r : coarse) {
            ch.require(std::isfinite(r.ratio), "trace ratio non-finite for " + r.spec_id);
            max_ratio = std::max(max_ratio, r.ratio);
            const double rf = fine_map[key_of(r)];
            if (r.ratio > 1e-12) {
                const double dev = std::abs(rf / r.ratio - 1.0);
                worst_dev = std::max(worst_dev, dev);
                ch.require(dev <= 0.05, "trace ratio refinement drift " + fm(dev, 3) +
                                            " for " + r.spec_id);
            }
        }
        ch.note("trace: max ratio " + fm(max_ratio) + ", refinement drift " + fm(worst_dev));
    }
    {
        auto coarse = sweeps::herbst_sweep(sc);
        sweeps::SweepConfig sc2 = sc;
        sc2.grid_n = 2 * sc.grid_n;
        auto fine = sweeps::herbst_sweep(sc2);
        double max_ratio = 0.0, worst_dev = 0.0;
        for (std::size_t i = 0; i < coarse.size(); ++i) {
            ch.require(std::isfinite(coarse[i].ratio),
                       "herbst ratio non-finite for " + coarse[i].spec_id);
            max_ratio = std::max(max_ratio, coarse[i].ratio);
            if (coarse[i].ratio > 1e-12) {
                const double dev = std::abs(fine[i].ratio / coarse[i].ratio - 1.0);
                worst_dev = std::max(worst_dev, dev);
                ch.require(dev <= 0.05, "herbst ratio refinement drift " + fm(dev, 3) +
                                            " for " + coarse[i].spec_id);
            }
        }
        ch.note("herbst: max ratio " + fm(max_ratio) + ", refinement drift " + fm(worst_dev));
    }
    res.pass = ch.pass;
    res.details = ch.details.str();
    return res;
}

// --- criterion 8: parametrix kernel ----------------------------------------------

CriterionResult c8_kernel(const Config& cfg) {
    CriterionResult res{8, "parametrix kernel bound and discrete delta", false, "", 0.0};
    Check ch;
    const double tau = 8.0;
    const int n_grid = 200;
    double worst_c = 0.0;
    for (double ratio : {0.873, 1.0, 1.127}) {
        const double mu = ratio * tau;
        const double T = weights::turning_point(mu, tau);
        for (int it = 0; it < n_grid; ++it) {
            const double t = T - 4.0 + 8.0 * it / (n_grid - 1);
            const double dist = std::abs(tau * weights::phi_prime(t) + mu);
            for (int is = 0; is < n_grid; ++is) {
                const double sv = T - 4.0 + 8.0 * is / (n_grid - 1);
                const double kv = std::abs(spectrum::parametrix_kernel(mu, tau, t, sv));
                if (kv == 0.0) continue;
                const double bound = std::exp(-dist * std::abs(t - sv)) / tau;
                worst_c = std::max(worst_c, kv / bound);
            }
        }
    }
    ch.require(worst_c <= 10.0, "kernel bound constant " + fm(worst_c, 4) + " > 10");
    ch.note("recorded kernel bound constant " + fm(worst_c, 4));

    // discrete delta: one source on each side of the turning point
    const double mu = 6.0, tau2 = 6.0; // T = 0
    const double h = cfg.quick ? 2e-3 : 1e-3;
    for (double s0 : {3.0, -3.0}) {
        const double t0 = s0 - 2.75;
        const int n = static_cast<int>(std::round(5.5 / h)) + 1;
        std::vector<double> kv(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            kv[static_cast<std::size_t>(i)] =
                spectrum::parametrix_kernel(mu, tau2, t0 + h * i, s0);
        const auto lk = spectrum::radial_conjugated_apply(kv, t0, h, mu, tau2);
        double integral = 0.0;
        for (int i = 1; i + 1 < n; ++i) {
            const double t = t0 + h * i;
            const double arg = (1.5 - std::abs(t - s0)) / 0.5;
            const double chi = arg <= 0.0 ? 0.0
                               : arg >= 1.0 ? 1.0
                                            : arg * arg * arg * (10.0 + arg * (-15.0 + 6.0 * arg));
            integral += lk[static_cast<std::size_t>(i)] * chi * h;
        }
        ch.require(std::abs(std::abs(integral) - 1.0) <= 1e-2,
                   "unit-integral test at s0=" + fm(s0, 2) + ": " + fm(integral, 6));
        ch.note("delta integral at s0=" + fm(s0, 2) + ": " + fm(integral, 6));
    }
    res.pass = ch.pass;
    res.details = ch.details.str();
    return res;
}

// --- criterion 9: blow-up rescaling ----------------------------------------------

CriterionResult c9_blowup(const Config& cfg) {
    CriterionResult res{9, "blow-up rescaling normalizes the weighted norm", false, "", 0.0};
    Check ch;
    Rng rng(cfg.seed ^ 0xb10bull);
    const double ss[3] = {0.3, 0.5, 0.75};
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const double s = ss[trial % 3];
        auto g = grid::HalfPlaneGrid::make(1.0, 1.0, 64, 64, s);
        ineq::TestFunctionSpec spec{ineq::Family::random_bump, 0.12, 0.8,
                                    trial % 5, cfg.seed + 101ULL * trial};
        const auto w = ineq::realize(spec, g, s);
        const double sigma = rng.uniform(0.3, 0.85);
        const auto wsig = extension::blow_up_rescale(w, sigma, s);
        const double nrm =
            grid::weighted_norm(wsig, grid::Region::half_ball(1.0), 1.0 - 2.0 * s);
        worst = std::max(worst, std::abs(nrm - 1.0));
    }
    ch.require(worst <= 2e-6, "output norm deviates by " + fm(worst));
    ch.note("worst |norm-1| over 20 inputs: " + fm(worst));
    res.pass = ch.pass;
    res.details = ch.details.str();
    return res;
}

// --- criterion 10: determinism ----------------------------------------------------

CriterionResult c10_determinism(const Config& cfg) {
    CriterionResult res{10, "verify --quick reruns are byte-identical", false, "", 0.0};
    Check ch;
    namespace fs = std::filesystem;
    const fs::path base = fs::temp_directory_path() /
                          ("carleman_det_" + std::to_string(cfg.seed));
    const fs::path a = base / "a", b = base / "b";
    std::error_code ec;
    fs::remove_all(base, ec);
    write_quick_reports(a, cfg.seed, cfg.threads);
    write_quick_reports(b, cfg.seed, cfg.threads);
    std::size_t n_files = 0;
    for (const auto& entry : fs::recursive_directory_iterator(a)) {
        if (!entry.is_regular_file()) continue;
        ++n_files;
        const auto rel = fs::relative(entry.path(), a);
        const std::string ca = io::read_file(entry.path());
        const std::string cb = io::read_file(b / rel);
        ch.require(ca == cb, "artifact differs between reruns: " + rel.string());
    }
    ch.require(n_files >= 4, "expected >= 4 report artifacts");
    ch.note(std::to_string(n_files) + " artifacts byte-identical across reruns");
    fs::remove_all(base, ec);
    res.pass = ch.pass;
    res.details = ch.details.str();
    return res;
}

} // namespace

void write_quick_reports(const std::filesystem::path& out_dir, std::uint64_t seed,
                         int threads) {
    // spectrum CSV (s = 1/2)
    {
        const int k_max = 4, nodes = 1200;
        const auto ev = spectrum::sturm_liouville_spectrum(0.5, k_max, nodes);
        std::ostringstream os;
        os << "k,lambda_explicit,Lambda_numeric,rel_err\n";
        for (int k = 0; k <= k_max; ++k) {
            const double exact = spectrum::sl_eigenvalue_closed_form(k, 0.5);
            const double rel = std::abs(ev[static_cast<std::size_t>(k)] - exact) /
                               std::max(std::abs(exact), 1.0);
            os << k << "," << io::format_double(spectrum::explicit_eigenvalue(k, 0.5))
               << "," << io::format_double(ev[static_cast<std::size_t>(k)]) << ","
               << io::format_double(rel) << "\n";
        }
        io::atomic_write(out_dir / "spectrum_s0.5.csv", os.str());
    }
    // DtN JSON (s = 1/2)
    {
        const double d = extension::dtn_symbol(1.0, 0.5);
        std::ostringstream os;
        os << "{\n  \"s\": 0.5,\n  \"d_s\": " << io::format_double(d)
           << ",\n  \"samples\": [";
        bool first = true;
        for (double xi : {0.5, 1.0, 2.0, 4.0}) {
            os << (first ? "" : ", ") << "{\"xi\": " << io::format_double(xi)
               << ", \"normalized\": " << io::format_double(extension::dtn_symbol(xi, 0.5) / d)
               << "}";
            first = false;
        }
        os << "]\n}\n";
        io::atomic_write(out_dir / "dtn_s0.5.json", os.str());
    }
    // quick Carleman sweep
    {
        sweeps::SweepConfig sc;
        sc.quick = true;
        sc.grid_n = 48;
        sc.threads = threads;
        sc.seed = seed;
        sc.s_list = {0.5};
        sc.tau_list = {2, 8};
        const auto reports = sweeps::carleman_sweep(sc);
        io::atomic_write(out_dir / "carleman_reports.json", sweeps::reports_to_json(reports));
        io::atomic_write(out_dir / "carleman_summary.csv", sweeps::reports_to_csv(reports));
    }
}

CriterionResult run_criterion(int id, const Config& cfg) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult res;
    switch (id) {
        case 1: res = c1_spectrum(cfg); break;
        case 2: res = c2_eigenfunctions(cfg); break;
        case 3: res = c3_weight(cfg); break;
        case 4: res = c4_dtn(cfg); break;
        case 5: res = c5_homogeneous(cfg); break;
        case 6: res = c6_carleman(cfg); break;
        case 7: res = c7_trace_herbst(cfg); break;
        case 8: res = c8_kernel(cfg); break;
        case 9: res = c9_blowup(cfg); break;
        case 10: res = c10_determinism(cfg); break;
        default: throw std::invalid_argument("run_criterion: id must be 1..10");
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    // runtime budgets stated by the criteria
    if (id == 1 && res.seconds >= 30.0) {
        res.pass = false;
        res.details += "; FAILED: runtime budget 30 s exceeded";
    }
    if (id == 6 && res.seconds >= 300.0) {
        res.pass = false;
        res.details += "; FAILED: runtime budget 5 min exceeded";
    }
    return res;
}

std::vector<CriterionResult> run_all(const Config& cfg) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= 10; ++id) out.push_back(run_criterion(id, cfg));
    return out;
}

std::string format_line(const CriterionResult& r) {
    std::ostringstream os;
    os << (r.pass ? "PASS" : "FAIL") << "  " << r.id << ". " << r.name << "  (";
    os.precision(1);
    os << std::fixed << r.seconds << "s)";
    if (!r.details.empty()) os << "  -- " << r.details;
    return os.str();
}

} // namespace carleman::accept
