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

#include "carleman_lab/sweeps.hpp"

#include "carleman_lab/coords.hpp"
#include "carleman_lab/extension.hpp"
#include "carleman_lab/rng.hpp"
#include "carleman_lab/spectrum.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <sstream>
#include <thread>

namespace carleman::sweeps {

int thread_budget() {
    if (const char* env = std::getenv("CARLEMAN_LAB_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t)>& fn) {
    if (threads <= 0) threads = thread_budget();
    threads = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(threads), n));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&]() {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (!err) err = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

namespace {

std::shared_ptr<const grid::HalfPlaneGrid> sweep_grid(int n, double s) {
    return grid::HalfPlaneGrid::make(1.0, 1.0, n, n, s);
}

} // namespace

std::vector<ineq::InequalityReport> carleman_sweep(const SweepConfig& cfg) {
    const auto specs = ineq::standard_battery(cfg.quick);
    struct Job {
        double s;
        std::size_t spec;
    };
    std::vector<Job> jobs;
    for (double s : cfg.s_list)
        for (std::size_t i = 0; i < specs.size(); ++i)
            jobs.push_back({s, i});

    std::vector<std::vector<ineq::InequalityReport>> rows(jobs.size());
    parallel_for(jobs.size(), cfg.threads, [&](std::size_t j) {
        const Job& job = jobs[j];
        auto g = sweep_grid(cfg.grid_n, job.s);
        ineq::TestFunctionSpec spec = specs[job.spec];
        spec.seed += cfg.seed; // battery seeds offset by the run seed
        const grid::GridFunction w = ineq::realize(spec, g, job.s);
        const FractionalParams params(job.s);
        const grid::GridFunction f = coords::apply_cartesian_operator(w, params);
        const coords::NeumannTrace h = coords::neumann_trace(w, params);
        for (double tau : cfg.tau_list) {
            ineq::InequalityReport rep = ineq::carleman_sides(w, f, h.values, tau, job.s);
            rep.spec_id = spec.id();
            rows[j].push_back(std::move(rep));
        }
    });

    std::vector<ineq::InequalityReport> out;
    for (auto& r : rows)
        for (auto& rep : r) out.push_back(std::move(rep));
    return out;
}

std::vector<ineq::InequalityReport> trace_sweep(const SweepConfig& cfg) {
    const int n_theta = cfg.quick ? 200 : 400;
    const std::vector<double> taus =
        cfg.tau_list.empty() ? std::vector<double>{2, 4, 16, 64} : cfg.tau_list;

    std::vector<ineq::InequalityReport> out;
    for (double s : cfg.s_list) {
        const std::vector<double> theta =
            coords::make_theta_axis(n_theta, std::clamp(2.0 / (2.0 - 2.0 * s), 1.0, 3.0));
        std::vector<std::pair<std::string, std::vector<double>>> fams;

        for (int k = 0; k <= 5; ++k) {
            const auto pair = spectrum::EigenPair::make(k, s);
            std::vector<double> u(theta.size());
            for (std::size_t j = 0; j < theta.size(); ++j)
                u[j] = spectrum::eigenfunction_eval(pair, theta[j], spectrum::EigenForm::u);
            fams.emplace_back("eigen_k" + std::to_string(k), std::move(u));
        }
        fams.emplace_back("const", std::vector<double>(theta.size(), 1.0));
        for (std::uint64_t seed = 1; seed <= (cfg.quick ? 1u : 3u); ++seed) {
            Rng rng(cfg.seed ^ (seed * 0x51ab1ee5ULL));
            const double a0 = rng.uniform(-1.0, 1.0), a1 = rng.uniform(-1.0, 1.0);
            const double a2 = rng.uniform(-1.0, 1.0), ph = rng.uniform(0.0, 3.14);
            std::vector<double> u(theta.size());
            for (std::size_t j = 0; j < theta.size(); ++j)
                u[j] = a0 + a1 * std::cos(theta[j]) + a2 * std::sin(2.0 * theta[j] + ph);
            fams.emplace_back("smooth_seed" + std::to_string(seed), std::move(u));
        }

        for (const auto& fam : fams)
            for (double tau : taus) {
                if (!(tau > 1.0)) continue;
                ineq::InequalityReport rep =
                    ineq::trace_interpolation_sides(theta, fam.second, tau, s);
                rep.spec_id = fam.first;
                out.push_back(std::move(rep));
            }
    }
    return out;
}

std::vector<ineq::InequalityReport> herbst_sweep(const SweepConfig& cfg) {
    const auto specs = ineq::standard_battery(true); // compact battery suffices
    struct Job {
        double s;
        std::size_t spec;
    };
    std::vector<Job> jobs;
    for (double s : cfg.s_list)
        for (std::size_t i = 0; i < specs.size(); ++i)
            jobs.push_back({s, i});
    std::vector<ineq::InequalityReport> out(jobs.size());
    parallel_for(jobs.size(), cfg.threads, [&](std::size_t j) {
        const Job& job = jobs[j];
        auto g = sweep_grid(cfg.grid_n, job.s);
        ineq::TestFunctionSpec spec = specs[job.spec];
        spec.seed += cfg.seed;
        const grid::GridFunction w = ineq::realize(spec, g, job.s);
        ineq::InequalityReport rep = ineq::herbst_sides(w, job.s);
        rep.spec_id = spec.id();
        out[j] = std::move(rep);
    });
    return out;
}

std::vector<DoublingRow> doubling_sweep(const SweepConfig& cfg,
                                        const std::string& family, int k_max,
                                        const std::vector<double>& radii) {
    std::vector<DoublingRow> out;
    for (double s : cfg.s_list) {
        auto g = sweep_grid(std::max(cfg.grid_n, 160), s);
        for (int k = 0; k <= k_max; ++k) {
            grid::GridFunction w;
            std::string id;
            if (family == "homogeneous") {
                w = extension::homogeneous_solution(k, s, g);
                id = "homogeneous_k" + std::to_string(k);
            } else {
                ineq::TestFunctionSpec spec{ineq::Family::random_bump, 0.12, 0.45, k,
                                            cfg.seed + static_cast<std::uint64_t>(k)};
                w = ineq::realize(spec, g, s);
                id = spec.id();
            }
            for (const auto& pt : ineq::doubling_ratios(w, radii, s))
                out.push_back({s, id, pt.r, pt.ratio, pt.ok});
        }
    }
    return out;
}

std::string reports_to_json(const std::vector<ineq::InequalityReport>& reports) {
    std::ostringstream os;
    os << "[\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        std::istringstream body(reports[i].to_json());
        std::string line;
        bool first = true;
        while (std::getline(body, line)) {
            os << (first ? "" : "\n") << "  " << line;
            first = false;
        }
        os << (i + 1 < reports.size() ? "," : "") << "\n";
    }
    os << "]\n";
    return os.str();
}

std::string reports_to_csv(const std::vector<ineq::InequalityReport>& reports) {
    std::ostringstream os;
    os << ineq::report_csv_header() << "\n";
    for (const auto& r : reports) os << ineq::report_csv_row(r) << "\n";
    return os.str();
}

} // namespace carleman::sweeps
