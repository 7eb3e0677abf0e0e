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

#ifndef CARLEMAN_LAB_SWEEPS_HPP
#define CARLEMAN_LAB_SWEEPS_HPP

#include "carleman_lab/grid.hpp"
#include "carleman_lab/inequalities.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace carleman::sweeps {

/// Thread budget: CARLEMAN_LAB_THREADS when set, else hardware concurrency.
int thread_budget();

/// Runs fn(i) for i in [0,n) on up to `threads` workers with static chunking;
/// any exception is rethrown on the caller thread.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

struct SweepConfig {
    std::vector<double> s_list{0.25, 0.5, 0.75};
    std::vector<double> tau_list{2, 4, 8, 16, 32};
    int grid_n = 96;   ///< cells per half axis (and per normal axis)
    bool quick = false;
    int threads = 0;   ///< 0 = thread_budget()
    std::uint64_t seed = 12345;
};

/// Carleman battery sweep: one report per (s, spec, tau); f and h computed
/// once per (s, spec).  Deterministic given the seed.
std::vector<ineq::InequalityReport> carleman_sweep(const SweepConfig& cfg);

/// Trace-interpolation sweep over angular families (eigenfunctions of the
/// weighted spherical operator, constants, seeded smooth profiles).
std::vector<ineq::InequalityReport> trace_sweep(const SweepConfig& cfg);

/// Herbst sweep over the standard battery.
std::vector<ineq::InequalityReport> herbst_sweep(const SweepConfig& cfg);

struct DoublingRow {
    double s = 0.0;
    std::string spec_id;
    double r = 0.0;
    double ratio = 0.0;
    bool ok = true;
};
/// Doubling ratios of homogeneous solutions (or the battery with
/// family selection) over dyadic radii.
std::vector<DoublingRow> doubling_sweep(const SweepConfig& cfg,
                                        const std::string& family, int k_max,
                                        const std::vector<double>& radii);

/// Serialize reports as a JSON array plus a CSV summary.
std::string reports_to_json(const std::vector<ineq::InequalityReport>& reports);
std::string reports_to_csv(const std::vector<ineq::InequalityReport>& reports);

} // namespace carleman::sweeps

#endif
