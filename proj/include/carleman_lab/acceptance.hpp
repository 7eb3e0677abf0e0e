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

#ifndef CARLEMAN_LAB_ACCEPTANCE_HPP
#define CARLEMAN_LAB_ACCEPTANCE_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace carleman::accept {

struct Config {
    bool quick = false;    ///< reduced battery/resolution smoke run
    int threads = 0;       ///< 0 = auto
    std::uint64_t seed = 12345;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string details;
    double seconds = 0.0;
};

/// Runs criterion `id` (1..10).  Tolerances are pinned; quick mode only
/// shrinks batteries and sweeps where the criterion text permits.
CriterionResult run_criterion(int id, const Config& cfg);

/// All ten criteria in order.
std::vector<CriterionResult> run_all(const Config& cfg);

/// One line per criterion: "PASS|FAIL  <id>. <name>  (<seconds>s)  <details>".
std::string format_line(const CriterionResult& r);

/// Deterministic quick-report artifact set (spectrum CSV, DtN JSON, quick
/// Carleman sweep JSON+CSV) written under out_dir; the byte-identity of two
/// such runs with one seed is the determinism criterion and also backs the
/// CLI `verify --quick` artifacts.
void write_quick_reports(const std::filesystem::path& out_dir, std::uint64_t seed,
                         int threads);

} // namespace carleman::accept

#endif
