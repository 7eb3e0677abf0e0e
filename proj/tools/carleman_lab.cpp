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

// Command-line front end: spectrum / extend / carleman / trace / doubling /
// verify subcommands emitting CSV and JSON reports.  Exit codes: 0 success,
// 1 assertion failure, 2 configuration error.

#include "carleman_lab/acceptance.hpp"
#include "carleman_lab/coords.hpp"
#include "carleman_lab/extension.hpp"
#include "carleman_lab/grid.hpp"
#include "carleman_lab/inequalities.hpp"
#include "carleman_lab/io.hpp"
#include "carleman_lab/spectrum.hpp"
#include "carleman_lab/sweeps.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <complex>
#include <iostream>
#include <sstream>

namespace {

using carleman::io::atomic_write;
using carleman::io::format_double;

struct CommonOpts {
    std::vector<double> s_list{0.5};
    std::vector<double> tau_list{2, 4, 8, 16, 32};
    int k_max = 6;
    int grid_size = 96;
    std::vector<double> radii;
    std::string family = "homogeneous";
    std::uint64_t seed = 12345;
    std::string out_dir = "out";
    bool quick = false;
    std::string config_path;
};

void check_s_list(const std::vector<double>& s_list) {
    for (double s : s_list)
        if (!(s > 0.0 && s < 1.0))
            throw CLI::ValidationError("--s", "s values must lie in (0,1)");
}

/// JSON config mirrors the flags; explicit flags win.
void load_config_defaults(CommonOpts& o, const std::string& path) {
    const auto text = carleman::io::read_file(path);
    const auto j = nlohmann::json::parse(text);
    if (j.contains("s")) o.s_list = j.at("s").get<std::vector<double>>();
    if (j.contains("tau")) o.tau_list = j.at("tau").get<std::vector<double>>();
    if (j.contains("k_max")) o.k_max = j.at("k_max").get<int>();
    if (j.contains("grid_size")) o.grid_size = j.at("grid_size").get<int>();
    if (j.contains("radii")) o.radii = j.at("radii").get<std::vector<double>>();
    if (j.contains("family")) o.family = j.at("family").get<std::string>();
    if (j.contains("seed")) o.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("out")) o.out_dir = j.at("out").get<std::string>();
    if (j.contains("quick")) o.quick = j.at("quick").get<bool>();
}

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--s", o.s_list, "fractional order(s) in (0,1)");
    cmd->add_option("--tau", o.tau_list, "conjugation strengths tau >= 1");
    cmd->add_option("--k-max", o.k_max, "largest spherical index");
    cmd->add_option("--grid-size", o.grid_size, "cells per half axis");
    cmd->add_option("--radii", o.radii, "radii list");
    cmd->add_option("--family", o.family, "test-function family");
    cmd->add_option("--seed", o.seed, "RNG seed");
    cmd->add_option("--out", o.out_dir, "output directory");
    cmd->add_flag("--quick", o.quick, "reduced battery / smoke mode");
    cmd->add_option("--config", o.config_path, "JSON config file (flags win)")
        ->check(CLI::ExistingFile);
}

void write_run_meta(const CommonOpts& o, const std::string& subcommand) {
    // wall-clock metadata lives apart from the deterministic artifacts
    const auto now = std::chrono::system_clock::now().time_since_epoch();
    std::ostringstream os;
    os << "{\n  \"subcommand\": \"" << subcommand << "\",\n  \"seed\": " << o.seed
       << ",\n  \"unix_ms\": "
       << std::chrono::duration_cast<std::chrono::milliseconds>(now).count() << "\n}\n";
    atomic_write(std::filesystem::path(o.out_dir) / "run_meta.json", os.str());
}

int cmd_spectrum(const CommonOpts& o) {
    check_s_list(o.s_list);
    if (o.k_max < 0 || o.k_max > 64) throw CLI::ValidationError("--k-max", "out of range");
    const int nodes = o.quick ? 1200 : 4000;
    for (double s : o.s_list) {
        const auto ev = carleman::spectrum::sturm_liouville_spectrum(s, o.k_max, nodes);
        std::ostringstream os;
        os << "k,lambda_explicit,Lambda_numeric,rel_err\n";
        for (int k = 0; k <= o.k_max; ++k) {
            const double exact = carleman::spectrum::sl_eigenvalue_closed_form(k, s);
            const double rel = std::abs(ev[static_cast<std::size_t>(k)] - exact) /
                               std::max(std::abs(exact), 1.0);
            os << k << "," << format_double(carleman::spectrum::explicit_eigenvalue(k, s))
               << "," << format_double(ev[static_cast<std::size_t>(k)]) << ","
               << format_double(rel) << "\n";
            if (rel > 1e-3) {
                std::cerr << "spectrum: cross-validation failed at k=" << k
                          << " s=" << s << " rel_err=" << rel << "\n";
                return 1;
            }
        }
        std::ostringstream name;
        name << "spectrum_s" << s << ".csv";
        atomic_write(std::filesystem::path(o.out_dir) / name.str(), os.str());
    }
    write_run_meta(o, "spectrum");
    return 0;
}

int cmd_extend(const CommonOpts& o, const std::string& input_csv) {
    check_s_list(o.s_list);
    const double s = o.s_list.front();
    const auto samples = carleman::io::read_xy_csv(input_csv);
    if (samples.size() < 8)
        throw CLI::ValidationError("input", "need >= 8 boundary samples");
    const auto n = samples.size();
    const double x0 = samples.front().first, x1 = samples.back().first;
    const double dx = (x1 - x0) / static_cast<double>(n - 1);
    for (std::size_t i = 1; i < n; ++i)
        if (std::abs(samples[i].first - samples[i - 1].first - dx) > 1e-9 * std::abs(dx))
            throw CLI::ValidationError("input", "boundary samples must be uniform in y1");

    // real DFT of the samples onto nonnegative frequencies
    carleman::extension::SpectralBoundaryData data;
    const double span = dx * static_cast<double>(n);
    const std::size_t m_max = n / 2;
    for (std::size_t m = 0; m <= m_max; ++m) {
        const double xi = 2.0 * 3.14159265358979323846 * static_cast<double>(m) / span;
        std::complex<double> acc(0.0, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            const double ph = xi * (samples[i].first - x0);
            acc += samples[i].second * std::complex<double>(std::cos(ph), -std::sin(ph));
        }
        acc /= static_cast<double>(n);
        if (m > 0 && !(m == m_max && n % 2 == 0)) acc *= 2.0;
        data.xi.push_back(xi);
        data.amp.push_back(acc);
    }

    auto g = carleman::grid::HalfPlaneGrid::make(0.5 * (x1 - x0), 0.5 * (x1 - x0),
                                                 o.grid_size, o.grid_size, s);
    // the chart is centered: shift amplitudes so e^{i xi y1} matches samples
    for (std::size_t m = 0; m < data.xi.size(); ++m) {
        const double ph = data.xi[m] * (0.5 * (x1 - x0));
        data.amp[m] *= std::complex<double>(std::cos(ph), std::sin(ph));
    }
    const auto field = carleman::extension::cs_extend(data, s, g);
    std::ostringstream csv;
    carleman::grid::write_csv(field, csv);
    atomic_write(std::filesystem::path(o.out_dir) / "extension.csv", csv.str());

    const double d = carleman::extension::dtn_symbol(1.0, s);
    std::ostringstream js;
    js << "{\n  \"s\": " << format_double(s) << ",\n  \"d_s\": " << format_double(d)
       << ",\n  \"n_frequencies\": " << data.xi.size() << "\n}\n";
    atomic_write(std::filesystem::path(o.out_dir) / "dtn.json", js.str());
    write_run_meta(o, "extend");
    return 0;
}

int run_report_sweep(const CommonOpts& o, const std::string& which) {
    check_s_list(o.s_list);
    carleman::sweeps::SweepConfig sc;
    sc.s_list = o.s_list;
    sc.tau_list = o.tau_list;
    sc.grid_n = o.grid_size;
    sc.quick = o.quick;
    sc.seed = o.seed;
    std::vector<carleman::ineq::InequalityReport> reports;
    if (which == "carleman")
        reports = carleman::sweeps::carleman_sweep(sc);
    else
        reports = carleman::sweeps::trace_sweep(sc);
    atomic_write(std::filesystem::path(o.out_dir) / (which + "_reports.json"),
                 carleman::sweeps::reports_to_json(reports));
    atomic_write(std::filesystem::path(o.out_dir) / (which + "_summary.csv"),
                 carleman::sweeps::reports_to_csv(reports));
    write_run_meta(o, which);
    for (const auto& r : reports)
        if (!std::isfinite(r.ratio)) {
            std::cerr << which << ": non-finite ratio for " << r.spec_id << "\n";
            return 1;
        }
    return 0;
}

int cmd_doubling(const CommonOpts& o, int k_flag) {
    check_s_list(o.s_list);
    carleman::sweeps::SweepConfig sc;
    sc.s_list = o.s_list;
    sc.grid_n = o.grid_size;
    sc.seed = o.seed;
    const std::vector<double> radii = o.radii.empty()
                                          ? std::vector<double>{0.1, 0.2, 0.3, 0.45}
                                          : o.radii;
    const auto rows = carleman::sweeps::doubling_sweep(sc, o.family, k_flag, radii);
    std::ostringstream os;
    os << "s,spec_id,r,ratio,ok\n";
    for (const auto& row : rows)
        os << format_double(row.s) << "," << row.spec_id << "," << format_double(row.r)
           << "," << format_double(row.ratio) << "," << (row.ok ? 1 : 0) << "\n";
    atomic_write(std::filesystem::path(o.out_dir) / "doubling.csv", os.str());
    write_run_meta(o, "doubling");
    for (const auto& row : rows)
        if (!row.ok) {
            std::cerr << "doubling: zero denominator for " << row.spec_id << "\n";
            return 1;
        }
    return 0;
}

int cmd_verify(const CommonOpts& o) {
    carleman::accept::Config cfg;
    cfg.quick = o.quick;
    cfg.seed = o.seed;
    const auto results = carleman::accept::run_all(cfg);
    std::ostringstream js;
    js << "[\n";
    bool all_pass = true;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        std::cout << carleman::accept::format_line(r) << "\n";
        all_pass = all_pass && r.pass;
        js << "  {\"id\": " << r.id << ", \"name\": \"" << r.name << "\", \"pass\": "
           << (r.pass ? "true" : "false") << "}" << (i + 1 < results.size() ? "," : "")
           << "\n";
    }
    js << "]\n";
    atomic_write(std::filesystem::path(o.out_dir) / "verify_results.json", js.str());
    carleman::accept::write_quick_reports(std::filesystem::path(o.out_dir) / "reports",
                                          o.seed, 0);
    write_run_meta(o, "verify");
    if (!all_pass) std::cerr << "verify: some criteria failed\n";
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"carleman-lab: numerical companion to a Carleman-estimate "
                 "unique-continuation theory for fractional Schroedinger operators"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string extend_input;
    int doubling_k = 4;

    auto* sp = app.add_subcommand("spectrum", "spherical eigenvalues + oracle cross-check");
    add_common(sp, opts);
    auto* ex = app.add_subcommand("extend", "Caffarelli-Silvestre extension of boundary CSV");
    add_common(ex, opts);
    ex->add_option("--input", extend_input, "boundary samples CSV (y1,value)")
        ->required()
        ->check(CLI::ExistingFile);
    auto* ca = app.add_subcommand("carleman", "Carleman two-sided battery sweep");
    add_common(ca, opts);
    auto* tr = app.add_subcommand("trace", "trace-interpolation battery sweep");
    add_common(tr, opts);
    auto* db = app.add_subcommand("doubling", "weighted-norm doubling ratios");
    add_common(db, opts);
    db->add_option("--k", doubling_k, "max spherical index for the family");
    auto* ve = app.add_subcommand("verify", "acceptance criteria, machine-readable pass/fail");
    add_common(ve, opts);

    // pre-scan for --config so explicit flags override the file
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--config") {
            try {
                load_config_defaults(opts, argv[i + 1]);
            } catch (const std::exception& e) {
                std::cerr << "config error: " << e.what() << "\n";
                return 2;
            }
        }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sp->parsed()) return cmd_spectrum(opts);
        if (ex->parsed()) return cmd_extend(opts, extend_input);
        if (ca->parsed()) return run_report_sweep(opts, "carleman");
        if (tr->parsed()) return run_report_sweep(opts, "trace");
        if (db->parsed()) return cmd_doubling(opts, doubling_k);
        if (ve->parsed()) return cmd_verify(opts);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
