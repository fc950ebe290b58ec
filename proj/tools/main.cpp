// Copyright 2026 The blochldp Authors
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
//
// Command-line front end: evolve states, estimate decay rates, run the
// structural verification suite, and sweep parameter grids. Configuration
// comes from a JSON file; a handful of flags override file values.

#include <atomic>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "blochldp/deviations.hpp"
#include "blochldp/json_io.hpp"
#include "blochldp/verify.hpp"

namespace {

using namespace blochldp;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitVerification = 4;

struct GridSpec {
    double t_max = 10.0;
    int points = 101;
    bool geometric = false;
};

enum class InitialStateKind { MaximallyMixed, E2Pure, Explicit };

struct RunConfig {
    json generator_json;
    InitialStateKind state_kind = InitialStateKind::MaximallyMixed;
    Mat2 explicit_state{};
    GridSpec grid;
    std::string out_path;    // empty: stdout
    std::string format = "csv";
    json sweep_ranges;       // sweep command only
    int jobs = 0;            // 0: hardware concurrency
};

void emit_error(const std::string& kind, const std::string& message) {
    json err{{"error", {{"kind", kind}, {"message", message}}}};
    std::cerr << err.dump() << "\n";
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    return j;
}

RunConfig parse_config(const json& j) {
    RunConfig cfg;
    if (!j.is_object()) throw ConfigError("config root must be an object");

    if (j.contains("generator")) cfg.generator_json = j["generator"];
    if (j.contains("sweep")) cfg.sweep_ranges = j["sweep"];

    if (j.contains("initial_state")) {
        const json& s = j["initial_state"];
        if (s.is_string()) {
            const std::string name = s.get<std::string>();
            if (name == "maximally-mixed") {
                cfg.state_kind = InitialStateKind::MaximallyMixed;
            } else if (name == "e2-pure") {
                cfg.state_kind = InitialStateKind::E2Pure;
            } else {
                throw ConfigError("initial_state: unknown name \"" + name + "\"");
            }
        } else {
            cfg.state_kind = InitialStateKind::Explicit;
            cfg.explicit_state = mat2_from_json(s);
        }
    }

    if (j.contains("grid")) {
        const json& g = j["grid"];
        if (!g.is_object()) throw ConfigError("grid must be an object");
        if (g.contains("t_max")) cfg.grid.t_max = g["t_max"].get<double>();
        if (g.contains("points")) cfg.grid.points = g["points"].get<int>();
        if (g.contains("spacing")) {
            const std::string sp = g["spacing"].get<std::string>();
            if (sp == "linear") cfg.grid.geometric = false;
            else if (sp == "geometric") cfg.grid.geometric = true;
            else throw ConfigError("grid.spacing must be linear or geometric");
        }
    }

    if (j.contains("output")) {
        const json& o = j["output"];
        if (o.contains("path")) cfg.out_path = o["path"].get<std::string>();
        if (o.contains("format")) cfg.format = o["format"].get<std::string>();
    }
    if (j.contains("jobs")) cfg.jobs = j["jobs"].get<int>();
    return cfg;
}

void validate_common(const RunConfig& cfg) {
    if (!(cfg.grid.t_max > 0.0)) throw ConfigError("t_max must be > 0");
    if (cfg.grid.points < 2) throw ConfigError("points must be >= 2");
    if (cfg.format != "csv" && cfg.format != "json") {
        throw ConfigError("format must be csv or json");
    }
}

/// Linear grids start at 0; geometric grids start at 0.1 with the ratio
/// chosen to land exactly on t_max (late-time resolution for rate series).
std::vector<double> make_grid(const GridSpec& g, bool include_zero) {
    std::vector<double> times;
    if (g.geometric) {
        const double t0 = std::min(0.1, g.t_max);
        if (include_zero) times.push_back(0.0);
        const int n = g.points;
        if (g.t_max <= t0 || n == 1) {
            times.push_back(g.t_max);
            return times;
        }
        const double ratio = std::pow(g.t_max / t0, 1.0 / (n - 1));
        for (int k = 0; k < n; ++k) times.push_back(t0 * std::pow(ratio, k));
        times.back() = g.t_max;  // land exactly
    } else {
        for (int k = 0; k < g.points; ++k) {
            times.push_back(g.t_max * k / (g.points - 1));
        }
    }
    return times;
}

PreparedGenerator prepare_from_json(const json& gj) {
    if (gj.is_null()) throw ConfigError("missing generator");
    const GeneratorSpec spec = generator_from_json(gj);
    return std::holds_alternative<GKSParams>(spec) ? prepare(std::get<GKSParams>(spec))
                                                   : prepare(std::get<YZGenerator>(spec));
}

Mat2 initial_state(const RunConfig& cfg, const PreparedGenerator& gen) {
    switch (cfg.state_kind) {
        case InitialStateKind::MaximallyMixed:
            return 0.5 * Mat2::identity();
        case InitialStateKind::E2Pure: {
            if (gen.yz) return projector(gen.yz->e2);
            // Faithful-absorbing parameter sets have no distinguished frame;
            // use the complement of the top eigenvector of the stationary state.
            return eig_hermitian2(gen.absorbing)[1].projection;
        }
        case InitialStateKind::Explicit:
            if (!is_density_matrix(cfg.explicit_state)) {
                throw ConfigError("initial_state: not a density matrix");
            }
            return cfg.explicit_state;
    }
    throw ConfigError("initial_state: unreachable");
}

void write_output(const RunConfig& cfg, const std::string& content) {
    if (cfg.out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file: " + cfg.out_path);
    out << content;
}

// ---------------------------------------------------------------- evolve

int cmd_evolve(const RunConfig& cfg) {
    validate_common(cfg);
    const PreparedGenerator gen = prepare_from_json(cfg.generator_json);
    const Mat2 rho0 = initial_state(cfg, gen);
    const std::vector<double> times = make_grid(cfg.grid, /*include_zero=*/true);
    const BlochTrajectory traj = evolve_trajectory(gen.superop, rho0, times, gen.id);

    std::ostringstream out;
    if (cfg.format == "csv") {
        out << "t,u1,u2,u3,eig_max,eig_min\n";
        for (std::size_t i = 0; i < traj.times.size(); ++i) {
            const Mat2 rho_t = pauli_compose(traj.states[i]);
            const auto spec = eig_hermitian2(rho_t);
            out << format_double(traj.times[i]) << ',' << format_double(traj.states[i].u[0])
                << ',' << format_double(traj.states[i].u[1]) << ','
                << format_double(traj.states[i].u[2]) << ','
                << format_double(spec[0].eigenvalue) << ','
                << format_double(spec[1].eigenvalue) << '\n';
        }
    } else {
        json rows = json::array();
        for (std::size_t i = 0; i < traj.times.size(); ++i) {
            const auto spec = eig_hermitian2(pauli_compose(traj.states[i]));
            rows.push_back(json::array({traj.times[i], traj.states[i].u[0],
                                        traj.states[i].u[1], traj.states[i].u[2],
                                        spec[0].eigenvalue, spec[1].eigenvalue}));
        }
        json doc{{"generator_id", traj.generator_id},
                 {"columns", {"t", "u1", "u2", "u3", "eig_max", "eig_min"}},
                 {"rows", rows}};
        out << doc.dump(2) << "\n";
    }
    write_output(cfg, out.str());
    return kExitOk;
}

// ------------------------------------------------------------------ rate

json rate_report_to_json(const RateReport& rep) {
    json doc;
    if (rep.predicted_gap) doc["predicted_gap"] = *rep.predicted_gap;
    json series = json::array();
    for (const auto& row : rep.series) series.push_back(json::array({row.t, row.log_rate}));
    doc["series"] = series;
    doc["final_estimate"] = rep.final_estimate;
    if (rep.abs_error) doc["abs_error"] = *rep.abs_error;
    switch (rep.faithful_kind) {
        case RateReport::Faithful::Immediately: doc["faithful_from"] = "immediately"; break;
        case RateReport::Faithful::NeverInWindow: doc["faithful_from"] = "never-in-window"; break;
        case RateReport::Faithful::AtTime: doc["faithful_from"] = rep.faithful_from; break;
    }
    doc["regime"] = rep.trivial_regime ? "trivial-ldp" : "pure-absorbing";
    if (rep.underflow_truncated) doc["underflow_truncated_at"] = rep.underflow_at;
    return doc;
}

int cmd_rate(const RunConfig& cfg) {
    validate_common(cfg);
    const PreparedGenerator gen = prepare_from_json(cfg.generator_json);
    const Mat2 rho0 = initial_state(cfg, gen);
    GridSpec grid = cfg.grid;
    grid.geometric = true;  // rate series need late-time resolution
    const std::vector<double> times = make_grid(grid, /*include_zero=*/false);
    const RateReport rep = empirical_rate(gen, rho0, times);

    std::ostringstream out;
    if (cfg.format == "json") {
        out << rate_report_to_json(rep).dump(2) << "\n";
    } else {
        out << "t,log_rate,eig_min\n";
        for (const auto& row : rep.series) {
            out << format_double(row.t) << ',' << format_double(row.log_rate) << ','
                << format_double(row.eig_min) << '\n';
        }
    }
    write_output(cfg, out.str());

    if (rep.abs_error && !(*rep.abs_error <= 5.0 / cfg.grid.t_max + 1e-6)) {
        emit_error("verification",
                   "empirical rate misses the predicted gap: abs_error = " +
                       format_double(*rep.abs_error));
        return kExitVerification;
    }
    return kExitOk;
}

// ---------------------------------------------------------------- verify

json summary_to_json(const VerifySummary& sum) {
    json checks = json::array();
    for (const auto& c : sum.checks) {
        json jc{{"name", c.name}, {"pass", c.pass}, {"skipped", c.skipped}};
        if (!c.skipped) {
            jc["residual"] = c.residual;
            jc["threshold"] = c.threshold;
        }
        if (!c.note.empty()) jc["note"] = c.note;
        checks.push_back(jc);
    }
    return json{{"checks", checks}, {"all_pass", sum.all_pass()}};
}

int failed_validation(const RunConfig& cfg, const std::string& what) {
    // Semantic invariant failures are a verification outcome, not a config
    // mistake: report them in the summary format.
    VerifySummary sum;
    VerifyCheck c;
    c.name = "validation";
    c.pass = false;
    c.note = what;
    sum.checks.push_back(c);
    write_output(cfg, summary_to_json(sum).dump(2) + "\n");
    return kExitVerification;
}

int cmd_verify(const RunConfig& cfg) {
    PreparedGenerator gen;
    try {
        gen = prepare_from_json(cfg.generator_json);
    } catch (const InvalidGenerator& e) {
        return failed_validation(cfg, e.what());
    } catch (const InvalidParams& e) {
        return failed_validation(cfg, e.what());
    } catch (const NonPositiveGap& e) {
        return failed_validation(cfg, e.what());
    }
    VerifySummary sum = verify_generator(gen);
    VerifyCheck ok;
    ok.name = "validation";
    ok.pass = true;
    sum.checks.insert(sum.checks.begin(), ok);
    write_output(cfg, summary_to_json(sum).dump(2) + "\n");
    return sum.all_pass() ? kExitOk : kExitVerification;
}

// ----------------------------------------------------------------- sweep

struct SweepPoint {
    GKSParams params;
    bool valid{};
    std::string row;  // rendered CSV row (valid points only)
};

int cmd_sweep(const RunConfig& cfg) {
    validate_common(cfg);
    if (cfg.sweep_ranges.is_null()) throw ConfigError("sweep: missing \"sweep\" ranges");

    auto list_of = [&](const char* key, std::vector<double> fallback) {
        if (!cfg.sweep_ranges.contains(key)) return fallback;
        std::vector<double> v = cfg.sweep_ranges[key].get<std::vector<double>>();
        if (v.empty()) throw ConfigError(std::string("sweep: empty range for ") + key);
        std::sort(v.begin(), v.end());
        return v;
    };
    std::vector<double> xis = list_of("xi", {0.0});
    std::vector<double> etas = list_of("eta", {1.0});
    std::vector<double> nus = list_of("nu", {0.0});
    std::vector<Complex> zetas = {Complex(0.0)};
    if (cfg.sweep_ranges.contains("zeta")) {
        zetas.clear();
        for (const auto& zj : cfg.sweep_ranges["zeta"]) zetas.push_back(complex_from_json(zj));
        if (zetas.empty()) throw ConfigError("sweep: empty range for zeta");
        std::sort(zetas.begin(), zetas.end(), [](const Complex& a, const Complex& b) {
            return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
        });
    }

    // Lexicographic point order in (xi, eta, nu, zeta).
    std::vector<SweepPoint> points;
    for (double xi : xis)
        for (double eta : etas)
            for (double nu : nus)
                for (const Complex& zeta : zetas) {
                    points.push_back({GKSParams{xi, eta, nu, zeta}, false, {}});
                }

    GridSpec grid = cfg.grid;
    grid.geometric = true;
    const std::vector<double> times = make_grid(grid, /*include_zero=*/false);

    std::atomic<std::size_t> next{0};
    std::atomic<int> valid_count{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= points.size()) return;
            SweepPoint& pt = points[i];
            if (!is_valid(pt.params)) continue;
            const PreparedGenerator gen = prepare(pt.params);
            const Mat2 rho0 = 0.5 * Mat2::identity();
            double empirical = std::numeric_limits<double>::quiet_NaN();
            try {
                empirical = empirical_rate(gen, rho0, times).final_estimate;
            } catch (const Error&) {
                // leave NaN; the point is still reported
            }
            const double u3_inf = pauli_decompose(gen.absorbing).u[2];
            std::ostringstream row;
            row << format_double(pt.params.xi) << ',' << format_double(pt.params.eta) << ','
                << format_double(pt.params.nu) << ',' << format_double(pt.params.zeta.real())
                << ',' << format_double(pt.params.zeta.imag()) << ','
                << to_string(bloch_case(pt.params)) << ',' << format_double(u3_inf) << ',';
            if (gen.rate) row << format_double(gen.rate->gap);
            row << ',' << format_double(empirical);
            pt.row = row.str();
            pt.valid = true;
            valid_count.fetch_add(1);
        }
    };

    int jobs = cfg.jobs > 0 ? cfg.jobs
                            : static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    jobs = std::min<int>(jobs, static_cast<int>(points.size()));
    std::vector<std::thread> pool;
    for (int i = 1; i < jobs; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    std::ostringstream out;
    out << "xi,eta,nu,zeta_re,zeta_im,case,u3_absorbing,predicted_gap,empirical_rate\n";
    for (const auto& pt : points) {
        if (pt.valid) {
            out << pt.row << '\n';
        } else {
            std::ostringstream log;
            log << "skipped invalid point xi=" << pt.params.xi << " eta=" << pt.params.eta
                << " nu=" << pt.params.nu << " zeta=(" << pt.params.zeta.real() << ","
                << pt.params.zeta.imag() << ")";
            std::cerr << log.str() << "\n";
        }
    }
    if (valid_count.load() == 0) {
        throw ConfigError("sweep: every grid point violates the parameter constraint");
    }
    write_output(cfg, out.str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-level open-system semigroup simulator and decay-rate analyzer"};
    app.require_subcommand(1);

    std::string config_path;
    std::optional<double> t_max_flag;
    std::optional<int> points_flag;
    std::optional<std::string> grid_flag, out_flag, format_flag;
    std::optional<int> jobs_flag;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("config", config_path, "JSON config file")->required();
        cmd->add_option("--t-max", t_max_flag, "Grid end time (overrides config)");
        cmd->add_option("--points", points_flag, "Grid point count (overrides config)");
        cmd->add_option("--grid", grid_flag, "Grid spacing: linear|geometric");
        cmd->add_option("--out", out_flag, "Output path (default stdout)");
        cmd->add_option("--format", format_flag, "Output format: csv|json");
        cmd->add_option("--jobs", jobs_flag, "Worker threads for sweeps");
    };

    CLI::App* evolve = app.add_subcommand("evolve", "Write a Bloch trajectory");
    CLI::App* rate = app.add_subcommand("rate", "Estimate the least-eigenvalue decay rate");
    CLI::App* verify = app.add_subcommand("verify", "Run the structural verification suite");
    CLI::App* sweep = app.add_subcommand("sweep", "Tabulate rates over a parameter grid");
    for (CLI::App* cmd : {evolve, rate, verify, sweep}) add_common(cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        emit_error("config", e.what());
        return kExitConfig;
    }

    try {
        json config = load_json_file(config_path);
        RunConfig cfg = parse_config(config);
        if (t_max_flag) cfg.grid.t_max = *t_max_flag;
        if (points_flag) cfg.grid.points = *points_flag;
        if (grid_flag) {
            if (*grid_flag == "linear") cfg.grid.geometric = false;
            else if (*grid_flag == "geometric") cfg.grid.geometric = true;
            else throw ConfigError("--grid must be linear or geometric");
        }
        if (out_flag) cfg.out_path = *out_flag;
        if (format_flag) cfg.format = *format_flag;
        if (jobs_flag) cfg.jobs = *jobs_flag;

        if (evolve->parsed()) return cmd_evolve(cfg);
        if (rate->parsed()) return cmd_rate(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
        if (sweep->parsed()) return cmd_sweep(cfg);
        emit_error("config", "no subcommand");
        return kExitConfig;
    } catch (const ConfigError& e) {
        emit_error("config", e.what());
        return kExitConfig;
    } catch (const InvalidParams& e) {
        emit_error("config", e.what());
        return kExitConfig;
    } catch (const InvalidGenerator& e) {
        emit_error("config", e.what());
        return kExitConfig;
    } catch (const NonPositiveGap& e) {
        emit_error("config", e.what());
        return kExitConfig;
    } catch (const NotPureAbsorbing& e) {
        emit_error("config", e.what());
        return kExitConfig;
    } catch (const InvalidArgument& e) {
        emit_error("config", e.what());
        return kExitConfig;
    } catch (const DegenerateStart& e) {
        emit_error("config", e.what());
        return kExitConfig;
    } catch (const NonFinite& e) {
        emit_error("numerical", e.what());
        return kExitNumerical;
    } catch (const Error& e) {
        emit_error("numerical", e.what());
        return kExitNumerical;
    } catch (const std::exception& e) {
        emit_error("numerical", e.what());
        return kExitNumerical;
    }
}
