// Command-line front end: correlation measures for a single X state, model
// parameter sweeps, critical-point tables, and exact-diagonalization
// cross-checks.  Config file format is documented in README.md and
// configs/*.ini.
//
// Exit codes: 0 success, 1 numerical failure, 2 usage/validation error.

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <limits>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "spinchain/cp_detector.hpp"
#include "spinchain/discord.hpp"
#include "spinchain/ed_oracle.hpp"
#include "spinchain/io.hpp"
#include "spinchain/parallel.hpp"
#include "spinchain/xstate.hpp"
#include "spinchain/xxz_model.hpp"
#include "spinchain/xy_model.hpp"

namespace sc = spinchain;

namespace {

struct CommonOpts {
    std::string config_path;
    std::string out_path;
    std::string format = "csv";
    int threads = 0;  // 0 = hardware default
    double tol = 0.0; // 0 = keep config / built-in default
};

unsigned thread_count(const CommonOpts& c) {
    return c.threads > 0 ? static_cast<unsigned>(c.threads) : sc::default_thread_count();
}

std::ostream& open_output(const CommonOpts& c, std::ofstream& file) {
    if (c.out_path.empty()) return std::cout;
    file.open(c.out_path);
    if (!file) throw std::runtime_error("cannot open output file: " + c.out_path);
    return file;
}

sc::NLIEConfig solver_config(const sc::ConfigFile& cfg, const CommonOpts& common) {
    sc::NLIEConfig s;
    s.grid_points = cfg.get_int("solver.grid_points", 0);
    s.domain_half_width = cfg.get_double("solver.domain_half_width", 0.0);
    s.tol = cfg.get_double("solver.tol", 1e-12);
    s.max_iter = cfg.get_int("solver.max_iter", 20000);
    s.damping = cfg.get_double("solver.damping", 0.5);
    s.strip_eps = cfg.get_double("solver.strip_eps", 1e-6);
    if (common.tol > 0.0) s.tol = common.tol;
    return s;
}

struct SweepSetup {
    std::string model;           // "xxz" or "xy"
    std::string axis;            // delta | lambda | gamma
    std::vector<double> grid;
    std::vector<double> kTs;
    std::vector<sc::Quantity> quantities;
    int neighbor = 1;            // XY neighbor separation
    // fixed parameters
    double j_coupling = 1.0, delta = 1.0, h_field = 0.0, lambda = 1.0, gamma = 1.0;
    sc::NLIEConfig solver;
};

SweepSetup read_sweep_setup(const sc::ConfigFile& cfg, const CommonOpts& common) {
    SweepSetup s;
    s.model = cfg.get("model.type");
    if (s.model != "xxz" && s.model != "xy")
        throw std::invalid_argument("model.type must be xxz or xy");
    s.j_coupling = cfg.get_double("model.j", 1.0);
    s.delta = cfg.get_double("model.delta", 1.0);
    s.h_field = cfg.get_double("model.h", 0.0);
    s.lambda = cfg.get_double("model.lambda", 1.0);
    s.gamma = cfg.get_double("model.gamma", 1.0);
    s.neighbor = cfg.get_int("model.neighbor", 1);
    s.axis = cfg.get("sweep.axis");
    double lo = cfg.get_double("sweep.min");
    double hi = cfg.get_double("sweep.max");
    double step = cfg.get_double("sweep.step", 0.005);
    if (!(lo < hi) || !(step > 0.0))
        throw std::invalid_argument("sweep grid must be non-empty and increasing");
    s.grid = sc::uniform_grid(lo, hi, step);
    s.kTs = cfg.get_double_list("sweep.kT");
    if (s.kTs.empty()) throw std::invalid_argument("sweep.kT must list at least one temperature");
    for (const std::string& name : sc::split(cfg.get("sweep.quantities"), ',')) {
        if (name.empty()) continue;
        sc::Quantity q;
        if (!sc::parse_quantity(name, q))
            throw std::invalid_argument("unknown quantity: " + name);
        s.quantities.push_back(q);
    }
    if (s.quantities.empty()) throw std::invalid_argument("sweep.quantities is empty");
    s.solver = solver_config(cfg, common);
    return s;
}

bool wants_thermo(const std::vector<sc::Quantity>& qs) {
    for (sc::Quantity q : qs)
        if (q == sc::Quantity::SpecificHeat || q == sc::Quantity::Susceptibility) return true;
    return false;
}

// Builds the per-temperature model evaluator the detector consumes.
sc::ModelEval make_eval(const SweepSetup& s, double kT, bool extended) {
    double beta = 1.0 / kT;
    if (s.model == "xxz") {
        if (s.axis != "delta")
            throw std::invalid_argument("xxz sweeps support axis = delta");
        SweepSetup copy = s;
        return [copy, beta, extended](double tuning) {
            sc::XXZParams p;
            p.j_coupling = copy.j_coupling;
            p.delta = tuning;
            p.h_field = copy.h_field;
            p.beta = beta;
            sc::XXZObservables o = sc::xxz_observables(p, copy.solver, extended);
            sc::ModelPoint m;
            m.state.rho11 = 0.25 * (1.0 + 2.0 * o.sz + o.szsz);
            m.state.rho22 = 0.25 * (1.0 - o.szsz);
            m.state.rho44 = 0.25 * (1.0 - 2.0 * o.sz + o.szsz);
            m.state.rho23 = 0.5 * o.sxsx;
            m.state.rho14 = 0.0;
            m.sz = o.sz;
            m.sxsx = o.sxsx;
            m.szsz = o.szsz;
            m.entropy = o.entropy;
            m.specific_heat = o.specific_heat;
            m.susceptibility = o.susceptibility;
            return m;
        };
    }
    if (s.axis != "lambda" && s.axis != "gamma")
        throw std::invalid_argument("xy sweeps support axis = lambda or gamma");
    SweepSetup copy = s;
    return [copy, beta](double tuning) {
        sc::XYParams p;
        p.lambda = copy.axis == "lambda" ? tuning : copy.lambda;
        p.gamma = copy.axis == "gamma" ? tuning : copy.gamma;
        p.beta = beta;
        sc::XYThermal model(p);
        sc::PairObservables o = model.observables(copy.neighbor);
        sc::ModelPoint m;
        m.state = model.pair_state(copy.neighbor);
        m.sz = o.sz;
        m.sxsx = o.sxsx;
        m.szsz = o.szsz;
        return m;
    };
}

int cmd_discord(const std::vector<double>& elems, const std::string& state_file) {
    std::vector<double> e = elems;
    if (!state_file.empty()) {
        std::ifstream in(state_file);
        if (!in) {
            std::cerr << "error: cannot open state file: " << state_file << "\n";
            return 2;
        }
        e.assign(5, 0.0);
        for (double& v : e)
            if (!(in >> v)) {
                std::cerr << "error: state file must contain 5 numbers "
                             "(rho11 rho22 rho44 rho23 rho14)\n";
                return 2;
            }
    }
    for (double v : e)
        if (!std::isfinite(v)) {
            std::cerr << "error: need --state FILE or all of "
                         "--rho11 --rho22 --rho44 --rho23 --rho14\n";
            return 2;
        }
    sc::XState s{e[0], e[1], e[2], e[3], e[4]};
    if (auto why = s.invalid_reason()) {
        std::cerr << "error: invalid X state: " << *why << "\n";
        return 2;
    }
    sc::CorrelationReport r = sc::correlation_report(s);
    std::cout << "discord " << sc::format_double(r.discord) << "\n"
              << "eof " << sc::format_double(r.eof) << "\n"
              << "concurrence " << sc::format_double(r.concurrence) << "\n"
              << "conditional_entropy " << sc::format_double(r.conditional_entropy) << "\n"
              << "branch " << sc::to_string(r.minimizer_branch) << "\n";
    return 0;
}

int cmd_sweep(const CommonOpts& common) {
    sc::ConfigFile cfg = sc::ConfigFile::parse_file(common.config_path);
    SweepSetup setup = read_sweep_setup(cfg, common);
    bool extended = wants_thermo(setup.quantities);
    unsigned threads = thread_count(common);

    // Deterministic row order: tuning-major, then kT, then quantity name.
    std::vector<sc::Quantity> sorted_q = setup.quantities;
    std::sort(sorted_q.begin(), sorted_q.end(), [](sc::Quantity a, sc::Quantity b) {
        return std::string(sc::to_string(a)) < sc::to_string(b);
    });

    std::atomic<bool> any_failure{false};
    // curves[kT index][quantity index]
    std::vector<std::vector<sc::SweepCurve>> curves;
    for (double kT : setup.kTs) {
        sc::ModelEval eval = make_eval(setup, kT, extended);
        // Per-point failures must not lose the rest of the sweep: evaluate
        // with a NaN fallback.
        sc::ModelEval guarded = [eval, &any_failure](double x) {
            try {
                return eval(x);
            } catch (const std::exception&) {
                any_failure.store(true);
                sc::ModelPoint m;
                double nan = std::numeric_limits<double>::quiet_NaN();
                m.state = sc::XState{nan, nan, nan, nan, nan};
                return m;
            }
        };
        curves.push_back(sc::sweep(guarded, setup.grid, sorted_q, kT, threads));
    }

    std::vector<sc::SweepRow> rows;
    for (std::size_t gi = 0; gi < setup.grid.size(); ++gi)
        for (std::size_t ti = 0; ti < setup.kTs.size(); ++ti)
            for (std::size_t qi = 0; qi < sorted_q.size(); ++qi) {
                const sc::SweepCurve& c = curves[ti][qi];
                sc::SweepRow r;
                r.tuning = setup.grid[gi];
                r.kT = setup.kTs[ti];
                r.quantity = sc::to_string(c.tag);
                r.value = c.values[gi];
                if (c.tag == sc::Quantity::TQD && !std::isnan(c.values[gi]))
                    r.branch = sc::to_string(c.branch[gi]);
                if (std::isnan(r.value)) any_failure = true;
                rows.push_back(r);
            }

    std::ofstream file;
    std::ostream& out = open_output(common, file);
    if (common.format == "csv")
        sc::write_sweep_csv(out, rows);
    else
        sc::write_sweep_jsonl(out, rows);
    return any_failure.load() ? 1 : 0;
}

int cmd_cp(const CommonOpts& common) {
    sc::ConfigFile cfg = sc::ConfigFile::parse_file(common.config_path);
    std::ofstream file;

    if (cfg.get_bool("cp.table_mode", false)) {
        // Exact zero-temperature formulas, no NLIE.
        std::vector<sc::CPRow> rows;
        double j = cfg.get_double("model.j", 1.0);
        for (double h : cfg.get_double_list("cp.h")) {
            rows.push_back({0.0, "exact-first-order", "Formula",
                            sc::critical_point_first_order(h, j), 0.0});
            rows.push_back({0.0, "exact-infinite-order", "Formula",
                            sc::critical_point_infinite_order(h, j), 0.0});
        }
        std::ostream& out = open_output(common, file);
        if (common.format == "csv")
            sc::write_cp_csv(out, rows);
        else
            sc::write_cp_jsonl(out, rows);
        return 0;
    }

    SweepSetup setup = read_sweep_setup(cfg, common);
    int order = cfg.get_int("cp.order", 1);
    bool refine = cfg.get_bool("cp.refine", true);
    double wlo = cfg.get_double("cp.window_min", setup.grid.front());
    double whi = cfg.get_double("cp.window_max", setup.grid.back());
    unsigned threads = thread_count(common);

    auto model_at = [&](double kT) { return make_eval(setup, kT, wants_thermo(setup.quantities)); };
    std::vector<sc::CPTableRow> table =
        sc::cp_vs_temperature(model_at, setup.quantities, setup.kTs, wlo, whi,
                              setup.grid.size() > 1 ? setup.grid[1] - setup.grid[0] : 0.005,
                              order, refine, threads);
    std::vector<sc::CPRow> rows;
    for (const sc::CPTableRow& t : table) {
        sc::CPRow r;
        r.kT = t.kT;
        r.estimator = t.estimator;
        if (t.estimate.valid) {
            r.method = sc::to_string(t.estimate.method);
            r.location = t.estimate.location;
            r.uncertainty = t.estimate.uncertainty;
        } else {
            r.method = "no-estimate";
            r.location = std::numeric_limits<double>::quiet_NaN();
            r.uncertainty = std::numeric_limits<double>::quiet_NaN();
        }
        rows.push_back(r);
    }
    std::ostream& out = open_output(common, file);
    if (common.format == "csv")
        sc::write_cp_csv(out, rows);
    else
        sc::write_cp_jsonl(out, rows);
    return 0;
}

int cmd_oracle(const CommonOpts& common) {
    sc::ConfigFile cfg = sc::ConfigFile::parse_file(common.config_path);
    std::string model = cfg.get("model.type");
    int L = cfg.get_int("oracle.L", 10);
    if (L < 4 || L > 12) {
        std::cerr << "error: oracle.L must be in [4, 12]\n";
        return 2;
    }
    double kT = cfg.get_double("oracle.kT");
    double beta = 1.0 / kT;
    double bound = cfg.get_double("oracle.bound", 5e-3);

    struct Line { std::string name; double limit, ed; };
    std::vector<Line> lines;
    if (model == "xy") {
        sc::XYParams p;
        p.lambda = cfg.get_double("model.lambda", 1.0);
        p.gamma = cfg.get_double("model.gamma", 1.0);
        p.beta = beta;
        int k = cfg.get_int("model.neighbor", 1);
        sc::XYThermal th(p);
        sc::PairObservables a = th.observables(k);
        sc::ThermalRing ring(L, sc::build_hamiltonian_xy(L, p.lambda, p.gamma));
        sc::PairObservables b = ring.pair_observables(0, k, beta);
        lines = {{"sz", a.sz, b.sz},
                 {"sxsx", a.sxsx, b.sxsx},
                 {"sysy", a.sysy, b.sysy},
                 {"szsz", a.szsz, b.szsz}};
    } else if (model == "xxz") {
        sc::XXZParams p;
        p.j_coupling = cfg.get_double("model.j", 1.0);
        p.delta = cfg.get_double("model.delta", 1.0);
        p.h_field = cfg.get_double("model.h", 0.0);
        p.beta = beta;
        sc::NLIEConfig solver = solver_config(cfg, common);
        sc::XXZObservables a = sc::xxz_observables(p, solver);
        sc::ThermalRing ring(L, sc::build_hamiltonian_xxz(L, p.j_coupling, p.delta, p.h_field));
        sc::PairObservables b = ring.pair_observables(0, 1, beta);
        double f_ed = ring.free_energy_per_site(beta);
        lines = {{"f", a.free_energy, f_ed},
                 {"sz", a.sz, b.sz},
                 {"szsz", a.szsz, b.szsz},
                 {"sxsx", a.sxsx, b.sxsx}};
    } else {
        std::cerr << "error: model.type must be xxz or xy\n";
        return 2;
    }

    std::ofstream file;
    std::ostream& out = open_output(common, file);
    bool exceeded = false;
    out << "observable,limit,ed,abs_diff\n";
    for (const Line& l : lines) {
        double d = std::abs(l.limit - l.ed);
        if (d > bound) exceeded = true;
        out << l.name << ',' << sc::format_double(l.limit) << ',' << sc::format_double(l.ed)
            << ',' << sc::format_double(d) << '\n';
    }
    out << "# bound " << sc::format_double(bound) << (exceeded ? " EXCEEDED" : " ok") << '\n';
    return exceeded ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Thermal quantum correlations in XXZ and XY spin chains"};
    app.require_subcommand(1);

    CommonOpts common;
    std::vector<double> state_elems(5, std::numeric_limits<double>::quiet_NaN());
    std::string state_file;

    auto add_common = [&](CLI::App* sub, bool needs_config) {
        auto* opt = sub->add_option("--config", common.config_path, "config file path");
        if (needs_config) opt->required();
        sub->add_option("--out", common.out_path, "output file (default: stdout)");
        sub->add_option("--format", common.format, "csv | jsonl")
            ->check(CLI::IsMember({"csv", "jsonl"}));
        sub->add_option("--threads", common.threads, "worker threads (default: hardware)");
        sub->add_option("--tol", common.tol, "override NLIE solver tolerance");
    };

    CLI::App* discord = app.add_subcommand("discord", "correlation measures for one X state");
    const char* elem_names[5] = {"--rho11", "--rho22", "--rho44", "--rho23", "--rho14"};
    const char* elem_help[5] = {"population rho11", "population rho22 (= rho33)",
                                "population rho44", "coherence rho23", "coherence rho14"};
    for (int i = 0; i < 5; ++i)
        discord->add_option_function<double>(
            elem_names[i],
            [&state_elems, i](const double& v) { state_elems[static_cast<std::size_t>(i)] = v; },
            elem_help[i]);
    discord->add_option("--state", state_file, "file with rho11 rho22 rho44 rho23 rho14");

    CLI::App* sweep = app.add_subcommand("sweep", "parameter sweep to CSV/JSONL");
    add_common(sweep, true);
    CLI::App* cp = app.add_subcommand("cp", "critical-point estimate table");
    add_common(cp, true);
    CLI::App* oracle = app.add_subcommand("oracle", "thermodynamic limit vs exact diagonalization");
    add_common(oracle, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (discord->parsed()) return cmd_discord(state_elems, state_file);
        if (sweep->parsed()) return cmd_sweep(common);
        if (cp->parsed()) return cmd_cp(common);
        return cmd_oracle(common);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 1;
    }
}
