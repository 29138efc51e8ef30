#include "qipa/commands.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "json.hpp"

#include "qipa/error_model.hpp"
#include "qipa/format.hpp"
#include "qipa/graph_io.hpp"
#include "qipa/ising.hpp"
#include "qipa/power_iteration.hpp"
#include "qipa/separation.hpp"
#include "qipa/svg_plot.hpp"
#include "qipa/variational.hpp"

namespace qipa {

namespace {

using ordered_json = nlohmann::ordered_json;

int guard(const std::function<int()>& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
}

void write_json(const std::filesystem::path& path, const ordered_json& doc) {
    atomic_write(path, doc.dump(2) + "\n");
}

ordered_json config_json(const HarnessOptions& o) {
    ordered_json cfg;
    cfg["alpha"] = o.alpha;
    cfg["alphas"] = o.alphas;
    cfg["dtau"] = o.dtau;
    cfg["dt"] = o.dt;
    cfg["steps"] = o.steps;
    cfg["seed"] = o.seed;
    cfg["c"] = o.c;
    cfg["d"] = o.d;
    cfg["k"] = o.k;
    cfg["mode"] = o.mode;
    cfg["oracle"] = o.oracle;
    cfg["max_iter"] = o.max_iter;
    cfg["state"] = o.state;
    cfg["tau"] = o.tau;
    cfg["layers"] = o.layers;
    cfg["regularization"] = o.regularization;
    cfg["no_timestamp"] = o.no_timestamp;
    return cfg;
}

// The manifest is written last, next to the outputs it describes; cmd_rerun
// reconstructs the options from it. Input paths are recorded as given, so a
// rerun resolves them against the same working directory.
void write_manifest(const std::string& command, const HarnessOptions& o,
                    const std::vector<std::string>& outputs) {
    ordered_json m;
    m["schema"] = 1;
    m["tool"] = "qipa";
    m["version"] = kToolVersion;
    m["command"] = command;
    ordered_json inputs = ordered_json::object();
    if (o.graph) inputs["graph"] = o.graph->string();
    if (o.spectrum) inputs["spectrum"] = o.spectrum->string();
    m["inputs"] = inputs;
    m["config"] = config_json(o);
    m["outputs"] = outputs;
    write_json(o.out / "manifest.json", m);
}

OracleFunction parse_oracle(const std::string& name, double dt) {
    if (name == "identity") return OracleFunction::identity();
    if (name == "exp") return OracleFunction::exponential(dt);
    if (name == "dexp") return OracleFunction::double_exponential(dt);
    throw std::invalid_argument("unknown oracle '" + name + "' (identity | exp | dexp)");
}

struct ProblemSpectrum {
    int n = 0;
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    Spectrum levels;  // maximization-normalized
    std::optional<SpectrumSummary> summary;  // present for graph input
};

// Graph inputs go through the Ising encoding and the maximization shift;
// spectrum files are taken as already maximization-normalized. --alpha scales
// either form.
ProblemSpectrum load_problem(const HarnessOptions& o) {
    if (o.graph && o.spectrum)
        throw std::invalid_argument("give either --graph or --spectrum, not both");
    ProblemSpectrum ps;
    if (o.graph) {
        IsingHamiltonian H = build_maxcut_hamiltonian(load_graph(*o.graph));
        if (o.alpha != 1.0) H = upscale(H, o.alpha);
        ps.summary = brute_force_spectrum(H);
        ps.levels = maximization_spectrum(H);
        ps.n = H.num_qubits;
        ps.lambda1 = ps.summary->lambda1;
        ps.lambda2 = ps.summary->lambda2;
    } else if (o.spectrum) {
        ps.levels = load_spectrum(*o.spectrum);
        if (o.alpha != 1.0) {
            if (o.alpha < 1.0) throw std::invalid_argument("upscale factor must be >= 1");
            for (auto& [ev, mult] : ps.levels) ev *= o.alpha;
        }
        const SpectralPopulation pop = init_uniform_population(ps.levels);
        if (pop.levels.size() < 2)
            throw std::invalid_argument("spectrum needs at least two distinct levels");
        ps.n = pop.num_qubits;
        ps.lambda1 = pop.levels[0].eigenvalue;
        ps.lambda2 = pop.levels[1].eigenvalue;
    } else {
        throw std::invalid_argument("--graph or --spectrum is required");
    }
    return ps;
}

ordered_json conditions_json(const ConditionReport& r) {
    ordered_json j;
    j["ordering"] = r.ordering;
    j["ineq_varqite_exponential"] = r.ineq_varqite_exponential;
    j["ineq_qipa_polynomial"] = r.ineq_qipa_polynomial;
    j["cond_I"] = r.cond_I;
    j["cond_II"] = r.cond_II;
    j["cond_III"] = r.cond_III;
    j["separated"] = r.separated;
    return j;
}

ordered_json kappa_json(const IterationBoundEstimate& k) {
    return ordered_json{{"varqite", k.kappa_varqite}, {"qipa2", k.kappa_qipa2}};
}

std::string trajectory_csv(const std::vector<TrajectoryStep>& traj) {
    std::string out = "step,time,energy,solution_prob,step_error,bures_cum,bures_exact\n";
    for (const TrajectoryStep& r : traj) {
        out += std::to_string(r.step);
        out += ',';
        out += format_double(r.time);
        out += ',';
        out += format_double(r.energy);
        out += ',';
        out += format_double(r.solution_prob);
        out += ',';
        out += format_double(r.step_error);
        out += ',';
        out += format_double(r.bures_cum);
        out += ',';
        out += format_double(r.bures_exact);
        out += '\n';
    }
    return out;
}

// First step whose energy is within 2% of ground; -1 when never reached.
int steps_to_within(const std::vector<TrajectoryStep>& traj, double ground) {
    const double band = 0.02 * std::abs(ground);
    for (const TrajectoryStep& r : traj)
        if (!r.diverged && std::abs(r.energy - ground) <= band) return r.step;
    return -1;
}

}  // namespace

void atomic_write(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw std::runtime_error("short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

int cmd_analyze(const HarnessOptions& o) {
    return guard([&]() {
        std::filesystem::create_directories(o.out);
        const ProblemSpectrum ps = load_problem(o);
        const SeparationConstants consts{o.c, o.d, o.k};

        const ConditionReport before = check_inequality_system(ps.n, ps.lambda1, ps.lambda2, consts);
        const IterationBoundEstimate kappa = kappa_bounds(ps.n, ps.lambda1, ps.lambda2);
        const double gap = ps.lambda1 - ps.lambda2;
        const double rec = minimal_upscale_alpha(gap, ps.n, consts);
        const ConditionReport after =
            check_inequality_system(ps.n, rec * ps.lambda1, rec * ps.lambda2, consts);
        const IterationBoundEstimate kappa_after =
            kappa_bounds(ps.n, rec * ps.lambda1, rec * ps.lambda2);

        ordered_json rep;
        rep["schema"] = 1;
        rep["command"] = "analyze";
        rep["constants"] = ordered_json{{"c", o.c}, {"d", o.d}, {"k", o.k}};
        rep["n"] = ps.n;
        ordered_json spec;
        spec["lambda1"] = ps.lambda1;
        spec["lambda2"] = ps.lambda2;
        spec["absolute_gap"] = gap;
        spec["ratio"] = ps.lambda1 / ps.lambda2;
        if (ps.summary) {
            spec["ground_energy"] = ps.summary->ground_energy;
            spec["ground_degeneracy"] = ps.summary->ground_degeneracy;
            spec["ground_states"] = ps.summary->ground_states;
            spec["runner_up_energy"] = ps.summary->runner_up_energy;
            spec["shift"] = ps.summary->shift;
            spec["ratio"] = ps.summary->ratio;
        }
        rep["spectrum"] = spec;
        rep["conditions"] = conditions_json(before);
        rep["bounds"] = ordered_json{{"lambda1_lower", lambda1_lower_bound(ps.n, consts)},
                                     {"lambda2_lower", lambda2_lower_bound(ps.n, consts)}};
        rep["kappa"] = kappa_json(kappa);
        rep["recommended_alpha"] = rec;
        rep["kappa_after_upscale"] = kappa_json(kappa_after);
        rep["conditions_after_upscale"] = conditions_json(after);

        write_json(o.out / "report.json", rep);
        write_manifest("analyze", o, {"report.json"});
        return kExitOk;
    });
}

int cmd_power(const HarnessOptions& o) {
    return guard([&]() {
        std::filesystem::create_directories(o.out);
        const ProblemSpectrum ps = load_problem(o);
        const OracleFunction f = parse_oracle(o.oracle, o.dt);

        const MajorityResult emp = iterations_to_majority(ps.levels, f, o.max_iter);
        const int closed = closed_form_majority_count(ps.n, ps.lambda1, ps.lambda2, f);
        const IterationBoundEstimate kappa = kappa_bounds(ps.n, ps.lambda1, ps.lambda2);

        ordered_json rep;
        rep["schema"] = 1;
        rep["command"] = "power";
        rep["oracle"] = f.name();
        rep["dt"] = o.dt;
        rep["n"] = ps.n;
        rep["lambda1"] = ps.lambda1;
        rep["lambda2"] = ps.lambda2;
        rep["empirical_iterations"] = emp.iterations;
        rep["status"] = emp.budget_exceeded ? "budget_exceeded" : "ok";
        rep["max_iter"] = o.max_iter;
        // Exact only when the rest of the spectrum is one degenerate level.
        rep["closed_form_iterations_degenerate_model"] = closed;
        rep["kappa"] = kappa_json(kappa);

        write_json(o.out / "report.json", rep);
        write_manifest("power", o, {"report.json"});
        return emp.budget_exceeded ? kExitBudgetExceeded : kExitOk;
    });
}

int cmd_compare(const HarnessOptions& o) {
    return guard([&]() {
        std::filesystem::create_directories(o.out);
        if (!o.graph) throw std::invalid_argument("compare needs --graph");
        if (o.mode != "varqite" && o.mode != "qipa2" && o.mode != "both")
            throw std::invalid_argument("mode must be varqite, qipa2, or both");

        IsingHamiltonian H = build_maxcut_hamiltonian(load_graph(*o.graph));
        if (o.alpha != 1.0) H = upscale(H, o.alpha);
        const SpectrumSummary summary = brute_force_spectrum(H);

        AnsatzSpec ansatz;
        ansatz.num_qubits = H.num_qubits;
        ansatz.layers = o.layers;
        const std::vector<double> theta0 = initial_parameters(ansatz, o.seed);

        EvolutionConfig cfg;
        cfg.delta_tau = o.dtau;
        cfg.delta_t = o.dt;
        cfg.num_steps = o.steps;
        cfg.regularization = o.regularization;
        cfg.seed = o.seed;

        std::vector<std::pair<std::string, EvolutionMode>> modes;
        if (o.mode == "varqite" || o.mode == "both") modes.emplace_back("varqite", EvolutionMode::VarQITE);
        if (o.mode == "qipa2" || o.mode == "both") modes.emplace_back("qipa2", EvolutionMode::QIPA2);

        ordered_json rep;
        rep["schema"] = 1;
        rep["command"] = "compare";
        rep["alpha"] = o.alpha;
        rep["n"] = H.num_qubits;
        rep["ground_energy"] = summary.ground_energy;
        rep["target_energy_2pct"] = summary.ground_energy + 0.02 * std::abs(summary.ground_energy);
        ordered_json mode_blocks = ordered_json::object();

        std::vector<PlotSeries> curves;
        std::vector<std::string> outputs;
        for (const auto& [name, mode] : modes) {
            cfg.mode = mode;
            const std::vector<TrajectoryStep> traj =
                run_evolution(diagonal_observable(H), summary.ground_states, ansatz, cfg, theta0);

            const std::string csv_name = name + ".csv";
            atomic_write(o.out / csv_name, trajectory_csv(traj));
            outputs.push_back(csv_name);

            PlotSeries series;
            series.label = name;
            for (const TrajectoryStep& r : traj)
                if (!r.diverged) series.points.emplace_back(r.step, r.energy);
            curves.push_back(std::move(series));

            ordered_json blk;
            blk["csv"] = csv_name;
            blk["steps_to_2pct"] = steps_to_within(traj, summary.ground_energy);
            if (!traj.empty() && !traj.back().diverged) {
                blk["final_energy"] = traj.back().energy;
                blk["final_solution_prob"] = traj.back().solution_prob;
                blk["bures_cum_final"] = traj.back().bures_cum;
                blk["bures_exact_final"] = traj.back().bures_exact;
            }
            blk["diverged"] = !traj.empty() && traj.back().diverged;
            mode_blocks[name] = blk;
        }
        rep["modes"] = mode_blocks;

        PlotSpec plot;
        plot.title = "energy vs step (alpha=" + format_double(o.alpha) + ")";
        plot.x_label = "step";
        plot.y_label = "energy";
        plot.timestamp = !o.no_timestamp;
        atomic_write(o.out / "compare.svg", render_line_plot(plot, curves));
        outputs.push_back("compare.svg");

        write_json(o.out / "summary.json", rep);
        outputs.push_back("summary.json");
        write_manifest("compare", o, outputs);
        return kExitOk;
    });
}

int cmd_error_scan(const HarnessOptions& o) {
    return guard([&]() {
        std::filesystem::create_directories(o.out);
        if (!o.graph) throw std::invalid_argument("error-scan needs --graph");
        if (o.state != "uniform" && o.state != "evolved")
            throw std::invalid_argument("state must be uniform or evolved");

        const IsingHamiltonian H = build_maxcut_hamiltonian(load_graph(*o.graph));
        StateVector state = uniform_state(H.num_qubits);
        if (o.state == "evolved") state = exact_imaginary_evolution(H, state, o.tau);

        const std::vector<double> alphas = o.alphas.empty() ? std::vector<double>{o.alpha} : o.alphas;
        const std::vector<BlowupRow> rows = alpha_blowup_scan(H, state, alphas, o.dt, o.dtau);

        std::string csv = "alpha,var,delta,qipa_floor,dt_used\n";
        PlotSeries var_series{"var", "", {}};
        PlotSeries delta_series{"delta", "", {}};
        for (const BlowupRow& r : rows) {
            csv += format_double(r.alpha);
            csv += ',';
            csv += format_double(r.var);
            csv += ',';
            csv += format_double(r.delta);
            csv += ',';
            csv += format_double(r.qipa_floor);
            csv += ',';
            csv += format_double(r.dt_used);
            csv += '\n';
            var_series.points.emplace_back(r.alpha, r.var);
            delta_series.points.emplace_back(r.alpha, r.delta);
        }
        atomic_write(o.out / "scan.csv", csv);

        PlotSpec plot;
        plot.title = "error blow-up under upscaling";
        plot.x_label = "alpha";
        plot.y_label = "value (log scale)";
        plot.log_y = true;
        plot.timestamp = !o.no_timestamp;
        atomic_write(o.out / "scan.svg", render_line_plot(plot, {var_series, delta_series}));

        write_manifest("error-scan", o, {"scan.csv", "scan.svg"});
        return kExitOk;
    });
}

int cmd_rerun(const std::filesystem::path& manifest_file,
              const std::optional<std::filesystem::path>& out_override) {
    return guard([&]() {
        std::ifstream in(manifest_file);
        if (!in) throw std::invalid_argument("cannot open manifest " + manifest_file.string());
        ordered_json m;
        try {
            m = ordered_json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument(std::string("bad manifest: ") + e.what());
        }
        if (m.value("schema", 0) != 1 || m.value("tool", "") != "qipa")
            throw std::invalid_argument("not a qipa manifest");

        HarnessOptions o;
        const auto& inputs = m.at("inputs");
        if (inputs.contains("graph")) o.graph = std::filesystem::path(inputs["graph"].get<std::string>());
        if (inputs.contains("spectrum"))
            o.spectrum = std::filesystem::path(inputs["spectrum"].get<std::string>());

        const auto& cfg = m.at("config");
        o.alpha = cfg.value("alpha", o.alpha);
        o.alphas = cfg.value("alphas", o.alphas);
        o.dtau = cfg.value("dtau", o.dtau);
        o.dt = cfg.value("dt", o.dt);
        o.steps = cfg.value("steps", o.steps);
        o.seed = cfg.value("seed", o.seed);
        o.c = cfg.value("c", o.c);
        o.d = cfg.value("d", o.d);
        o.k = cfg.value("k", o.k);
        o.mode = cfg.value("mode", o.mode);
        o.oracle = cfg.value("oracle", o.oracle);
        o.max_iter = cfg.value("max_iter", o.max_iter);
        o.state = cfg.value("state", o.state);
        o.tau = cfg.value("tau", o.tau);
        o.layers = cfg.value("layers", o.layers);
        o.regularization = cfg.value("regularization", o.regularization);
        o.no_timestamp = cfg.value("no_timestamp", o.no_timestamp);
        o.out = out_override ? *out_override
                             : (manifest_file.has_parent_path() ? manifest_file.parent_path()
                                                                : std::filesystem::path("."));

        const std::string command = m.value("command", "");
        if (command == "analyze") return cmd_analyze(o);
        if (command == "power") return cmd_power(o);
        if (command == "compare") return cmd_compare(o);
        if (command == "error-scan") return cmd_error_scan(o);
        throw std::invalid_argument("unknown command '" + command + "' in manifest");
    });
}

}  // namespace qipa
