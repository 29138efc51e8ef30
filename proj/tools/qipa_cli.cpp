#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qipa/commands.hpp"

namespace {

std::vector<double> parse_alpha_list(const std::string& csv) {
    std::vector<double> out;
    std::istringstream in(csv);
    std::string token;
    while (std::getline(in, token, ',')) {
        try {
            std::size_t used = 0;
            const double v = std::stod(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            out.push_back(v);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--alphas", "'" + token + "' is not a number");
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "qipa: iteration bounds, exponential-separation criteria, upscaling, and "
        "error blow-up for quantum iterative power algorithms"};
    app.require_subcommand(1);

    qipa::HarnessOptions opt;
    std::string graph_path, spectrum_path, alphas_csv;
    std::string manifest_path, rerun_out;

    CLI::App* analyze = app.add_subcommand(
        "analyze", "Spectrum summary, Eq. (3) conditions, kappa bounds, recommended upscale");
    CLI::App* power = app.add_subcommand(
        "power", "Empirical vs closed-form iterations-to-majority plus kappa bounds");
    CLI::App* compare = app.add_subcommand(
        "compare", "varQITE / QIPA2 trajectories on a graph (Fig. 2-style analogue)");
    CLI::App* scan = app.add_subcommand(
        "error-scan", "Variance and Delta blow-up table over an upscale grid");
    CLI::App* rerun = app.add_subcommand("rerun", "Re-execute a recorded manifest");

    for (CLI::App* cmd : {analyze, power, compare, scan}) {
        cmd->add_option("--out", opt.out, "output directory")->capture_default_str();
        cmd->add_option("--seed", opt.seed, "RNG seed")->capture_default_str();
        cmd->add_option("--alpha", opt.alpha, "upscale factor (>= 1)")->capture_default_str();
        cmd->add_flag("--no-timestamp", opt.no_timestamp, "suppress the SVG timestamp comment");
    }
    for (CLI::App* cmd : {analyze, power}) {
        cmd->add_option("--graph", graph_path, "graph file: text 'u v w' lines or JSON");
        cmd->add_option("--spectrum", spectrum_path,
                        "spectrum file: 'eigenvalue multiplicity' lines or JSON");
        cmd->add_option("--c", opt.c, "constant c of Eq. (3)")->capture_default_str();
        cmd->add_option("--d", opt.d, "constant d of Eq. (3)")->capture_default_str();
        cmd->add_option("--k", opt.k, "constant k of Eq. (3)")->capture_default_str();
    }
    power->add_option("--oracle", opt.oracle, "identity | exp | dexp")
        ->check(CLI::IsMember({"identity", "exp", "dexp"}))
        ->capture_default_str();
    power->add_option("--dt", opt.dt, "oracle step dt")->capture_default_str();
    power->add_option("--max-iter", opt.max_iter, "iteration budget")->capture_default_str();

    for (CLI::App* cmd : {compare, scan}) {
        cmd->add_option("--graph", graph_path, "graph file: text 'u v w' lines or JSON");
        cmd->add_option("--dtau", opt.dtau, "imaginary-time Euler step")->capture_default_str();
        cmd->add_option("--dt", opt.dt, "QIPA2 oracle step")->capture_default_str();
    }
    compare->add_option("--steps", opt.steps, "number of evolution steps")->capture_default_str();
    compare->add_option("--mode", opt.mode, "varqite | qipa2 | both")
        ->check(CLI::IsMember({"varqite", "qipa2", "both"}))
        ->capture_default_str();
    compare->add_option("--layers", opt.layers, "ansatz layers")->capture_default_str();
    compare->add_option("--reg", opt.regularization, "Tikhonov regularization")
        ->capture_default_str();

    scan->add_option("--alphas", alphas_csv, "comma-separated upscale grid, e.g. 1,2,4,8");
    scan->add_option("--state", opt.state, "expectation state: uniform | evolved")
        ->check(CLI::IsMember({"uniform", "evolved"}))
        ->capture_default_str();
    scan->add_option("--tau", opt.tau, "imaginary time for the evolved state")
        ->capture_default_str();

    rerun->add_option("manifest", manifest_path, "manifest.json to re-execute")->required();
    rerun->add_option("--out", rerun_out, "override output directory");

    try {
        app.parse(argc, argv);
        if (!alphas_csv.empty()) opt.alphas = parse_alpha_list(alphas_csv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? qipa::kExitOk : qipa::kExitInputError;
    }

    if (!graph_path.empty()) opt.graph = std::filesystem::path(graph_path);
    if (!spectrum_path.empty()) opt.spectrum = std::filesystem::path(spectrum_path);

    if (analyze->parsed()) return qipa::cmd_analyze(opt);
    if (power->parsed()) return qipa::cmd_power(opt);
    if (compare->parsed()) return qipa::cmd_compare(opt);
    if (scan->parsed()) return qipa::cmd_error_scan(opt);
    if (rerun->parsed())
        return qipa::cmd_rerun(manifest_path, rerun_out.empty()
                                                  ? std::nullopt
                                                  : std::optional<std::filesystem::path>(rerun_out));
    return qipa::kExitInputError;
}
