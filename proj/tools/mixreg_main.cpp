// mixreg command-line front end: batch experiments, single restorations, and
// data-driven weight construction.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <optional>

#include "mixreg/csv_io.hpp"
#include "mixreg/errors.hpp"
#include "mixreg/experiments.hpp"
#include "mixreg/theta_builder.hpp"

namespace {

std::vector<std::uint64_t> parse_seed_list(const std::string& csv) {
    std::vector<std::uint64_t> seeds;
    std::string token;
    std::istringstream ss(csv);
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        seeds.push_back(std::stoull(token));
    }
    if (seeds.empty()) throw mixreg::Error("--seeds: no seeds given");
    return seeds;
}

mixreg::WeightField theta_from_arg(const std::string& arg, const mixreg::Grid& grid,
                                   const mixreg::Signal& v, const mixreg::BlurOperator& op,
                                   const mixreg::MorozovSpec& morozov, double sigma_smooth) {
    if (arg == "auto") {
        const auto built = mixreg::build_data_driven(v, op, sigma_smooth, morozov);
        if (built.degenerate) {
            std::cerr << "warning: flat Tikhonov pre-solve, theta set to 0 everywhere\n";
        }
        return built.theta;
    }
    if (arg.rfind("binary:", 0) == 0) {
        const auto spec = arg.substr(7);
        const auto comma = spec.find(',');
        if (comma == std::string::npos) {
            throw mixreg::Error("--theta binary:a,b expects two endpoints");
        }
        return mixreg::build_binary(grid, std::stod(spec.substr(0, comma)),
                                    std::stod(spec.substr(comma + 1)));
    }
    mixreg::WeightField theta = mixreg::read_theta_csv(arg);
    if (!(theta.grid == grid)) {
        throw mixreg::Error("--theta csv grid does not match the input signal grid");
    }
    return theta;
}

int run_command(const std::string& config_path, const std::optional<std::string>& out_dir,
                const std::optional<std::string>& seeds, bool no_plots) {
    mixreg::ExperimentConfig cfg = mixreg::load_config(config_path);
    if (out_dir) cfg.output_dir = *out_dir;
    if (seeds) cfg.seeds = parse_seed_list(*seeds);

    const auto results = mixreg::run_experiment(cfg);
    if (!no_plots) mixreg::emit_plots(results, cfg);

    int failures = 0;
    for (const auto& r : results) {
        if (r.status == "ok") {
            std::printf("seed %llu  %-18s alpha %-12.4e isnr %8.4f dB  (%d iters)\n",
                        static_cast<unsigned long long>(r.seed), mixreg::method_name(r.method),
                        r.alpha, r.isnr, r.iterations);
        } else {
            ++failures;
            std::printf("seed %llu  %-18s FAILED: %s\n",
                        static_cast<unsigned long long>(r.seed), mixreg::method_name(r.method),
                        r.status.c_str());
        }
    }
    std::printf("summary: %s/summary.csv\n", cfg.output_dir.c_str());
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mixreg: 1D deblurring with spatially mixed L2 / total-variation regularization"};
    app.require_subcommand(1);

    // ---- run ----
    auto* run = app.add_subcommand("run", "run a batch experiment from a JSON config");
    std::string config_path;
    std::optional<std::string> out_dir, seeds_arg;
    bool no_plots = false;
    run->add_option("--config", config_path, "JSON config file")->required();
    run->add_option("--out", out_dir, "output directory (overrides config)");
    run->add_option("--seeds", seeds_arg, "comma-separated seed list (overrides config)");
    run->add_flag("--no-plots", no_plots, "skip SVG plot generation");

    // ---- solve ----
    auto* solve_cmd = app.add_subcommand("solve", "restore a single blurred noisy signal");
    std::string method_arg, input_path, theta_arg = "binary:0,1";
    std::string out_path = "restored.csv";
    double sigma_b = 0.05;
    std::optional<double> alpha_arg, morozov_tau, delta_arg;
    double sigma_smooth = -1.0;
    solve_cmd->add_option("--method", method_arg, "tikhonov | tv | mixed_binary | mixed_data_driven")
        ->required();
    solve_cmd->add_option("--input", input_path, "noisy signal CSV (t,value)")->required();
    solve_cmd->add_option("--sigma-b", sigma_b, "blur kernel std")->required();
    solve_cmd->add_option("--alpha", alpha_arg, "fixed regularization strength");
    solve_cmd->add_option("--morozov", morozov_tau, "select alpha by Morozov with this tau");
    solve_cmd->add_option("--delta", delta_arg, "noise-norm estimate (required with --morozov)");
    solve_cmd->add_option("--theta", theta_arg, "weight source: <csv> | binary:a,b | auto");
    solve_cmd->add_option("--sigma-smooth", sigma_smooth, "smoothing std for --theta auto");
    solve_cmd->add_option("--out", out_path, "restored signal CSV path");

    // ---- theta ----
    auto* theta_cmd = app.add_subcommand("theta", "build the data-driven weight for a signal");
    std::string theta_input, theta_out;
    double theta_sigma_b = 0.05, theta_tau = 1.1, theta_sigma_smooth = -1.0;
    std::optional<double> theta_delta;
    theta_cmd->add_option("--input", theta_input, "noisy signal CSV (t,value)")->required();
    theta_cmd->add_option("--sigma-b", theta_sigma_b, "blur kernel std")->required();
    theta_cmd->add_option("--out", theta_out, "output CSV (t,theta)")->required();
    theta_cmd->add_option("--delta", theta_delta, "noise-norm estimate for the inner Morozov")
        ->required();
    theta_cmd->add_option("--tau", theta_tau, "Morozov tau for the Tikhonov pre-solve");
    theta_cmd->add_option("--sigma-smooth", theta_sigma_smooth,
                          "smoothing std (default: sigma-b)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            return run_command(config_path, out_dir, seeds_arg, no_plots);
        }

        if (solve_cmd->parsed()) {
            const mixreg::Signal v = mixreg::read_signal_csv(input_path);
            const mixreg::BlurOperator op = mixreg::build_operator(v.grid, {sigma_b});
            const mixreg::Method method = mixreg::method_from_name(method_arg);
            const double beta = mixreg::default_beta(v);
            mixreg::SolverConfig solver_cfg;

            mixreg::MorozovSpec morozov;
            if (morozov_tau) {
                if (!delta_arg) throw mixreg::Error("--morozov requires --delta");
                morozov.tau = *morozov_tau;
                morozov.delta = *delta_arg;
            }

            mixreg::SolveFn solve_fn;
            if (method == mixreg::Method::tikhonov) {
                solve_fn = mixreg::make_tikhonov_solve_fn(v, op);
            } else if (method == mixreg::Method::tv) {
                solve_fn = mixreg::make_tv_solve_fn(v, op, beta, solver_cfg);
            } else {
                std::string source = theta_arg;
                if (method == mixreg::Method::mixed_data_driven) source = "auto";
                if (source == "auto" && !delta_arg) {
                    throw mixreg::Error("--theta auto requires --delta for the inner Morozov");
                }
                mixreg::MorozovSpec inner = morozov;
                if (!morozov_tau && delta_arg) inner.delta = *delta_arg;
                const mixreg::WeightField theta =
                    theta_from_arg(source, v.grid, v, op, inner, sigma_smooth);
                solve_fn = mixreg::make_mixed_solve_fn(v, op, theta, beta, solver_cfg);
            }

            mixreg::SolveReport report;
            double alpha = 0.0;
            if (alpha_arg) {
                alpha = *alpha_arg;
                report = solve_fn(alpha);
            } else if (morozov_tau) {
                auto selected = mixreg::morozov_select(solve_fn, morozov);
                alpha = selected.alpha;
                report = std::move(selected.report);
            } else {
                throw mixreg::Error("solve: give either --alpha or --morozov <tau> with --delta");
            }

            mixreg::write_signal_csv(out_path, report.minimizer);
            std::printf("method %s  alpha %.6e  discrepancy %.6e  iterations %d  %s\n",
                        method_arg.c_str(), alpha, report.discrepancy, report.iterations,
                        report.converged ? "converged" : "max-iters");
            std::printf("restored: %s\n", out_path.c_str());
            return 0;
        }

        if (theta_cmd->parsed()) {
            const mixreg::Signal v = mixreg::read_signal_csv(theta_input);
            const mixreg::BlurOperator op = mixreg::build_operator(v.grid, {theta_sigma_b});
            mixreg::MorozovSpec morozov;
            morozov.tau = theta_tau;
            morozov.delta = *theta_delta;
            const auto built = mixreg::build_data_driven(v, op, theta_sigma_smooth, morozov);
            if (built.degenerate) {
                std::cerr << "warning: flat Tikhonov pre-solve, theta set to 0 everywhere\n";
            }
            mixreg::write_theta_csv(theta_out, built.theta);
            std::printf("theta written to %s (pre-solve alpha %.6e)\n", theta_out.c_str(),
                        built.tikhonov_alpha);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
