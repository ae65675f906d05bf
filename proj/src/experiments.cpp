#include "mixreg/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <nlohmann/json.hpp>
#include <set>

#include "mixreg/csv_io.hpp"
#include "mixreg/errors.hpp"
#include "svg_plot.hpp"

namespace mixreg {

const char* method_name(Method m) {
    switch (m) {
        case Method::tikhonov: return "tikhonov";
        case Method::tv: return "tv";
        case Method::mixed_binary: return "mixed_binary";
        case Method::mixed_data_driven: return "mixed_data_driven";
    }
    return "unknown";
}

Method method_from_name(const std::string& name) {
    if (name == "tikhonov") return Method::tikhonov;
    if (name == "tv") return Method::tv;
    if (name == "mixed_binary") return Method::mixed_binary;
    if (name == "mixed_data_driven") return Method::mixed_data_driven;
    throw Error("unknown method: " + name);
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open config: " + path.string());
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw Error("malformed config " + path.string() + ": " + e.what());
    }

    ExperimentConfig cfg;
    const auto get = [&](const char* key, auto& field) {
        if (doc.contains(key)) field = doc.at(key).template get<std::decay_t<decltype(field)>>();
    };
    get("n", cfg.n);
    get("sigma_b", cfg.sigma_b);
    get("noise_level", cfg.noise_level);
    get("seeds", cfg.seeds);
    if (doc.contains("methods")) {
        cfg.methods.clear();
        for (const auto& name : doc.at("methods")) {
            cfg.methods.push_back(method_from_name(name.get<std::string>()));
        }
    }
    if (doc.contains("signal")) {
        cfg.signal = signal_kind_from_name(doc.at("signal").get<std::string>());
    }
    get("theta_binary_a", cfg.theta_binary_a);
    get("theta_binary_b", cfg.theta_binary_b);
    get("theta_sigma_smooth", cfg.theta_sigma_smooth);
    get("beta_scale", cfg.beta_scale);
    get("morozov_tau", cfg.morozov.tau);
    get("morozov_log_alpha_low", cfg.morozov.log_alpha_low);
    get("morozov_log_alpha_high", cfg.morozov.log_alpha_high);
    get("morozov_bisect_tol", cfg.morozov.bisect_tol);
    get("morozov_max_bisections", cfg.morozov.max_bisections);
    get("solver_max_iters", cfg.solver.max_iters);
    get("solver_rel_change_tol", cfg.solver.rel_change_tol);
    if (doc.contains("solver_linear_solver")) {
        const auto name = doc.at("solver_linear_solver").get<std::string>();
        if (name == "cholesky") {
            cfg.solver.linear_solver = LinearSolver::cholesky;
        } else if (name == "conjugate_gradient") {
            cfg.solver.linear_solver = LinearSolver::conjugate_gradient;
        } else {
            throw Error("unknown solver_linear_solver: " + name);
        }
    }
    get("solver_cg_tol", cfg.solver.cg_tol);
    get("output_dir", cfg.output_dir);
    return cfg;
}

double isnr(const Signal& f_true, const Signal& g_noisy, const Signal& f_restored) {
    if (!(f_true.grid == g_noisy.grid) || !(f_true.grid == f_restored.grid)) {
        throw DimensionError("isnr: grid mismatch");
    }
    const double num = (f_true.values - g_noisy.values).squaredNorm();
    const double den = (f_true.values - f_restored.values).squaredNorm();
    if (num == 0.0) {
        throw UndefinedMetricError("isnr: f equals g, metric undefined");
    }
    if (den == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return 10.0 * std::log10(num / den);
}

namespace {

std::string run_csv_name(const ExperimentConfig& cfg, std::uint64_t seed, Method m) {
    return std::string("run_") + signal_kind_name(cfg.signal) + "_seed" + std::to_string(seed) +
           "_" + method_name(m) + ".csv";
}

std::string theta_csv_name(const ExperimentConfig& cfg, std::uint64_t seed, Method m) {
    return std::string("theta_") + signal_kind_name(cfg.signal) + "_seed" + std::to_string(seed) +
           "_" + method_name(m) + ".csv";
}

void write_run_csv(const std::filesystem::path& path, const Signal& f_true,
                   const Signal& g_noisy, const Signal& f_restored) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open for writing: " + path.string());
    out << "t,f_true,g_noisy,f_restored\n";
    for (int j = 0; j <= f_true.grid.n; ++j) {
        out << format_real(f_true.grid.node(j)) << ',' << format_real(f_true.values[j]) << ','
            << format_real(g_noisy.values[j]) << ',' << format_real(f_restored.values[j]) << '\n';
    }
}

std::string sanitize_status(std::string msg) {
    for (char& c : msg) {
        if (c == ',' || c == '\n' || c == '\r') c = ';';
    }
    return msg;
}

}  // namespace

std::vector<MethodResult> run_experiment(const ExperimentConfig& cfg) {
    if (cfg.seeds.empty()) throw Error("run_experiment: need at least one seed");
    if (cfg.methods.empty()) throw Error("run_experiment: need at least one method");

    std::filesystem::create_directories(cfg.output_dir);
    const std::filesystem::path dir(cfg.output_dir);

    const Grid grid = make_grid(cfg.n);
    const BlurOperator op = build_operator(grid, KernelSpec{cfg.sigma_b});
    const Signal f_true = synth_signal(cfg.signal, grid);
    const Signal g_clean = apply(op, f_true);

    std::vector<MethodResult> results;
    for (const std::uint64_t seed : cfg.seeds) {
        const auto [g_noisy, sigma] = add_noise(g_clean, NoiseSpec{cfg.noise_level, seed});
        MorozovSpec morozov = cfg.morozov;
        morozov.delta = sigma * std::sqrt(grid.h * grid.num_nodes());
        const double beta = cfg.beta_scale * (g_noisy.values.maxCoeff() - g_noisy.values.minCoeff());

        for (const Method method : cfg.methods) {
            MethodResult cell;
            cell.seed = seed;
            cell.method = method;
            try {
                SolveFn solve_fn;
                std::optional<WeightField> theta;
                switch (method) {
                    case Method::tikhonov:
                        solve_fn = make_tikhonov_solve_fn(g_noisy, op);
                        break;
                    case Method::tv:
                        solve_fn = make_tv_solve_fn(g_noisy, op, beta, cfg.solver);
                        break;
                    case Method::mixed_binary:
                        theta = build_binary(grid, cfg.theta_binary_a, cfg.theta_binary_b);
                        solve_fn = make_mixed_solve_fn(g_noisy, op, *theta, beta, cfg.solver);
                        break;
                    case Method::mixed_data_driven:
                        theta = build_data_driven(g_noisy, op, cfg.theta_sigma_smooth, morozov).theta;
                        solve_fn = make_mixed_solve_fn(g_noisy, op, *theta, beta, cfg.solver);
                        break;
                }
                MorozovResult selected = morozov_select(solve_fn, morozov);
                cell.alpha = selected.alpha;
                cell.discrepancy = selected.report.discrepancy;
                cell.iterations = selected.report.iterations;
                cell.restored = std::move(selected.report.minimizer);
                cell.isnr = isnr(f_true, g_noisy, cell.restored);
                write_run_csv(dir / run_csv_name(cfg, seed, method), f_true, g_noisy,
                              cell.restored);
                if (theta) {
                    write_theta_csv(dir / theta_csv_name(cfg, seed, method), *theta);
                }
            } catch (const std::exception& e) {
                cell.status = sanitize_status(e.what());
            }
            results.push_back(std::move(cell));
        }
    }

    std::ofstream summary(dir / "summary.csv");
    if (!summary) throw Error("cannot open for writing: " + (dir / "summary.csv").string());
    summary << "seed,method,alpha,discrepancy,iterations,isnr,status\n";
    for (const auto& r : results) {
        summary << r.seed << ',' << method_name(r.method) << ',';
        if (r.status == "ok") {
            summary << format_real(r.alpha) << ',' << format_real(r.discrepancy) << ','
                    << r.iterations << ',' << format_real(r.isnr);
        } else {
            summary << "nan,nan,0,nan";
        }
        summary << ',' << r.status << '\n';
    }
    return results;
}

std::vector<std::filesystem::path> emit_plots(const std::vector<MethodResult>& results,
                                              const ExperimentConfig& cfg) {
    const std::filesystem::path dir(cfg.output_dir);
    std::vector<std::filesystem::path> written;
    const std::string sig = signal_kind_name(cfg.signal);

    std::set<std::uint64_t> seeds_plotted;
    for (const auto& r : results) {
        if (r.status != "ok") continue;
        const auto run_path = dir / run_csv_name(cfg, r.seed, r.method);
        const CsvTable table = read_csv(run_path);
        const auto t = column_as_doubles(table, "t");
        const auto truth = column_as_doubles(table, "f_true");
        const auto noisy = column_as_doubles(table, "g_noisy");
        const auto restored = column_as_doubles(table, "f_restored");

        if (seeds_plotted.insert(r.seed).second) {
            const auto path =
                dir / ("plot_" + sig + "_seed" + std::to_string(r.seed) + "_truth_noisy.svg");
            svg::write_plot(path, sig + " (surrogate), seed " + std::to_string(r.seed),
                            {{"original", t, truth, "#d62728", true},
                             {"blurred noisy", t, noisy, "#1f77b4", false}});
            written.push_back(path);
        }

        const auto restored_path = dir / ("plot_" + sig + "_seed" + std::to_string(r.seed) + "_" +
                                          method_name(r.method) + "_restored.svg");
        svg::write_plot(restored_path,
                        std::string(method_name(r.method)) + " restoration, seed " +
                            std::to_string(r.seed),
                        {{"original", t, truth, "#d62728", true},
                         {"restored", t, restored, "#2ca02c", false}});
        written.push_back(restored_path);

        if (r.method == Method::mixed_binary || r.method == Method::mixed_data_driven) {
            const auto theta_path = dir / theta_csv_name(cfg, r.seed, r.method);
            const CsvTable theta_table = read_csv(theta_path);
            const auto tt = column_as_doubles(theta_table, "t");
            const auto theta = column_as_doubles(theta_table, "theta");
            const auto plot_path = dir / ("plot_" + sig + "_seed" + std::to_string(r.seed) + "_" +
                                          method_name(r.method) + "_theta.svg");
            svg::write_plot(plot_path,
                            std::string("theta, ") + method_name(r.method) + ", seed " +
                                std::to_string(r.seed),
                            {{"theta", tt, theta, "#9467bd", false}});
            written.push_back(plot_path);
        }
    }
    return written;
}

}  // namespace mixreg
