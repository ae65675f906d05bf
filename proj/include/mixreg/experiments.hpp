#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "mixreg/regparam.hpp"
#include "mixreg/solver.hpp"
#include "mixreg/theta_builder.hpp"

namespace mixreg {

enum class Method { tikhonov, tv, mixed_binary, mixed_data_driven };

const char* method_name(Method m);
Method method_from_name(const std::string& name);

/// Batch restoration experiment: synthesize truth, blur, add seeded noise,
/// then per method select alpha by Morozov and solve.
struct ExperimentConfig {
    int n = 130;
    double sigma_b = 0.05;
    double noise_level = 0.01;
    std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
    std::vector<Method> methods = {Method::tikhonov, Method::tv, Method::mixed_binary,
                                   Method::mixed_data_driven};
    SignalKind signal = SignalKind::example31;
    double theta_binary_a = 0.0;   // binary recipe for mixed_binary
    double theta_binary_b = 0.4;
    double theta_sigma_smooth = -1.0;  // data-driven smoothing std; < 0 -> sigma_b
    double beta_scale = 1e-4;          // beta = beta_scale * range(noisy data)
    MorozovSpec morozov;               // delta is filled per seed from the realized noise
    SolverConfig solver;
    std::string output_dir = "out";
};

/// Flat key-value JSON document mirroring the config field names.
ExperimentConfig load_config(const std::filesystem::path& path);

struct MethodResult {
    std::uint64_t seed = 0;
    Method method = Method::tikhonov;
    double alpha = 0.0;
    double isnr = 0.0;  // dB; +inf when the restoration equals the truth exactly
    double discrepancy = 0.0;
    int iterations = 0;
    Signal restored;
    std::string status = "ok";  // "ok" or the error that aborted this cell
};

/// Improvement in signal-to-noise ratio, 10*log10(|f-g|^2 / |f-f_restored|^2),
/// with unweighted sums. Returns +inf for an exact restoration; throws
/// UndefinedMetricError when f == g (zero numerator).
double isnr(const Signal& f_true, const Signal& g_noisy, const Signal& f_restored);

/// Runs every (seed, method) cell; a failing cell is recorded with its error
/// in `status` and the remaining cells proceed. Writes one run CSV per cell
/// (header "t,f_true,g_noisy,f_restored"), theta CSVs for the mixed methods,
/// and a summary CSV (header "seed,method,alpha,discrepancy,iterations,isnr,status")
/// in deterministic order, so identical configs produce byte-identical output.
std::vector<MethodResult> run_experiment(const ExperimentConfig& cfg);

/// Renders SVG plots for a completed run. Plot data is read back from the
/// CSVs written by run_experiment (the CSVs are the single source of truth):
/// per seed one truth-vs-noisy plot, per ok cell one restoration-vs-truth
/// plot, per mixed cell one theta profile. Returns the written paths.
std::vector<std::filesystem::path> emit_plots(const std::vector<MethodResult>& results,
                                              const ExperimentConfig& cfg);

}  // namespace mixreg
