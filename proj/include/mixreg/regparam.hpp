#pragma once

#include <functional>

#include "mixreg/solver.hpp"

namespace mixreg {

/// Morozov discrepancy principle: pick alpha with |A u_alpha - v| ~= tau * delta
/// in the h-weighted norm. delta is the noise-norm estimate sigma*sqrt(h*(n+1)).
struct MorozovSpec {
    double tau = 1.1;
    double delta = 0.0;
    double log_alpha_low = -12.0;   // log10 of the bracket endpoints
    double log_alpha_high = 4.0;
    double bisect_tol = 1e-3;       // relative, on |discrepancy - tau*delta|
    int max_bisections = 60;
};

/// Maps a regularization strength to a full solve. For the mixed methods the
/// penalizer is a fixed theta-mixture whose internal weighting puts the two
/// terms on comparable regularization scales; Morozov's single parameter
/// scales the whole mixture: alpha1 = alpha, alpha2 = tv_ratio * alpha. The
/// default ratio reflects that the weighted-L2 term (units u^2 * length) and
/// the TV term (units u) reach their useful strengths at alphas roughly two
/// orders of magnitude apart for the benchmark blur and noise scales; a 1:1
/// coupling leaves no alpha that serves both terms at once.
using SolveFn = std::function<SolveReport(double alpha)>;

inline constexpr double kMixedTvRatio = 8e-3;

/// h-weighted residual norm |A u_alpha - v| of the solve at alpha.
double discrepancy(double alpha, const SolveFn& solve_fn);

struct MorozovResult {
    double alpha;
    SolveReport report;
};

/// Bisection on log10(alpha) until |discrepancy - tau*delta| <= bisect_tol*tau*delta
/// or max_bisections. Requires discrepancy(10^low) < tau*delta < discrepancy(10^high);
/// otherwise throws NoBracketError carrying both endpoint discrepancies. A
/// discrepancy moving against the bracket orientation by more than 1e-6 is
/// recorded as a warning note in the returned report and bisection continues.
MorozovResult morozov_select(const SolveFn& solve_fn, const MorozovSpec& spec);

/// Standard per-method solve functions used by the experiments and the CLI.
SolveFn make_tikhonov_solve_fn(Signal v, BlurOperator op);
SolveFn make_tv_solve_fn(Signal v, BlurOperator op, double beta, SolverConfig cfg);
SolveFn make_mixed_solve_fn(Signal v, BlurOperator op, WeightField theta, double beta,
                            SolverConfig cfg, double tv_ratio = kMixedTvRatio);

}  // namespace mixreg
