#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mixreg/penalizers.hpp"

namespace mixreg {

enum class LinearSolver { cholesky, conjugate_gradient };

struct SolverConfig {
    int max_iters = 200;
    double rel_change_tol = 1e-8;
    LinearSolver linear_solver = LinearSolver::cholesky;
    double cg_tol = 1e-12;  // relative residual tolerance of the CG path
};

struct SolveReport {
    Signal minimizer;
    int iterations = 0;
    double objective = 0.0;      // smoothed objective at the final iterate
    double grad_inf_norm = 0.0;  // inf-norm of the smoothed gradient there
    double discrepancy = 0.0;    // sqrt(h) * |A u - v|_2 (h-weighted residual norm)
    bool converged = false;
    std::vector<std::string> notes;  // diagnostics (descent violations, warnings)
};

/// Minimize the smoothed mixed objective by lagged diffusivity: iterate
///   (2h A^T A + 2 alpha1 h D_{1-theta} + alpha2 L^T W_k L) u = 2h A^T v,
/// W_k = diag(edge_theta[i]/sqrt((L u_k)[i]^2 + beta^2)), until the relative
/// step |u_{k+1}-u_k| / max(|u_k|, 1e-30) drops below rel_change_tol or
/// max_iters is reached. Each step is exact minimization of a quadratic
/// majorant, so the objective is non-increasing; any violation beyond 1e-10
/// is recorded in notes. Deterministic; default init is 0.
///
/// Throws SingularSystemError if the per-iteration system cannot be factored
/// (possible only for alpha1 = 0 with a theta null direction).
SolveReport solve(const Signal& v, const BlurOperator& op, const PenalizerSpec& spec,
                  const SolverConfig& cfg, const std::optional<Signal>& init = std::nullopt);

/// Order-zero Tikhonov baseline: direct SPD solve of (A^T A + alpha I) u = A^T v.
SolveReport solve_tikhonov(const Signal& v, const BlurOperator& op, double alpha);

/// Pure TV regularization: solve() with theta == 1, which annihilates the
/// weighted-L2 term; the system stays nonsingular because A^T A is positive
/// on constants (rows of A sum to 1). beta defaults to default_beta(v).
SolveReport solve_pure_tv(const Signal& v, const BlurOperator& op, double alpha,
                          const SolverConfig& cfg);

}  // namespace mixreg
