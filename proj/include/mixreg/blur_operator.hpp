#pragma once

#include <Eigen/Dense>

#include "mixreg/grid_signals.hpp"

namespace mixreg {

struct KernelSpec {
    double sigma_b;  // Gaussian kernel std, in t-units; > 0
};

/// Pointwise Gaussian kernel k(t,s) = exp(-(t-s)^2/(2 sigma_b^2)) / (sqrt(2 pi) sigma_b).
double kernel_eval(const KernelSpec& spec, double t, double s);

enum class Boundary { reflexive };

/// Dense (n+1)x(n+1) discretization of Gaussian convolution on [0,1] with
/// reflexive boundary handling. Immutable after build; apply/apply_adjoint are
/// pure and safe to share across threads.
///
/// Entries are cell-integrated kernel weights (Gaussian CDF differences over
/// width-h cells) folded with half-sample reflection at both ends. The matrix
/// is symmetric, entrywise nonnegative, and row-stochastic: rows sum to 1 up
/// to the truncated kernel tail (< 1e-13), so constants are preserved.
struct BlurOperator {
    Grid grid;
    Eigen::MatrixXd matrix;
    KernelSpec kernel;
    Boundary boundary = Boundary::reflexive;
};

BlurOperator build_operator(const Grid& grid, const KernelSpec& spec);

/// Matrix-vector product A f. Throws DimensionError on grid mismatch.
Signal apply(const BlurOperator& op, const Signal& f);

/// Transpose product A^T r; equals apply() for the symmetric A built here.
Signal apply_adjoint(const BlurOperator& op, const Signal& r);

}  // namespace mixreg
