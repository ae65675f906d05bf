#pragma once

#include <Eigen/Dense>

#include "mixreg/blur_operator.hpp"
#include "mixreg/grid_signals.hpp"

namespace mixreg {

/// Spatial weight theta: [0,1]-valued per node; edge weights are the
/// arithmetic means of adjacent node values and carry the TV penalty.
struct WeightField {
    Grid grid;
    Eigen::VectorXd theta;       // length n+1, each in [0,1]
    Eigen::VectorXd edge_theta;  // length n, edge_theta[i] = (theta[i]+theta[i+1])/2

    static WeightField from_values(const Grid& grid, Eigen::VectorXd theta);
    static WeightField constant(const Grid& grid, double value);
};

/// Parameters of the mixed functional
///   F(u) = h*|Au-v|^2 + alpha1 * h*sum (1-theta) u^2 + alpha2 * sum edge_theta |du|.
/// beta is the TV smoothing parameter of psi_beta(d) = sqrt(d^2+beta^2) - beta
/// (amplitude units).
struct PenalizerSpec {
    double alpha1;
    double alpha2;
    WeightField theta;
    double beta;
};

void validate(const PenalizerSpec& spec);

/// Default TV smoothing: 1e-4 times the data range.
double default_beta(const Signal& v);

/// Discrete total variation sum |u[i+1]-u[i]| (no h factor, so alpha2 is
/// comparable across grid resolutions).
double tv_seminorm(const Signal& u);

/// sum edge_theta[i] * |u[i+1]-u[i]|. Reduces to tv_seminorm for theta == 1.
double weighted_tv(const Signal& u, const WeightField& theta);

/// h * sum (1-theta[j]) * u[j]^2.
double weighted_l2_sq(const Signal& u, const WeightField& theta);

/// Full mixed objective; the TV term uses |d| when smoothed == false and
/// psi_beta(d) when smoothed == true. The two values differ by at most
/// alpha2 * n * beta, with smoothed <= exact.
double objective(const Signal& u, const Signal& v, const BlurOperator& op,
                 const PenalizerSpec& spec, bool smoothed);

/// Gradient of the smoothed objective:
///   2h A^T(Au-v) + 2 alpha1 h (1-theta) u + alpha2 L^T(w o Lu),
/// with L the forward-difference matrix and w[i] = edge_theta[i]/sqrt((Lu)[i]^2+beta^2).
Signal gradient(const Signal& u, const Signal& v, const BlurOperator& op,
                const PenalizerSpec& spec);

}  // namespace mixreg
