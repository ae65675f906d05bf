#include "mixreg/penalizers.hpp"

#include <cmath>

#include "mixreg/errors.hpp"

namespace mixreg {

WeightField WeightField::from_values(const Grid& grid, Eigen::VectorXd theta) {
    if (theta.size() != grid.num_nodes()) {
        throw DimensionError("WeightField: theta length does not match grid");
    }
    for (int j = 0; j < theta.size(); ++j) {
        if (!(theta[j] >= 0.0 && theta[j] <= 1.0)) {
            throw Error("WeightField: theta values must lie in [0,1]");
        }
    }
    Eigen::VectorXd edges(grid.n);
    for (int i = 0; i < grid.n; ++i) {
        edges[i] = 0.5 * (theta[i] + theta[i + 1]);
    }
    return WeightField{grid, std::move(theta), std::move(edges)};
}

WeightField WeightField::constant(const Grid& grid, double value) {
    return from_values(grid, Eigen::VectorXd::Constant(grid.num_nodes(), value));
}

void validate(const PenalizerSpec& spec) {
    if (!(spec.alpha1 > 0.0)) throw Error("PenalizerSpec: alpha1 must be positive");
    if (!(spec.alpha2 > 0.0)) throw Error("PenalizerSpec: alpha2 must be positive");
    if (!(spec.beta > 0.0)) throw Error("PenalizerSpec: beta must be positive");
}

double default_beta(const Signal& v) {
    const double range = v.values.maxCoeff() - v.values.minCoeff();
    return 1e-4 * range;
}

namespace {
void check_grids(const Grid& a, const Grid& b, const char* what) {
    if (!(a == b)) throw DimensionError(std::string(what) + ": grid mismatch");
}
}  // namespace

double tv_seminorm(const Signal& u) {
    double sum = 0.0;
    for (int i = 0; i < u.grid.n; ++i) {
        sum += std::abs(u.values[i + 1] - u.values[i]);
    }
    return sum;
}

double weighted_tv(const Signal& u, const WeightField& theta) {
    check_grids(u.grid, theta.grid, "weighted_tv");
    double sum = 0.0;
    for (int i = 0; i < u.grid.n; ++i) {
        sum += theta.edge_theta[i] * std::abs(u.values[i + 1] - u.values[i]);
    }
    return sum;
}

double weighted_l2_sq(const Signal& u, const WeightField& theta) {
    check_grids(u.grid, theta.grid, "weighted_l2_sq");
    double sum = 0.0;
    for (int j = 0; j <= u.grid.n; ++j) {
        sum += (1.0 - theta.theta[j]) * u.values[j] * u.values[j];
    }
    return u.grid.h * sum;
}

double objective(const Signal& u, const Signal& v, const BlurOperator& op,
                 const PenalizerSpec& spec, bool smoothed) {
    check_grids(u.grid, v.grid, "objective");
    check_grids(u.grid, op.grid, "objective");
    check_grids(u.grid, spec.theta.grid, "objective");

    const Eigen::VectorXd residual = op.matrix * u.values - v.values;
    double value = u.grid.h * residual.squaredNorm();
    value += spec.alpha1 * weighted_l2_sq(u, spec.theta);

    double tv = 0.0;
    for (int i = 0; i < u.grid.n; ++i) {
        const double d = u.values[i + 1] - u.values[i];
        const double term = smoothed ? std::sqrt(d * d + spec.beta * spec.beta) - spec.beta
                                     : std::abs(d);
        tv += spec.theta.edge_theta[i] * term;
    }
    return value + spec.alpha2 * tv;
}

Signal gradient(const Signal& u, const Signal& v, const BlurOperator& op,
                const PenalizerSpec& spec) {
    check_grids(u.grid, v.grid, "gradient");
    check_grids(u.grid, op.grid, "gradient");
    check_grids(u.grid, spec.theta.grid, "gradient");

    const int n = u.grid.n;
    const double h = u.grid.h;
    const Eigen::VectorXd residual = op.matrix * u.values - v.values;
    Eigen::VectorXd g = 2.0 * h * (op.matrix.transpose() * residual);
    for (int j = 0; j <= n; ++j) {
        g[j] += 2.0 * spec.alpha1 * h * (1.0 - spec.theta.theta[j]) * u.values[j];
    }
    // L^T(w o Lu): edge i contributes -t_i to node i and +t_i to node i+1.
    for (int i = 0; i < n; ++i) {
        const double d = u.values[i + 1] - u.values[i];
        const double t = spec.theta.edge_theta[i] * d / std::sqrt(d * d + spec.beta * spec.beta);
        g[i] -= spec.alpha2 * t;
        g[i + 1] += spec.alpha2 * t;
    }
    return Signal{u.grid, std::move(g)};
}

}  // namespace mixreg
