#include "mixreg/theta_builder.hpp"

#include <algorithm>
#include <cmath>

#include "mixreg/blur_operator.hpp"
#include "mixreg/errors.hpp"

namespace mixreg {

WeightField build_binary(const Grid& grid, double a, double b) {
    if (!(a < b)) {
        throw InvalidIntervalError("build_binary: need a < b");
    }
    Eigen::VectorXd theta(grid.num_nodes());
    for (int j = 0; j <= grid.n; ++j) {
        const double t = grid.node(j);
        theta[j] = (t >= a && t <= b) ? 1.0 : 0.0;
    }
    return WeightField::from_values(grid, std::move(theta));
}

WeightField build_indicator(const Grid& grid,
                            const std::vector<std::pair<double, double>>& intervals) {
    for (const auto& [a, b] : intervals) {
        if (!(a < b)) throw InvalidIntervalError("build_indicator: need a < b in every interval");
    }
    Eigen::VectorXd theta = Eigen::VectorXd::Zero(grid.num_nodes());
    for (int j = 0; j <= grid.n; ++j) {
        const double t = grid.node(j);
        for (const auto& [a, b] : intervals) {
            if (t >= a && t <= b) {
                theta[j] = 1.0;
                break;
            }
        }
    }
    return WeightField::from_values(grid, std::move(theta));
}

WeightField build_constant(const Grid& grid, double value) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw Error("build_constant: value must lie in [0,1]");
    }
    return WeightField::constant(grid, value);
}

DataDrivenTheta build_data_driven(const Signal& v, const BlurOperator& op,
                                  double sigma_smooth, const MorozovSpec& morozov) {
    if (!(v.grid == op.grid)) {
        throw DimensionError("build_data_driven: grid mismatch");
    }
    const double sigma = sigma_smooth > 0.0 ? sigma_smooth : op.kernel.sigma_b;

    const MorozovResult pre = morozov_select(make_tikhonov_solve_fn(v, op), morozov);
    const Eigen::VectorXd& u = pre.report.minimizer.values;

    const int n = v.grid.n;
    Eigen::VectorXd modulus(n + 1);
    for (int j = 0; j < n; ++j) {
        modulus[j] = std::abs(u[j + 1] - u[j]) / v.grid.h;
    }
    modulus[n] = modulus[n - 1];

    const BlurOperator smoother = build_operator(v.grid, KernelSpec{sigma});
    const Eigen::VectorXd s = smoother.matrix * modulus;

    const double lo = s.minCoeff();
    const double hi = s.maxCoeff();
    if (hi - lo <= 1e-9 * std::max(1.0, hi)) {
        return DataDrivenTheta{WeightField::constant(v.grid, 0.0), pre.alpha, true};
    }
    Eigen::VectorXd theta = (s.array() - lo) / (hi - lo);
    theta = theta.cwiseMax(0.0).cwiseMin(1.0);
    return DataDrivenTheta{WeightField::from_values(v.grid, std::move(theta)), pre.alpha, false};
}

WeightField build_theta(const ThetaRecipe& recipe, const Grid& grid, const Signal& v,
                        const BlurOperator& op, const MorozovSpec& morozov) {
    switch (recipe.kind) {
        case ThetaRecipe::Kind::binary_interval:
            return build_binary(grid, recipe.a, recipe.b);
        case ThetaRecipe::Kind::indicator:
            return build_indicator(grid, recipe.intervals);
        case ThetaRecipe::Kind::constant:
            return build_constant(grid, recipe.value);
        case ThetaRecipe::Kind::data_driven:
            return build_data_driven(v, op, recipe.sigma_smooth, morozov).theta;
    }
    throw Error("build_theta: unknown recipe kind");
}

}  // namespace mixreg
