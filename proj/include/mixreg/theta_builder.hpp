#pragma once

#include <utility>
#include <vector>

#include "mixreg/penalizers.hpp"
#include "mixreg/regparam.hpp"

namespace mixreg {

/// Recipe for constructing the spatial weight theta.
struct ThetaRecipe {
    enum class Kind { binary_interval, indicator, data_driven, constant };
    Kind kind = Kind::constant;
    double a = 0.0, b = 1.0;                              // binary_interval
    std::vector<std::pair<double, double>> intervals;     // indicator (union of closed intervals)
    double value = 0.0;                                   // constant
    double sigma_smooth = -1.0;                           // data_driven; < 0 means "use kernel sigma_b"
};

/// theta[j] = 1 for t_j in [a,b], else 0. Throws InvalidIntervalError for a >= b.
WeightField build_binary(const Grid& grid, double a, double b);

/// Indicator of a union of closed intervals.
WeightField build_indicator(const Grid& grid, const std::vector<std::pair<double, double>>& intervals);

WeightField build_constant(const Grid& grid, double value);

struct DataDrivenTheta {
    WeightField theta;
    double tikhonov_alpha = 0.0;  // Morozov-selected alpha of the pre-solve
    bool degenerate = false;      // flat pre-solve: theta == 0 returned with this warning flag
};

/// Data-driven weight: normalized (to [0,1]) convolution of a Gaussian of std
/// sigma_smooth with the modulus of the gradient of a Morozov-regularized
/// zero-order Tikhonov pre-solve of the data. The gradient modulus uses
/// forward differences over h with the final entry duplicated; the smoothing
/// convolution reuses the reflexive blur-operator construction. A flat
/// pre-solve (max-min of the smoothed modulus <= 1e-9 * max(1, max)) yields
/// theta == 0 with degenerate = true.
DataDrivenTheta build_data_driven(const Signal& v, const BlurOperator& op,
                                  double sigma_smooth, const MorozovSpec& morozov);

/// Dispatch on recipe kind. The data_driven case consumes v/op/morozov.
WeightField build_theta(const ThetaRecipe& recipe, const Grid& grid, const Signal& v,
                        const BlurOperator& op, const MorozovSpec& morozov);

}  // namespace mixreg
