#pragma once

#include <Eigen/Dense>
#include <cstdint>

namespace mixreg {

/// Uniform grid on [0,1]: n subintervals, nodes t_j = j/n, j = 0..n.
struct Grid {
    int n = 0;
    double h = 0.0;  // = 1/n

    int num_nodes() const { return n + 1; }
    double node(int j) const { return static_cast<double>(j) / n; }

    bool operator==(const Grid&) const = default;
};

/// Throws InvalidGridError for n < 2.
Grid make_grid(int n);

/// Samples of a function on a Grid. Immutable by convention after construction.
struct Signal {
    Grid grid;
    Eigen::VectorXd values;  // length grid.n + 1
};

enum class SignalKind { example31, example32, step, bump, constant };

/// Deterministic synthetic test signals.
///
/// example31: piecewise constant on [0, 0.4] (plateaus 0 / 1 / 0.4 with jumps
///            at 0.10 and 0.25) and the smooth oscillation
///            0.35*sin(2 pi (t-0.4)/0.3) on (0.4, 1].
/// example32: smooth in two disjoint intervals and piecewise constant in
///            their complement, with three jumps: 0 on [0, 0.08], the hump
///            0.55*sin^2(pi (t-0.08)/0.18) on (0.08, 0.26), 0 on [0.26, 0.35],
///            1.1 on (0.35, 0.46], 0.15 on (0.46, 0.545], 0.8 on
///            (0.545, 0.57], then the decaying oscillation
///            0.8*cos(2 pi (t-0.57)/0.32)*exp(-(t-0.57)/0.3) on (0.57, 1].
/// step:      0 for t < 0.5, 1 for t >= 0.5.
/// bump:      exp(-(t-0.5)^2 / (2*0.1^2)).
/// constant:  1 everywhere.
///
/// example31/example32 are surrogates for signals published only as figures;
/// they are labeled as surrogates in all generated outputs.
Signal synth_signal(SignalKind kind, const Grid& grid);

const char* signal_kind_name(SignalKind kind);
SignalKind signal_kind_from_name(const std::string& name);

/// Additive i.i.d. zero-mean Gaussian noise with std = relative_level * range
/// of the input. Noise is drawn from the SplitMix64 counter stream documented
/// in rng.hpp; identical (signal, spec) pairs reproduce bit-identical output.
struct NoiseSpec {
    double relative_level = 0.01;  // in (0,1), fraction of the data range
    std::uint64_t seed = 0;
};

struct NoisyResult {
    Signal noisy;
    double sigma;  // realized noise std
};

/// Throws DegenerateRangeError when the input has zero range.
NoisyResult add_noise(const Signal& clean, const NoiseSpec& spec);

}  // namespace mixreg
