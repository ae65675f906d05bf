#include "mixreg/grid_signals.hpp"

#include <cmath>
#include <string>

#include "mixreg/errors.hpp"
#include "mixreg/rng.hpp"

namespace mixreg {

Grid make_grid(int n) {
    if (n < 2) {
        throw InvalidGridError("make_grid: n must be >= 2, got " + std::to_string(n));
    }
    return Grid{n, 1.0 / n};
}

namespace {

double example31_value(double t) {
    if (t <= 0.4) {
        if (t >= 0.10 && t <= 0.25) return 1.0;
        if (t > 0.25) return 0.4;
        return 0.0;
    }
    return 0.35 * std::sin(2.0 * std::numbers::pi * (t - 0.4) / 0.3);
}

double example32_value(double t) {
    if (t <= 0.08) return 0.0;
    if (t < 0.26) {
        const double s = std::sin(std::numbers::pi * (t - 0.08) / 0.18);
        return 0.55 * s * s;
    }
    if (t <= 0.35) return 0.0;
    if (t <= 0.46) return 1.1;
    if (t <= 0.545) return 0.15;
    if (t <= 0.57) return 0.8;
    return 0.8 * std::cos(2.0 * std::numbers::pi * (t - 0.57) / 0.32) *
           std::exp(-(t - 0.57) / 0.3);
}

}  // namespace

Signal synth_signal(SignalKind kind, const Grid& grid) {
    Eigen::VectorXd v(grid.num_nodes());
    for (int j = 0; j <= grid.n; ++j) {
        const double t = grid.node(j);
        switch (kind) {
            case SignalKind::example31: v[j] = example31_value(t); break;
            case SignalKind::example32: v[j] = example32_value(t); break;
            case SignalKind::step: v[j] = t < 0.5 ? 0.0 : 1.0; break;
            case SignalKind::bump: v[j] = std::exp(-(t - 0.5) * (t - 0.5) / (2.0 * 0.1 * 0.1)); break;
            case SignalKind::constant: v[j] = 1.0; break;
        }
    }
    return Signal{grid, std::move(v)};
}

const char* signal_kind_name(SignalKind kind) {
    switch (kind) {
        case SignalKind::example31: return "example31";
        case SignalKind::example32: return "example32";
        case SignalKind::step: return "step";
        case SignalKind::bump: return "bump";
        case SignalKind::constant: return "constant";
    }
    return "unknown";
}

SignalKind signal_kind_from_name(const std::string& name) {
    if (name == "example31") return SignalKind::example31;
    if (name == "example32") return SignalKind::example32;
    if (name == "step") return SignalKind::step;
    if (name == "bump") return SignalKind::bump;
    if (name == "constant") return SignalKind::constant;
    throw Error("unknown signal kind: " + name);
}

NoisyResult add_noise(const Signal& clean, const NoiseSpec& spec) {
    if (!(spec.relative_level > 0.0 && spec.relative_level < 1.0)) {
        throw Error("add_noise: relative_level must lie in (0,1)");
    }
    const double range = clean.values.maxCoeff() - clean.values.minCoeff();
    if (range <= 0.0) {
        throw DegenerateRangeError("add_noise: signal has zero range, relative noise level undefined");
    }
    const double sigma = spec.relative_level * range;
    Signal noisy = clean;
    for (int j = 0; j < clean.values.size(); ++j) {
        noisy.values[j] += sigma * rng::gaussian(spec.seed, static_cast<std::uint64_t>(j));
    }
    return NoisyResult{std::move(noisy), sigma};
}

}  // namespace mixreg
