#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mixreg/errors.hpp"
#include "mixreg/regparam.hpp"
#include "test_util.hpp"

using namespace mixreg;

TEST_CASE("discrepancy of the Tikhonov path matches the closed form") {
    const Grid g = make_grid(50);
    const BlurOperator op = build_operator(g, KernelSpec{0.05});
    const Signal v = add_noise(apply(op, synth_signal(SignalKind::example31, g)),
                               NoiseSpec{0.01, 11})
                         .noisy;
    const SolveFn fn = make_tikhonov_solve_fn(v, op);
    for (double alpha : {1e-4, 1e-2, 1.0}) {
        const Eigen::VectorXd u = testutil::tikhonov_reference(op, v.values, alpha);
        const double expected = std::sqrt(g.h) * (op.matrix * u - v.values).norm();
        CHECK(discrepancy(alpha, fn) == doctest::Approx(expected).epsilon(1e-8));
    }
}

TEST_CASE("discrepancy grows with alpha") {
    const Grid g = make_grid(60);
    const BlurOperator op = build_operator(g, KernelSpec{0.05});
    for (auto kind : {SignalKind::example31, SignalKind::example32, SignalKind::step}) {
        const Signal v = add_noise(apply(op, synth_signal(kind, g)), NoiseSpec{0.01, 13}).noisy;
        const SolveFn tik = make_tikhonov_solve_fn(v, op);
        CHECK(discrepancy(1e4, tik) >= discrepancy(1e-4, tik));
        const SolveFn tv = make_tv_solve_fn(v, op, default_beta(v), SolverConfig{});
        CHECK(discrepancy(1e4, tv) >= discrepancy(1e-4, tv));
    }
}

TEST_CASE("morozov_select hits the stopping contract") {
    const Grid g = make_grid(80);
    const BlurOperator op = build_operator(g, KernelSpec{0.05});
    const auto [v, sigma] =
        add_noise(apply(op, synth_signal(SignalKind::example31, g)), NoiseSpec{0.01, 17});
    MorozovSpec spec;
    spec.delta = sigma * std::sqrt(g.h * g.num_nodes());

    const auto result = morozov_select(make_tikhonov_solve_fn(v, op), spec);
    const double target = spec.tau * spec.delta;
    CHECK(std::abs(result.report.discrepancy - target) <= spec.bisect_tol * target);
    CHECK(result.alpha > 0.0);
}

TEST_CASE("morozov_select is deterministic") {
    const Grid g = make_grid(40);
    const BlurOperator op = build_operator(g, KernelSpec{0.05});
    const auto [v, sigma] =
        add_noise(apply(op, synth_signal(SignalKind::example32, g)), NoiseSpec{0.01, 19});
    MorozovSpec spec;
    spec.delta = sigma * std::sqrt(g.h * g.num_nodes());

    const auto a = morozov_select(make_tikhonov_solve_fn(v, op), spec);
    const auto b = morozov_select(make_tikhonov_solve_fn(v, op), spec);
    CHECK(a.alpha == b.alpha);
    CHECK(a.report.minimizer.values == b.report.minimizer.values);
}

TEST_CASE("noiseless data with a tiny delta drives alpha to the low end") {
    const Grid g = make_grid(16);
    const BlurOperator op = build_operator(g, KernelSpec{0.1});
    const Signal v = apply(op, synth_signal(SignalKind::bump, g));  // exact data
    MorozovSpec spec;
    spec.delta = 1e-6;

    const auto result = morozov_select(make_tikhonov_solve_fn(v, op), spec);
    const double target = spec.tau * spec.delta;
    CHECK(result.report.discrepancy <= target * (1.0 + spec.bisect_tol));
    CHECK(result.alpha < 1e-4);
}

TEST_CASE("bracket failure raises NoBracketError with the endpoint discrepancies") {
    const Grid g = make_grid(30);
    const BlurOperator op = build_operator(g, KernelSpec{0.05});
    const Signal v = add_noise(apply(op, synth_signal(SignalKind::example31, g)),
                               NoiseSpec{0.01, 23})
                         .noisy;
    MorozovSpec spec;
    spec.delta = 1e3;  // tau*delta above any attainable discrepancy
    try {
        morozov_select(make_tikhonov_solve_fn(v, op), spec);
        FAIL("expected NoBracketError");
    } catch (const NoBracketError& e) {
        CHECK(e.discrepancy_low >= 0.0);
        CHECK(e.discrepancy_high >= 0.0);
        CHECK(e.discrepancy_high < spec.tau * spec.delta);
    }
}

TEST_CASE("delta matches the realized h-weighted noise norm within 15% per seed") {
    const Grid g = make_grid(130);
    const BlurOperator op = build_operator(g, KernelSpec{0.05});
    const Signal clean = apply(op, synth_signal(SignalKind::example31, g));
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto [noisy, sigma] = add_noise(clean, NoiseSpec{0.01, seed});
        const double delta = sigma * std::sqrt(g.h * g.num_nodes());
        const double realized = std::sqrt(g.h) * (noisy.values - clean.values).norm();
        CHECK(std::abs(realized - delta) <= 0.15 * delta);
    }
}
