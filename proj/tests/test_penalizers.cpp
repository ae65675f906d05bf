#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mixreg/errors.hpp"
#include "mixreg/oracle.hpp"
#include "mixreg/penalizers.hpp"
#include "mixreg/solver.hpp"
#include "test_util.hpp"

using namespace mixreg;

TEST_CASE("tv_seminorm basics") {
    const Grid g = make_grid(6);
    CHECK(tv_seminorm(synth_signal(SignalKind::constant, g)) == 0.0);

    const Grid g2 = make_grid(2);
    Signal s{g2, Eigen::Vector3d{0.0, 1.0, 0.0}};
    CHECK(tv_seminorm(s) == 2.0);
}

TEST_CASE("tv_seminorm equals the brute-force dual at n = 6") {
    const Grid g = make_grid(6);
    const WeightField ones = WeightField::constant(g, 1.0);
    for (std::uint64_t k = 0; k < 50; ++k) {
        const Signal u = testutil::random_signal(g, 40 + k);
        CHECK(tv_seminorm(u) ==
              doctest::Approx(oracle::dual_sup_weighted(u, ones, 3)).epsilon(1e-12));
    }
}

TEST_CASE("weighted_tv reductions and dual-oracle agreement") {
    const Grid g = make_grid(6);
    const WeightField ones = WeightField::constant(g, 1.0);
    const WeightField zeros = WeightField::constant(g, 0.0);

    for (std::uint64_t k = 0; k < 50; ++k) {
        const Signal u = testutil::random_signal(g, 90 + k);
        CHECK(weighted_tv(u, ones) == tv_seminorm(u));
        CHECK(weighted_tv(u, zeros) == 0.0);

        const WeightField theta = testutil::random_theta(g, k);
        const double dual = oracle::dual_sup_weighted(u, theta, 3);
        CHECK(weighted_tv(u, theta) == doctest::Approx(dual).epsilon(1e-12));
    }
}

TEST_CASE("weighted_tv rejects grid mismatch") {
    const Signal u = synth_signal(SignalKind::step, make_grid(8));
    const WeightField theta = WeightField::constant(make_grid(9), 0.5);
    CHECK_THROWS_AS(weighted_tv(u, theta), DimensionError);
    CHECK_THROWS_AS(weighted_l2_sq(u, theta), DimensionError);
}

TEST_CASE("weighted_l2_sq reductions and closed form") {
    const Grid g = make_grid(13);
    const Signal u = testutil::random_signal(g, 3);
    const WeightField zeros = WeightField::constant(g, 0.0);
    const WeightField ones = WeightField::constant(g, 1.0);

    CHECK(weighted_l2_sq(u, zeros) ==
          doctest::Approx(g.h * u.values.squaredNorm()).epsilon(1e-14));
    CHECK(weighted_l2_sq(u, ones) == 0.0);

    const Signal unit = synth_signal(SignalKind::constant, g);
    const WeightField half = WeightField::constant(g, 0.5);
    CHECK(weighted_l2_sq(unit, half) ==
          doctest::Approx(0.5 * g.num_nodes() * g.h).epsilon(1e-14));
}

TEST_CASE("weight field validation") {
    const Grid g = make_grid(5);
    Eigen::VectorXd bad = Eigen::VectorXd::Constant(6, 1.5);
    CHECK_THROWS_AS(WeightField::from_values(g, bad), Error);
    const WeightField w = WeightField::constant(g, 0.25);
    for (int i = 0; i < g.n; ++i) CHECK(w.edge_theta[i] == 0.25);
}

TEST_CASE("objective at zero input and smoothing gap") {
    const Grid g = make_grid(20);
    const BlurOperator op = build_operator(g, KernelSpec{0.08});
    Signal zero{g, Eigen::VectorXd::Zero(g.num_nodes())};
    const PenalizerSpec spec{0.5, 0.7, testutil::random_theta(g, 4), 1e-3};

    CHECK(objective(zero, zero, op, spec, true) == 0.0);
    CHECK(objective(zero, zero, op, spec, false) == 0.0);

    for (std::uint64_t k = 0; k < 20; ++k) {
        const Signal u = testutil::random_signal(g, 500 + k);
        const Signal v = testutil::random_signal(g, 600 + k);
        const double smoothed = objective(u, v, op, spec, true);
        const double exact = objective(u, v, op, spec, false);
        CHECK(smoothed <= exact + 1e-14);
        CHECK(exact - smoothed <= spec.alpha2 * g.n * spec.beta + 1e-14);
    }
}

TEST_CASE("objective at the order-zero Tikhonov minimizer matches the quadratic form") {
    const Grid g = make_grid(24);
    const BlurOperator op = build_operator(g, KernelSpec{0.06});
    const Signal v = apply(op, synth_signal(SignalKind::example31, g));
    const double alpha = 0.05;

    const Eigen::VectorXd u_star = testutil::tikhonov_reference(op, v.values, alpha);
    const Signal u{g, u_star};
    const PenalizerSpec spec{alpha, alpha, WeightField::constant(g, 0.0), 1e-3};

    const double expected = g.h * (op.matrix * u_star - v.values).squaredNorm() +
                            alpha * g.h * u_star.squaredNorm();
    CHECK(objective(u, v, op, spec, true) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(objective(u, v, op, spec, false) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("gradient matches central finite differences on 50 random problems") {
    for (std::uint64_t k = 0; k < 50; ++k) {
        const int n = 8 + static_cast<int>(k % 17);
        const Grid g = make_grid(n);
        const BlurOperator op = build_operator(g, KernelSpec{0.05 + 0.01 * (k % 5)});
        const Signal u = testutil::random_signal(g, 700 + k);
        const Signal v = testutil::random_signal(g, 800 + k);
        const PenalizerSpec spec{rng::uniform(900, k, 1e-3, 1.0),
                                 rng::uniform(901, k, 1e-3, 1.0), testutil::random_theta(g, k),
                                 rng::uniform(902, k, 1e-3, 0.1)};

        const Eigen::VectorXd analytic = gradient(u, v, op, spec).values;
        const Eigen::VectorXd fd = testutil::fd_gradient(u, v, op, spec);
        const double rel = (analytic - fd).cwiseAbs().maxCoeff() /
                           std::max(analytic.cwiseAbs().maxCoeff(), 1e-12);
        CHECK(rel <= 1e-5);
    }
}

TEST_CASE("gradient closed form for theta == 0") {
    const Grid g = make_grid(30);
    const BlurOperator op = build_operator(g, KernelSpec{0.05});
    const Signal u = testutil::random_signal(g, 11);
    const Signal v = testutil::random_signal(g, 12);
    const double alpha1 = 0.3;
    const PenalizerSpec spec{alpha1, 0.9, WeightField::constant(g, 0.0), 1e-3};

    const Eigen::VectorXd expected =
        2.0 * g.h * (op.matrix.transpose() * (op.matrix * u.values - v.values)) +
        2.0 * alpha1 * g.h * u.values;
    CHECK((gradient(u, v, op, spec).values - expected).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("gradient vanishes at the theta == 0 closed-form minimizer") {
    const Grid g = make_grid(40);
    const BlurOperator op = build_operator(g, KernelSpec{0.05});
    const Signal v = apply(op, synth_signal(SignalKind::example32, g));
    const double alpha = 0.1;
    const Signal u{g, testutil::tikhonov_reference(op, v.values, alpha)};
    const PenalizerSpec spec{alpha, alpha, WeightField::constant(g, 0.0), 1e-3};
    CHECK(gradient(u, v, op, spec).values.cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("domination and reverse inequality") {
    const Grid g = make_grid(130);
    for (std::uint64_t k = 0; k < 1000; ++k) {
        const Signal u = testutil::random_signal(g, 3000 + k);
        const WeightField theta = testutil::random_theta(g, k);
        CHECK(weighted_tv(u, theta) <= tv_seminorm(u));
    }
    for (double eps : {0.1, 0.5, 0.9}) {
        for (std::uint64_t k = 0; k < 100; ++k) {
            const Signal u = testutil::random_signal(g, 4000 + k);
            const WeightField theta = testutil::random_theta_above(g, k, eps);
            const double min_edge = theta.edge_theta.minCoeff();
            CHECK(tv_seminorm(u) <= weighted_tv(u, theta) / min_edge);
        }
    }
}

TEST_CASE("weighted_tv is absolutely homogeneous") {
    const Grid g = make_grid(25);
    for (std::uint64_t k = 0; k < 50; ++k) {
        const Signal u = testutil::random_signal(g, 5000 + k);
        const WeightField theta = testutil::random_theta(g, k);
        const double c = rng::uniform(5100, k, -3.0, 3.0);
        const Signal cu{g, c * u.values};
        CHECK(weighted_tv(cu, theta) ==
              doctest::Approx(std::abs(c) * weighted_tv(u, theta)).epsilon(1e-12));
    }
}

TEST_CASE("objective is convex along random segments") {
    const Grid g = make_grid(30);
    const BlurOperator op = build_operator(g, KernelSpec{0.05});
    const Signal v = testutil::random_signal(g, 1);
    const PenalizerSpec spec{0.4, 0.6, testutil::random_theta(g, 2), 1e-3};
    for (std::uint64_t k = 0; k < 100; ++k) {
        const Signal u1 = testutil::random_signal(g, 6000 + k);
        const Signal u2 = testutil::random_signal(g, 7000 + k);
        const double lam = rng::uniform(6100, k, 0.0, 1.0);
        const Signal mix{g, lam * u1.values + (1.0 - lam) * u2.values};
        for (bool smoothed : {false, true}) {
            CHECK(objective(mix, v, op, spec, smoothed) <=
                  lam * objective(u1, v, op, spec, smoothed) +
                      (1.0 - lam) * objective(u2, v, op, spec, smoothed) + 1e-10);
        }
    }
}

TEST_CASE("smoothed Hessian quadratic form stays strictly positive for max theta <= 0.99") {
    const Grid g = make_grid(30);
    const BlurOperator op = build_operator(g, KernelSpec{0.05});
    const double alpha1 = 0.25;
    Eigen::VectorXd theta_values(g.num_nodes());
    for (int j = 0; j <= g.n; ++j) {
        theta_values[j] = 0.99 * rng::uniform01(8, static_cast<std::uint64_t>(j));
    }
    const WeightField theta = WeightField::from_values(g, theta_values);
    const PenalizerSpec spec{alpha1, 0.7, theta, 1e-3};
    const Signal u = testutil::random_signal(g, 9);

    // d^T H d = 2h d^T A^T A d + 2 alpha1 h sum (1-theta) d^2
    //           + alpha2 sum edge_theta beta^2 / (du^2+beta^2)^(3/2) (dd)^2
    for (std::uint64_t k = 0; k < 100; ++k) {
        const Eigen::VectorXd d = testutil::random_signal(g, 9000 + k).values;
        double form = 2.0 * g.h * (op.matrix * d).squaredNorm();
        for (int j = 0; j <= g.n; ++j) {
            form += 2.0 * alpha1 * g.h * (1.0 - theta.theta[j]) * d[j] * d[j];
        }
        for (int i = 0; i < g.n; ++i) {
            const double du = u.values[i + 1] - u.values[i];
            const double dd = d[i + 1] - d[i];
            form += spec.alpha2 * theta.edge_theta[i] * spec.beta * spec.beta /
                    std::pow(du * du + spec.beta * spec.beta, 1.5) * dd * dd;
        }
        CHECK(form >= 2.0 * alpha1 * g.h * (1.0 - 0.99) * d.squaredNorm());
    }
}
