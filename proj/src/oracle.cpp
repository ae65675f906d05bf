#include "mixreg/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "mixreg/errors.hpp"
#include "mixreg/rng.hpp"

namespace mixreg::oracle {

double dual_sup_weighted(const Signal& u, const WeightField& theta, int grid_levels) {
    if (!(u.grid == theta.grid)) {
        throw DimensionError("dual_sup_weighted: grid mismatch");
    }
    const int n = u.grid.n;
    if (n > 10) {
        throw Error("dual_sup_weighted: refusing n > 10 (exhaustive search)");
    }
    if (grid_levels < 3) {
        throw Error("dual_sup_weighted: grid_levels must be >= 3");
    }

    std::vector<double> coeff(n);
    for (int i = 0; i < n; ++i) {
        coeff[i] = (u.values[i + 1] - u.values[i]) * theta.edge_theta[i];
    }
    std::vector<double> levels(grid_levels);
    for (int k = 0; k < grid_levels; ++k) {
        levels[k] = -1.0 + 2.0 * k / (grid_levels - 1);
    }

    // Odometer over all nu in levels^n.
    std::vector<int> digit(n, 0);
    double best = -std::numeric_limits<double>::infinity();
    while (true) {
        double pairing = 0.0;
        for (int i = 0; i < n; ++i) pairing += coeff[i] * levels[digit[i]];
        best = std::max(best, pairing);

        int pos = 0;
        while (pos < n && ++digit[pos] == grid_levels) {
            digit[pos] = 0;
            ++pos;
        }
        if (pos == n) break;
    }
    return best;
}

BruteResult brute_minimize(const Signal& v, const BlurOperator& op, const PenalizerSpec& spec) {
    if (!(v.grid == op.grid) || !(v.grid == spec.theta.grid)) {
        throw DimensionError("brute_minimize: grid mismatch");
    }
    const int n = v.grid.n;
    if (n > 8) {
        throw Error("brute_minimize: refusing n > 8");
    }

    const double h = v.grid.h;
    const Eigen::MatrixXd At = op.matrix.transpose();
    Eigen::VectorXd residual(n + 1);
    const auto f = [&](const Eigen::VectorXd& x) {
        residual.noalias() = op.matrix * x;
        residual -= v.values;
        double val = h * residual.squaredNorm();
        for (int j = 0; j <= n; ++j) {
            val += spec.alpha1 * h * (1.0 - spec.theta.theta[j]) * x[j] * x[j];
        }
        for (int i = 0; i < n; ++i) {
            const double d = x[i + 1] - x[i];
            val += spec.alpha2 * spec.theta.edge_theta[i] *
                   (std::sqrt(d * d + spec.beta * spec.beta) - spec.beta);
        }
        return val;
    };
    const auto g = [&](const Eigen::VectorXd& x) {
        residual.noalias() = op.matrix * x;
        residual -= v.values;
        Eigen::VectorXd grad = 2.0 * h * (At * residual);
        for (int j = 0; j <= n; ++j) {
            grad[j] += 2.0 * spec.alpha1 * h * (1.0 - spec.theta.theta[j]) * x[j];
        }
        for (int i = 0; i < n; ++i) {
            const double d = x[i + 1] - x[i];
            const double t =
                spec.alpha2 * spec.theta.edge_theta[i] * d / std::sqrt(d * d + spec.beta * spec.beta);
            grad[i] -= t;
            grad[i + 1] += t;
        }
        return grad;
    };

    // Conservative Lipschitz estimate for the fallback step length.
    const double lip = 2.0 * v.grid.h * op.matrix.squaredNorm() + 2.0 * spec.alpha1 * v.grid.h +
                       4.0 * spec.alpha2 / spec.beta;
    const double fallback_step = 1.0 / lip;
    constexpr double kGradTol = 1e-10;
    constexpr int kMaxIters = 200000;
    constexpr std::uint64_t kSeed = 0xC0FFEEULL;

    const double amp = std::max(1.0, v.values.cwiseAbs().maxCoeff());
    std::vector<Eigen::VectorXd> starts;
    starts.push_back(Eigen::VectorXd::Zero(n + 1));
    starts.push_back(v.values);
    for (int s = 0; s < 20; ++s) {
        Eigen::VectorXd x(n + 1);
        for (int j = 0; j <= n; ++j) {
            x[j] = amp * rng::gaussian(kSeed, static_cast<std::uint64_t>(s * (n + 1) + j));
        }
        starts.push_back(std::move(x));
    }

    BruteResult best{Signal{v.grid, starts.front()}, std::numeric_limits<double>::infinity()};
    for (const auto& start : starts) {
        Eigen::VectorXd x = start;
        Eigen::VectorXd grad = g(x);
        double fx = f(x);
        Eigen::VectorXd x_prev = x, grad_prev = grad;
        bool have_prev = false;

        // Nonmonotone (last-10) Armijo keeps the Barzilai-Borwein steps
        // effective on ill-conditioned instances.
        std::vector<double> recent(10, fx);
        int recent_pos = 0;

        for (int it = 0; it < kMaxIters && grad.cwiseAbs().maxCoeff() > kGradTol; ++it) {
            double step = fallback_step;
            if (have_prev) {
                const Eigen::VectorXd s_vec = x - x_prev;
                const Eigen::VectorXd y_vec = grad - grad_prev;
                const double sy = s_vec.dot(y_vec);
                if (sy > 0.0) step = s_vec.squaredNorm() / sy;
            }
            const double gnorm2 = grad.squaredNorm();
            const double f_ref = *std::max_element(recent.begin(), recent.end());
            Eigen::VectorXd x_new;
            double f_new = 0.0;
            int halvings = 0;
            for (; halvings < 60; ++halvings) {
                x_new = x - step * grad;
                f_new = f(x_new);
                if (f_new <= f_ref - 1e-4 * step * gnorm2) break;
                step *= 0.5;
            }
            if (halvings == 60) break;  // no representable progress: numerically stationary
            x_prev = x;
            grad_prev = grad;
            have_prev = true;
            x = std::move(x_new);
            fx = f_new;
            recent[recent_pos] = fx;
            recent_pos = (recent_pos + 1) % static_cast<int>(recent.size());
            grad = g(x);
        }
        if (fx < best.objective) {
            best.objective = fx;
            best.u.values = x;
        }
    }
    return best;
}

}  // namespace mixreg::oracle
