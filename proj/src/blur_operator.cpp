#include "mixreg/blur_operator.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "mixreg/errors.hpp"

namespace mixreg {

double kernel_eval(const KernelSpec& spec, double t, double s) {
    const double d = t - s;
    return std::exp(-d * d / (2.0 * spec.sigma_b * spec.sigma_b)) /
           (std::sqrt(2.0 * std::numbers::pi) * spec.sigma_b);
}

BlurOperator build_operator(const Grid& grid, const KernelSpec& spec) {
    if (!(spec.sigma_b > 0.0)) {
        throw Error("build_operator: sigma_b must be positive");
    }
    const int n = grid.n;
    const double h = grid.h;
    const int period = 2 * (n + 1);  // half-sample reflection at -h/2 and 1+h/2

    // Cell-integrated kernel weight for integer node offset d >= 0:
    // mass of the Gaussian over [(d-1/2)h, (d+1/2)h].
    const double inv = 1.0 / (spec.sigma_b * std::sqrt(2.0));
    const int reach = static_cast<int>(std::ceil(9.0 * spec.sigma_b / h)) + 1;
    std::vector<double> cell(reach + 1);
    for (int d = 0; d <= reach; ++d) {
        cell[d] = 0.5 * (std::erf((d + 0.5) * h * inv) - std::erf((d - 0.5) * h * inv));
    }

    const auto fold = [&](int l) {
        int r = l % period;
        if (r < 0) r += period;
        return r <= n ? r : 2 * n + 1 - r;
    };

    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n + 1, n + 1);
    for (int i = 0; i <= n; ++i) {
        for (int l = i - reach; l <= i + reach; ++l) {
            A(i, fold(l)) += cell[std::abs(i - l)];
        }
    }
    return BlurOperator{grid, std::move(A), spec, Boundary::reflexive};
}

namespace {
void check_grid(const BlurOperator& op, const Signal& s, const char* what) {
    if (!(s.grid == op.grid)) {
        throw DimensionError(std::string(what) + ": signal grid does not match operator grid");
    }
}
}  // namespace

Signal apply(const BlurOperator& op, const Signal& f) {
    check_grid(op, f, "apply");
    return Signal{f.grid, op.matrix * f.values};
}

Signal apply_adjoint(const BlurOperator& op, const Signal& r) {
    check_grid(op, r, "apply_adjoint");
    return Signal{r.grid, op.matrix.transpose() * r.values};
}

}  // namespace mixreg
