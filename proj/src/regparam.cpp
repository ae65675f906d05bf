#include "mixreg/regparam.hpp"

#include <cmath>
#include <sstream>

#include "mixreg/errors.hpp"

namespace mixreg {

double discrepancy(double alpha, const SolveFn& solve_fn) {
    return solve_fn(alpha).discrepancy;
}

MorozovResult morozov_select(const SolveFn& solve_fn, const MorozovSpec& spec) {
    if (!(spec.tau >= 1.0)) throw Error("morozov_select: tau must be >= 1");
    if (!(spec.delta > 0.0)) throw Error("morozov_select: delta must be positive");
    if (!(spec.log_alpha_low < spec.log_alpha_high)) {
        throw Error("morozov_select: log_alpha range is empty");
    }

    const auto solve_degraded = [](const SolveReport& r) {
        for (const auto& note : r.notes) {
            if (note.find("linear solve degraded") != std::string::npos) return true;
        }
        return false;
    };

    const double target = spec.tau * spec.delta;
    double lo = spec.log_alpha_low;
    double hi = spec.log_alpha_high;

    SolveReport report_low = solve_fn(std::pow(10.0, lo));
    // The default low endpoint sits far below the numerical-rank floor of the
    // blur; if that solve degraded and fails the bracket test, move the
    // endpoint up to where the solve is trustworthy before giving up.
    while (!(report_low.discrepancy < target) && solve_degraded(report_low) &&
           lo + 2.0 < hi) {
        lo += 2.0;
        report_low = solve_fn(std::pow(10.0, lo));
    }
    SolveReport report_high = solve_fn(std::pow(10.0, hi));
    double disc_lo = report_low.discrepancy;
    double disc_hi = report_high.discrepancy;
    if (!(disc_lo < target && target < disc_hi)) {
        std::ostringstream msg;
        msg << "morozov_select: target " << target << " not bracketed; discrepancy("
            << std::pow(10.0, lo) << ") = " << disc_lo << ", discrepancy(" << std::pow(10.0, hi)
            << ") = " << disc_hi;
        throw NoBracketError(msg.str(), disc_lo, disc_hi);
    }

    MorozovResult result{std::pow(10.0, hi), std::move(report_high)};
    std::vector<std::string> warnings;
    for (int b = 0; b < spec.max_bisections; ++b) {
        const double mid = 0.5 * (lo + hi);
        SolveReport report = solve_fn(std::pow(10.0, mid));
        const double d = report.discrepancy;
        result = MorozovResult{std::pow(10.0, mid), std::move(report)};
        if (std::abs(d - target) <= spec.bisect_tol * target) {
            break;
        }
        // The bracket orientation is increasing; flag excursions outside it.
        if (d < disc_lo - 1e-6 || d > disc_hi + 1e-6) {
            warnings.push_back("morozov: non-monotone discrepancy at alpha = " +
                               std::to_string(std::pow(10.0, mid)));
        }
        if (d < target) {
            lo = mid;
            disc_lo = d;
        } else {
            hi = mid;
            disc_hi = d;
        }
    }
    for (auto& w : warnings) result.report.notes.push_back(std::move(w));
    return result;
}

SolveFn make_tikhonov_solve_fn(Signal v, BlurOperator op) {
    return [v = std::move(v), op = std::move(op)](double alpha) {
        return solve_tikhonov(v, op, alpha);
    };
}

SolveFn make_tv_solve_fn(Signal v, BlurOperator op, double beta, SolverConfig cfg) {
    WeightField theta = WeightField::constant(v.grid, 1.0);
    return [v = std::move(v), op = std::move(op), theta = std::move(theta), beta,
            cfg](double alpha) {
        PenalizerSpec spec{alpha, alpha, theta, beta};
        return solve(v, op, spec, cfg);
    };
}

SolveFn make_mixed_solve_fn(Signal v, BlurOperator op, WeightField theta, double beta,
                            SolverConfig cfg, double tv_ratio) {
    return [v = std::move(v), op = std::move(op), theta = std::move(theta), beta, cfg,
            tv_ratio](double alpha) {
        // Coupling rule: a single Morozov parameter scales the whole mixture.
        PenalizerSpec spec{alpha, tv_ratio * alpha, theta, beta};
        return solve(v, op, spec, cfg);
    };
}

}  // namespace mixreg
