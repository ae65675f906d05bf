#pragma once

#include "mixreg/penalizers.hpp"

namespace mixreg {
// Brute-force ground truth for small instances. Shipped with the library so
// alternate implementations can cross-check against the same oracles.
namespace oracle {

/// Exhaustive dual evaluation of the weighted TV: maximizes
///   sum_i (u[i+1]-u[i]) * edge_theta[i] * nu_i
/// over nu_i on grid_levels equispaced values in [-1,1]. With levels {-1,0,1}
/// this equals sum edge_theta |du| exactly. Refuses n > 10 (combinatorial
/// blowup) and grid_levels < 3.
double dual_sup_weighted(const Signal& u, const WeightField& theta, int grid_levels);

struct BruteResult {
    Signal u;
    double objective;
};

/// Global minimum of the smoothed mixed objective by multi-start descent:
/// 20 seeded random starts plus 0 and v, Barzilai-Borwein steps safeguarded
/// by backtracking, run to |grad|_inf <= 1e-10. Deterministic (fixed internal
/// seed). Refuses n > 8.
BruteResult brute_minimize(const Signal& v, const BlurOperator& op, const PenalizerSpec& spec);

}  // namespace oracle
}  // namespace mixreg
