#pragma once

#include <utility>
#include <vector>

#include "ptaplan/lp/problem.hpp"
#include "ptaplan/milfp/problem.hpp"

namespace ptaplan::milfp {

/// Problem (TP): the LP image of (RP) under u = 1/denominator, z = u.x,
/// w = u.y. Columns are ordered z, w, u. Beyond the paper's statement (model
/// rows, normalization row, nonnegativity) the transform emits homogenized
/// variable-bound rows lo.u <= z <= hi.u; without them (TP) loses equivalence
/// with a bounded (RP). Variables with negative lower bounds are shifted to
/// nonnegative ones first (v' = v - lo), recorded in x_shift/y_shift.
struct CcLpProblem {
  lp::LpProblem lp;
  int nx = 0;
  int ny = 0;
  int u_col = 0;
  int norm_row = -1;     // the single normalization equality row
  int model_row_count = 0;
  std::vector<double> x_shift, y_shift;

  int z_col(int i) const { return i; }
  int w_col(int j) const { return nx + j; }
};

/// Eqs. of the C&C substitution applied to a relaxed problem.
/// Throws ConfigError when any variable bound is infinite.
CcLpProblem charnes_cooper_transform(const LfpProblem& lfp);

/// x = z/u, y_relaxed = w/u (shifts undone). Throws DegenerateScale when
/// u <= u_min.
std::pair<std::vector<double>, std::vector<double>> recover_solution(
    const lp::LpSolution& cc_sol, const CcLpProblem& prob, double u_min = 1e-10);

}  // namespace ptaplan::milfp
