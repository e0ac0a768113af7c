#pragma once

#include "ptaplan/lp/problem.hpp"
#include "ptaplan/milfp/problem.hpp"

namespace ptaplan::milfp {

struct DinkelbachResult {
  bool feasible = false;
  double value = 0.0;
  int iterations = 0;
};

/// Parametric iteration lambda <- p(v)/q(v) from min (p - lambda q).v,
/// stopping when |min (p - lambda q).v| <= tol. Solved over the (RP)
/// constraint set with the denominator floored at eps_den. Verification
/// oracle for the C&C route; not used by the solver itself.
/// Throws NoConvergence after max_iter.
DinkelbachResult dinkelbach_oracle(const LfpProblem& lfp, double tol = 1e-10,
                                   int max_iter = 100, double eps_den = 1e-9,
                                   const lp::LpConfig& lp_cfg = {});

}  // namespace ptaplan::milfp
