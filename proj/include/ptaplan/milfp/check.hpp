#pragma once

#include <vector>

#include "ptaplan/milfp/problem.hpp"

namespace ptaplan::milfp {

struct FeasibilityReport {
  double max_row_violation = 0.0;
  double max_bound_violation = 0.0;
  double max_integrality_deviation = 0.0;
  double denominator = 0.0;
  double objective = 0.0;

  bool feasible(double tol) const {
    return max_row_violation <= tol && max_bound_violation <= tol && denominator > 0.0;
  }
  bool integral(double tol) const { return max_integrality_deviation <= tol; }
};

/// Recomputes violations and the objective of a candidate point against the
/// original problem data. Never throws on violations; the report carries them.
FeasibilityReport check_solution(const MilfpProblem& prob, const std::vector<double>& x,
                                 const std::vector<double>& y);

}  // namespace ptaplan::milfp
