#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ptaplan/lp/backend.hpp"
#include "ptaplan/milfp/problem.hpp"

namespace ptaplan::milfp {

/// One branching restriction: w_j >= k.u (lower) or w_j <= k.u (upper),
/// with k an integer bound in original y units.
struct BranchRow {
  int j = -1;
  bool is_lower = false;
  double k = 0.0;
};

struct BnbNode {
  long id = 0;
  std::vector<BranchRow> branch_rows;
  double parent_bound = -kInf;
  int depth = 0;
};

enum class MilfpStatus { Optimal, Infeasible, NodeLimit, TimeLimit };

inline const char* to_string(MilfpStatus s) {
  switch (s) {
    case MilfpStatus::Optimal: return "Optimal";
    case MilfpStatus::Infeasible: return "Infeasible";
    case MilfpStatus::NodeLimit: return "NodeLimit";
    case MilfpStatus::TimeLimit: return "TimeLimit";
  }
  return "?";
}

struct MilfpSolution {
  MilfpStatus status = MilfpStatus::Infeasible;
  std::vector<double> x_star;
  std::vector<double> y_star;  // integral for Optimal
  double objective = 0.0;      // ratio recomputed at (x_star, y_star)
  long nodes_explored = 0;
  std::vector<std::pair<long, double>> incumbent_history;  // (node id, LP objective)
};

struct BnbConfig {
  double tol_int = 1e-6;    // |v - round(v)| for the integrality test
  double tol_feas = 1e-7;
  double u_min = 1e-10;     // below: node treated as numerically infeasible
  double eps_den = 1e-9;    // denominator floor for (RP)-space solves
  double rel_obj_tol = 1e-9;
  long node_limit = 100000;
  double time_limit_s = 600.0;
  bool expand_equalities = false;  // solve on the literal all-<= form of (P)
  lp::LpConfig lp;
  const lp::LpBackend* backend = nullptr;  // null: bundled solver
};

/// Combined Charnes-Cooper transformation and branch-and-bound.
/// Node selection is best-first by parent LP bound (ties: smallest node id);
/// branching picks the most-fractional w_j/u and appends homogenized rows
/// w_j >= ceil(.)u / w_j <= floor(.)u. When the denominator is the constant
/// q0 > 0, nodes are solved directly on (RP) variables (plain MILP path).
MilfpSolution solve_milfp(const MilfpProblem& prob, const BnbConfig& cfg = {});

}  // namespace ptaplan::milfp
