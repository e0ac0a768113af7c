#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ptaplan/common/errors.hpp"
#include "ptaplan/common/numeric.hpp"

namespace ptaplan::lp {

enum class Sense : char { Le = 'L', Eq = 'E', Ge = 'G' };

struct Row {
  std::vector<std::pair<int, double>> coeffs;  // (column, value), column indices ascending
  Sense sense = Sense::Le;
  double rhs = 0.0;

  double activity(const std::vector<double>& x) const {
    double a = 0.0;
    for (const auto& [j, v] : coeffs) a += v * x[static_cast<std::size_t>(j)];
    return a;
  }
};

/// Minimization LP: min c.x  s.t. rows, var_lo <= x <= var_hi.
/// Bounds may be +-infinity except where a consumer (the C&C transform)
/// requires otherwise.
struct LpProblem {
  std::vector<double> c;
  std::vector<Row> rows;
  std::vector<double> var_lo;
  std::vector<double> var_hi;
  std::vector<std::string> names;  // optional; empty or one per variable

  int num_vars() const { return static_cast<int>(c.size()); }
  int num_rows() const { return static_cast<int>(rows.size()); }

  int add_var(double lo, double hi, double cost, std::string name = {}) {
    c.push_back(cost);
    var_lo.push_back(lo);
    var_hi.push_back(hi);
    if (!name.empty() || !names.empty()) {
      names.resize(c.size() - 1, "");
      names.push_back(std::move(name));
    }
    return num_vars() - 1;
  }

  void add_row(std::vector<std::pair<int, double>> coeffs, Sense sense, double rhs) {
    rows.push_back(Row{std::move(coeffs), sense, rhs});
  }

  void validate() const {
    const int n = num_vars();
    if (var_lo.size() != c.size() || var_hi.size() != c.size())
      throw ConfigError("LpProblem: bound vectors do not match variable count");
    for (double v : c)
      if (std::isnan(v) || std::isinf(v)) throw ConfigError("LpProblem: non-finite objective coefficient");
    for (int j = 0; j < n; ++j) {
      if (std::isnan(var_lo[j]) || std::isnan(var_hi[j]))
        throw ConfigError("LpProblem: NaN variable bound");
      if (var_lo[j] > var_hi[j]) throw ConfigError("LpProblem: crossed variable bounds");
    }
    for (const Row& r : rows) {
      if (std::isnan(r.rhs) || std::isinf(r.rhs)) throw ConfigError("LpProblem: non-finite rhs");
      for (const auto& [j, v] : r.coeffs) {
        if (j < 0 || j >= n) throw ConfigError("LpProblem: row coefficient index out of range");
        if (std::isnan(v) || std::isinf(v)) throw ConfigError("LpProblem: non-finite row coefficient");
      }
    }
  }
};

enum class LpStatus { Optimal, Infeasible, Unbounded, IterLimit };

inline const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::Optimal: return "Optimal";
    case LpStatus::Infeasible: return "Infeasible";
    case LpStatus::Unbounded: return "Unbounded";
    case LpStatus::IterLimit: return "IterLimit";
  }
  return "?";
}

/// Nonbasic variable states carried in a warm start (values match
/// SimplexSolver internals; kFree is a free variable parked at zero).
enum class VarState : signed char { Basic = 0, AtLower = 1, AtUpper = 2, Free = 3 };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<double> primal;
  double objective = 0.0;
  long iterations = 0;
  // Final basis (column ids; slack of row i is num_vars()+i) and nonbasic
  // states, reusable as a warm start for a problem extended with extra rows.
  std::vector<int> basis;
  std::vector<VarState> states;
};

struct LpConfig {
  double tol_feas = 1e-7;       // row/bound feasibility, certified on return
  double tol_cost = 1e-9;       // reduced-cost optimality threshold
  double tol_pivot = 1e-10;     // smallest usable FTRAN pivot
  long max_iters = 0;           // 0 = automatic from problem size
  int bland_threshold = 50;     // degenerate-pivot streak before Bland's rule
  int refactor_interval = 100;  // eta updates between LU refactorizations
  bool scale = true;            // geometric-mean row/column equilibration
};

/// Basis of a previously solved problem whose rows form a prefix of the
/// rows of the problem being solved now.
struct WarmStart {
  std::vector<int> basis;
  std::vector<VarState> states;
};

/// Bundled solver: bounded-variable two-phase revised simplex.
/// Deterministic for fixed input and config. Throws NumericalFailure when
/// pivoting stalls beyond the anti-cycling budget or the result cannot be
/// certified feasible.
LpSolution solve_lp(const LpProblem& p, const LpConfig& cfg = {}, const WarmStart* warm = nullptr);

}  // namespace ptaplan::lp
