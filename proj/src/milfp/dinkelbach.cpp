#include "ptaplan/milfp/dinkelbach.hpp"

#include <cmath>

#include "ptaplan/common/errors.hpp"

namespace ptaplan::milfp {

DinkelbachResult dinkelbach_oracle(const LfpProblem& lfp, double tol, int max_iter,
                                   double eps_den, const lp::LpConfig& lp_cfg) {
  const MilfpProblem& p = lfp.prob;
  p.validate();
  const int nx = p.num_x();
  const int ny = p.num_y();

  // (RP) constraint set on the original variables, denominator floored.
  lp::LpProblem rp;
  for (int i = 0; i < nx; ++i) rp.add_var(p.x_lo[i], p.x_hi[i], 0.0);
  for (int j = 0; j < ny; ++j) rp.add_var(p.y_lo[j], p.y_hi[j], 0.0);
  for (const MilfpRow& r : p.rows) {
    std::vector<std::pair<int, double>> coeffs;
    for (const auto& [i, v] : r.x_coeffs) coeffs.emplace_back(i, v);
    for (const auto& [j, v] : r.y_coeffs) coeffs.emplace_back(nx + j, v);
    rp.add_row(std::move(coeffs), r.sense, r.rhs);
  }
  {
    std::vector<std::pair<int, double>> den;
    for (int i = 0; i < nx; ++i)
      if (p.denominator.x_coeffs[i] != 0.0) den.emplace_back(i, p.denominator.x_coeffs[i]);
    for (int j = 0; j < ny; ++j)
      if (p.denominator.y_coeffs[j] != 0.0) den.emplace_back(nx + j, p.denominator.y_coeffs[j]);
    if (!den.empty()) rp.add_row(std::move(den), Sense::Ge, eps_den - p.denominator.constant);
  }

  auto split = [&](const std::vector<double>& v) {
    std::vector<double> x(v.begin(), v.begin() + nx);
    std::vector<double> y(v.begin() + nx, v.end());
    return std::pair{std::move(x), std::move(y)};
  };

  auto first = lp::solve_lp(rp, lp_cfg);
  if (first.status == lp::LpStatus::Infeasible) return {};
  if (first.status != lp::LpStatus::Optimal)
    throw NumericalFailure("dinkelbach_oracle: feasibility solve failed");

  auto [x0, y0] = split(first.primal);
  double lambda = p.numerator.value(x0, y0) / p.denominator.value(x0, y0);

  DinkelbachResult res;
  res.feasible = true;
  for (int it = 1; it <= max_iter; ++it) {
    res.iterations = it;
    for (int i = 0; i < nx; ++i)
      rp.c[i] = p.numerator.x_coeffs[i] - lambda * p.denominator.x_coeffs[i];
    for (int j = 0; j < ny; ++j)
      rp.c[nx + j] = p.numerator.y_coeffs[j] - lambda * p.denominator.y_coeffs[j];
    auto sol = lp::solve_lp(rp, lp_cfg);
    if (sol.status != lp::LpStatus::Optimal)
      throw NumericalFailure("dinkelbach_oracle: parametric subproblem not optimal");
    const double f = sol.objective + p.numerator.constant - lambda * p.denominator.constant;
    auto [x, y] = split(sol.primal);
    const double lambda_next = p.numerator.value(x, y) / p.denominator.value(x, y);
    if (std::abs(f) <= tol * (1.0 + std::abs(lambda))) {
      res.value = lambda_next;
      return res;
    }
    lambda = lambda_next;
  }
  throw NoConvergence("dinkelbach_oracle: no convergence after " + std::to_string(max_iter) +
                      " iterations");
}

}  // namespace ptaplan::milfp
