#include "ptaplan/milfp/transform.hpp"

#include <cmath>

namespace ptaplan::milfp {

CcLpProblem charnes_cooper_transform(const LfpProblem& lfp) {
  const MilfpProblem& p = lfp.prob;
  p.validate();

  const int nx = p.num_x();
  const int ny = p.num_y();

  CcLpProblem cc;
  cc.nx = nx;
  cc.ny = ny;
  cc.u_col = nx + ny;
  cc.x_shift.assign(static_cast<std::size_t>(nx), 0.0);
  cc.y_shift.assign(static_cast<std::size_t>(ny), 0.0);

  for (int i = 0; i < nx; ++i) {
    if (std::isinf(p.x_lo[i]) || std::isinf(p.x_hi[i]))
      throw ConfigError("charnes_cooper_transform: infinite x bound (homogenization undefined)");
    if (p.x_lo[i] < 0.0) cc.x_shift[static_cast<std::size_t>(i)] = p.x_lo[i];
  }
  for (int j = 0; j < ny; ++j) {
    if (std::isinf(p.y_lo[j]) || std::isinf(p.y_hi[j]))
      throw ConfigError("charnes_cooper_transform: infinite y bound (homogenization undefined)");
    if (p.y_lo[j] < 0.0) cc.y_shift[static_cast<std::size_t>(j)] = p.y_lo[j];
  }

  // Shifted constants: p0' = p0 + p1.s, idem q0'.
  double p0 = p.numerator.constant;
  double q0 = p.denominator.constant;
  for (int i = 0; i < nx; ++i) {
    p0 += p.numerator.x_coeffs[static_cast<std::size_t>(i)] * cc.x_shift[static_cast<std::size_t>(i)];
    q0 += p.denominator.x_coeffs[static_cast<std::size_t>(i)] * cc.x_shift[static_cast<std::size_t>(i)];
  }
  for (int j = 0; j < ny; ++j) {
    p0 += p.numerator.y_coeffs[static_cast<std::size_t>(j)] * cc.y_shift[static_cast<std::size_t>(j)];
    q0 += p.denominator.y_coeffs[static_cast<std::size_t>(j)] * cc.y_shift[static_cast<std::size_t>(j)];
  }

  lp::LpProblem& tp = cc.lp;
  for (int i = 0; i < nx; ++i)
    tp.add_var(0.0, kInf, p.numerator.x_coeffs[static_cast<std::size_t>(i)]);
  for (int j = 0; j < ny; ++j)
    tp.add_var(0.0, kInf, p.numerator.y_coeffs[static_cast<std::size_t>(j)]);
  tp.add_var(0.0, kInf, p0);  // u

  // Model rows: A1 z + A2 w - b'.u  (sense)  0, rhs shifted by -A.s.
  for (const MilfpRow& r : p.rows) {
    std::vector<std::pair<int, double>> coeffs;
    double rhs = r.rhs;
    for (const auto& [i, v] : r.x_coeffs) {
      coeffs.emplace_back(cc.z_col(i), v);
      rhs -= v * cc.x_shift[static_cast<std::size_t>(i)];
    }
    for (const auto& [j, v] : r.y_coeffs) {
      coeffs.emplace_back(cc.w_col(j), v);
      rhs -= v * cc.y_shift[static_cast<std::size_t>(j)];
    }
    coeffs.emplace_back(cc.u_col, -rhs);
    tp.add_row(std::move(coeffs), r.sense, 0.0);
  }
  cc.model_row_count = tp.num_rows();

  // Homogenized bound rows. Shifted lower bounds are >= 0; zero ones are the
  // native nonnegativity of z/w and need no row.
  auto bound_rows = [&](int col, double lo, double hi, double shift) {
    const double lo_s = lo - shift;
    const double hi_s = hi - shift;
    if (lo_s > 0.0) tp.add_row({{col, 1.0}, {cc.u_col, -lo_s}}, Sense::Ge, 0.0);
    tp.add_row({{col, 1.0}, {cc.u_col, -hi_s}}, Sense::Le, 0.0);
  };
  for (int i = 0; i < nx; ++i)
    bound_rows(cc.z_col(i), p.x_lo[static_cast<std::size_t>(i)], p.x_hi[static_cast<std::size_t>(i)],
               cc.x_shift[static_cast<std::size_t>(i)]);
  for (int j = 0; j < ny; ++j)
    bound_rows(cc.w_col(j), p.y_lo[static_cast<std::size_t>(j)], p.y_hi[static_cast<std::size_t>(j)],
               cc.y_shift[static_cast<std::size_t>(j)]);

  // Normalization: q0'.u + q1.z + q2.w = 1 (one equality row; it is what
  // enforces denominator positivity inside (TP)).
  {
    std::vector<std::pair<int, double>> coeffs;
    for (int i = 0; i < nx; ++i) {
      const double v = p.denominator.x_coeffs[static_cast<std::size_t>(i)];
      if (v != 0.0) coeffs.emplace_back(cc.z_col(i), v);
    }
    for (int j = 0; j < ny; ++j) {
      const double v = p.denominator.y_coeffs[static_cast<std::size_t>(j)];
      if (v != 0.0) coeffs.emplace_back(cc.w_col(j), v);
    }
    coeffs.emplace_back(cc.u_col, q0);
    cc.norm_row = tp.num_rows();
    tp.add_row(std::move(coeffs), Sense::Eq, 1.0);
  }
  return cc;
}

std::pair<std::vector<double>, std::vector<double>> recover_solution(
    const lp::LpSolution& cc_sol, const CcLpProblem& prob, double u_min) {
  const double u = cc_sol.primal.at(static_cast<std::size_t>(prob.u_col));
  if (!(u > u_min))
    throw DegenerateScale("recover_solution: scale u=" + std::to_string(u) +
                          " at or below u_min");
  std::vector<double> x(static_cast<std::size_t>(prob.nx));
  std::vector<double> y(static_cast<std::size_t>(prob.ny));
  for (int i = 0; i < prob.nx; ++i)
    x[static_cast<std::size_t>(i)] =
        cc_sol.primal[static_cast<std::size_t>(prob.z_col(i))] / u +
        prob.x_shift[static_cast<std::size_t>(i)];
  for (int j = 0; j < prob.ny; ++j)
    y[static_cast<std::size_t>(j)] =
        cc_sol.primal[static_cast<std::size_t>(prob.w_col(j))] / u +
        prob.y_shift[static_cast<std::size_t>(j)];
  return {std::move(x), std::move(y)};
}

}  // namespace ptaplan::milfp
