#include "ptaplan/milfp/check.hpp"

#include <cmath>

namespace ptaplan::milfp {

FeasibilityReport check_solution(const MilfpProblem& prob, const std::vector<double>& x,
                                 const std::vector<double>& y) {
  if (x.size() != static_cast<std::size_t>(prob.num_x()) ||
      y.size() != static_cast<std::size_t>(prob.num_y()))
    throw DecodeError("check_solution: dimension mismatch");

  FeasibilityReport rep;
  for (const MilfpRow& r : prob.rows) {
    const double act = r.activity(x, y);
    double v = 0.0;
    switch (r.sense) {
      case Sense::Le: v = act - r.rhs; break;
      case Sense::Ge: v = r.rhs - act; break;
      case Sense::Eq: v = std::abs(act - r.rhs); break;
    }
    rep.max_row_violation = std::max(rep.max_row_violation, v);
  }
  for (int i = 0; i < prob.num_x(); ++i) {
    const auto u = static_cast<std::size_t>(i);
    rep.max_bound_violation = std::max(rep.max_bound_violation, prob.x_lo[u] - x[u]);
    rep.max_bound_violation = std::max(rep.max_bound_violation, x[u] - prob.x_hi[u]);
  }
  for (int j = 0; j < prob.num_y(); ++j) {
    const auto u = static_cast<std::size_t>(j);
    rep.max_bound_violation = std::max(rep.max_bound_violation, prob.y_lo[u] - y[u]);
    rep.max_bound_violation = std::max(rep.max_bound_violation, y[u] - prob.y_hi[u]);
    rep.max_integrality_deviation =
        std::max(rep.max_integrality_deviation, std::abs(y[u] - std::round(y[u])));
  }
  rep.max_bound_violation = std::max(rep.max_bound_violation, 0.0);
  rep.denominator = prob.denominator.value(x, y);
  rep.objective = prob.numerator.value(x, y) / rep.denominator;
  return rep;
}

}  // namespace ptaplan::milfp
