#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "ptaplan/common/errors.hpp"
#include "ptaplan/common/numeric.hpp"
#include "ptaplan/lp/problem.hpp"

namespace ptaplan::milfp {

using lp::Sense;

/// c0 + cx.x + cy.y over the continuous (x) and integer (y) variables.
struct Affine {
  double constant = 0.0;
  std::vector<double> x_coeffs;
  std::vector<double> y_coeffs;

  double value(const std::vector<double>& x, const std::vector<double>& y) const {
    double v = constant;
    for (std::size_t i = 0; i < x_coeffs.size(); ++i) v += x_coeffs[i] * x[i];
    for (std::size_t j = 0; j < y_coeffs.size(); ++j) v += y_coeffs[j] * y[j];
    return v;
  }
};

struct MilfpRow {
  std::vector<std::pair<int, double>> x_coeffs;
  std::vector<std::pair<int, double>> y_coeffs;
  Sense sense = Sense::Le;
  double rhs = 0.0;

  double activity(const std::vector<double>& x, const std::vector<double>& y) const {
    double a = 0.0;
    for (const auto& [i, v] : x_coeffs) a += v * x[static_cast<std::size_t>(i)];
    for (const auto& [j, v] : y_coeffs) a += v * y[static_cast<std::size_t>(j)];
    return a;
  }
};

/// Problem (P):
///   min (p0 + p1.x + p2.y) / (q0 + q1.x + q2.y)
///   s.t. rows, x in [x_lo, x_hi], y integer in [y_lo, y_hi],
///        denominator > 0 on the feasible set.
///
/// The public type accepts =/>= rows; to_inequality_form() rewrites them as
/// <= pairs, giving the canonical all-inequality statement. All bounds must
/// be finite: branch-and-bound needs bounded integer domains and the C&C
/// transform homogenizes every bound.
struct MilfpProblem {
  Affine numerator;
  Affine denominator;
  std::vector<MilfpRow> rows;
  std::vector<double> x_lo, x_hi;
  std::vector<double> y_lo, y_hi;
  std::vector<std::string> var_names;  // optional; x labels then y labels

  int num_x() const { return static_cast<int>(x_lo.size()); }
  int num_y() const { return static_cast<int>(y_lo.size()); }

  int add_x(double lo, double hi, std::string name = {}) {
    x_lo.push_back(lo);
    x_hi.push_back(hi);
    numerator.x_coeffs.push_back(0.0);
    denominator.x_coeffs.push_back(0.0);
    if (!name.empty()) register_name(num_x() - 1, false, std::move(name));
    return num_x() - 1;
  }
  int add_y(double lo, double hi, std::string name = {}) {
    y_lo.push_back(lo);
    y_hi.push_back(hi);
    numerator.y_coeffs.push_back(0.0);
    denominator.y_coeffs.push_back(0.0);
    if (!name.empty()) register_name(num_y() - 1, true, std::move(name));
    return num_y() - 1;
  }
  void add_row(MilfpRow row) { rows.push_back(std::move(row)); }

  bool is_pure_milp() const {
    for (double v : denominator.x_coeffs)
      if (v != 0.0) return false;
    for (double v : denominator.y_coeffs)
      if (v != 0.0) return false;
    return true;
  }

  double objective_value(const std::vector<double>& x, const std::vector<double>& y) const {
    return numerator.value(x, y) / denominator.value(x, y);
  }

  void validate() const;

  /// Canonical (P): every row rewritten as <=; = rows become <=/>= pairs.
  MilfpProblem to_inequality_form() const;

 private:
  void register_name(int idx, bool is_y, std::string name) {
    const std::size_t slot = is_y ? x_lo.size() + static_cast<std::size_t>(idx)
                                  : static_cast<std::size_t>(idx);
    if (var_names.size() <= slot) var_names.resize(x_lo.size() + y_lo.size());
    var_names[slot] = std::move(name);
  }
};

/// Problem (RP): same data, integrality of y dropped.
struct LfpProblem {
  MilfpProblem prob;
};

/// Pure restructuring, no numeric change.
inline LfpProblem relax(const MilfpProblem& prob) {
  prob.validate();
  return LfpProblem{prob};
}

/// Compact JSON problem format {numerator, denominator, rows, bounds, integers}.
std::string to_json(const MilfpProblem& prob);
MilfpProblem milfp_from_json(const std::string& text);
MilfpProblem read_milfp_file(const std::string& path);
void write_milfp_file(const MilfpProblem& prob, const std::string& path);

}  // namespace ptaplan::milfp
