// Test-only oracles, independent of the solver paths they check:
//  - vertex_enum_lp: brute-force vertex enumeration for small bounded LPs
//  - grid_enum_milfp: exhaustive integer-grid enumeration for small MILFPs
//  - rng helpers for reproducible random instances
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "ptaplan/lp/problem.hpp"
#include "ptaplan/milfp/problem.hpp"
#include "ptaplan/milfp/transform.hpp"

namespace oracles {

// xorshift128+, self-contained so test streams never depend on libstdc++
// distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    s_[0] = seed ? seed : 0x9e3779b97f4a7c15ull;
    s_[1] = splitmix(s_[0]);
  }
  std::uint64_t next() {
    std::uint64_t x = s_[0];
    const std::uint64_t y = s_[1];
    s_[0] = y;
    x ^= x << 23;
    s_[1] = x ^ y ^ (x >> 17) ^ (y >> 26);
    return s_[1] + y;
  }
  double uniform(double a = 0.0, double b = 1.0) {
    const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return a + (b - a) * u;
  }
  int uniform_int(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  static std::uint64_t splitmix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::array<std::uint64_t, 2> s_;
};

struct VertexEnumResult {
  bool feasible = false;
  double objective = 0.0;
  std::vector<double> x;
};

namespace detail {

inline bool solve_dense(std::vector<std::vector<double>> a, std::vector<double> b,
                        std::vector<double>& out) {
  const std::size_t n = b.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a[i][k]) > std::abs(a[piv][k])) piv = i;
    if (std::abs(a[piv][k]) < 1e-10) return false;
    std::swap(a[k], a[piv]);
    std::swap(b[k], b[piv]);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = a[i][k] / a[k][k];
      if (f == 0.0) continue;
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  out.assign(n, 0.0);
  for (std::size_t k = n; k-- > 0;) {
    double s = b[k];
    for (std::size_t j = k + 1; j < n; ++j) s -= a[k][j] * out[j];
    out[k] = s / a[k][k];
  }
  return true;
}

}  // namespace detail

/// Exhaustive vertex enumeration. Valid for problems whose feasible set is
/// bounded (the random generators below always emit finite variable bounds).
inline VertexEnumResult vertex_enum_lp(const ptaplan::lp::LpProblem& p, double tol = 1e-7) {
  using ptaplan::lp::Sense;
  const int n = p.num_vars();

  struct Con {
    std::vector<double> a;
    double b;
    Sense sense;
  };
  std::vector<Con> cons;
  for (const auto& r : p.rows) {
    Con c{std::vector<double>(static_cast<std::size_t>(n), 0.0), r.rhs, r.sense};
    for (const auto& [j, v] : r.coeffs) c.a[static_cast<std::size_t>(j)] += v;
    cons.push_back(std::move(c));
  }
  for (int j = 0; j < n; ++j) {
    if (std::isfinite(p.var_lo[j])) {
      Con c{std::vector<double>(static_cast<std::size_t>(n), 0.0), p.var_lo[j], Sense::Ge};
      c.a[static_cast<std::size_t>(j)] = 1.0;
      cons.push_back(std::move(c));
    }
    if (std::isfinite(p.var_hi[j])) {
      Con c{std::vector<double>(static_cast<std::size_t>(n), 0.0), p.var_hi[j], Sense::Le};
      c.a[static_cast<std::size_t>(j)] = 1.0;
      cons.push_back(std::move(c));
    }
  }

  const int total = static_cast<int>(cons.size());
  VertexEnumResult best;

  auto feasible_point = [&](const std::vector<double>& x) {
    for (const auto& c : cons) {
      double act = 0.0, mag = 1.0;
      for (int j = 0; j < n; ++j) {
        act += c.a[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
        mag += std::abs(c.a[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)]);
      }
      const double t = tol * (mag + std::abs(c.b));
      if (c.sense == Sense::Le && act > c.b + t) return false;
      if (c.sense == Sense::Ge && act < c.b - t) return false;
      if (c.sense == Sense::Eq && std::abs(act - c.b) > t) return false;
    }
    return true;
  };

  std::vector<int> pick;
  auto consider = [&]() {
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    for (int id : pick) {
      a.push_back(cons[static_cast<std::size_t>(id)].a);
      b.push_back(cons[static_cast<std::size_t>(id)].b);
    }
    std::vector<double> x;
    if (!detail::solve_dense(std::move(a), std::move(b), x)) return;
    if (!feasible_point(x)) return;
    double obj = 0.0;
    for (int j = 0; j < n; ++j) obj += p.c[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
    if (!best.feasible || obj < best.objective) {
      best.feasible = true;
      best.objective = obj;
      best.x = x;
    }
  };

  // All size-n subsets of the constraint list.
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int start, int need) -> void {
    if (need == 0) {
      consider();
      return;
    }
    for (int i = start; i <= total - need; ++i) {
      pick.push_back(i);
      self(self, i + 1, need - 1);
      pick.pop_back();
    }
  };
  if (n > 0 && total >= n) rec(rec, 0, n);
  return best;
}

/// Random bounded LP with a mix of senses; guaranteed-feasible variants keep
/// the origin-ish point feasible by construction when requested.
inline ptaplan::lp::LpProblem random_lp(Rng& rng, int n, int m, bool force_feasible) {
  using ptaplan::lp::LpProblem;
  using ptaplan::lp::Sense;
  LpProblem p;
  std::vector<double> x0;
  for (int j = 0; j < n; ++j) {
    const double lo = rng.uniform(-4.0, 0.0);
    const double hi = lo + rng.uniform(0.5, 6.0);
    p.add_var(lo, hi, rng.uniform(-2.0, 2.0));
    x0.push_back(lo + (hi - lo) * rng.uniform(0.2, 0.8));
  }
  for (int i = 0; i < m; ++i) {
    std::vector<std::pair<int, double>> coeffs;
    double act = 0.0;
    for (int j = 0; j < n; ++j) {
      if (rng.uniform() < 0.35 && static_cast<int>(coeffs.size()) + (n - j) > 1) continue;
      const double a = rng.uniform(-3.0, 3.0);
      coeffs.emplace_back(j, a);
      act += a * x0[static_cast<std::size_t>(j)];
    }
    if (coeffs.empty()) coeffs.emplace_back(rng.uniform_int(0, n - 1), 1.0);
    const double u = rng.uniform();
    Sense s = u < 0.6 ? Sense::Le : (u < 0.9 ? Sense::Ge : Sense::Eq);
    double rhs;
    if (force_feasible) {
      act = 0.0;
      for (const auto& [j, a] : coeffs) act += a * x0[static_cast<std::size_t>(j)];
      rhs = s == Sense::Le ? act + rng.uniform(0.0, 2.0)
                           : (s == Sense::Ge ? act - rng.uniform(0.0, 2.0) : act);
    } else {
      rhs = rng.uniform(-4.0, 4.0);
    }
    p.add_row(std::move(coeffs), s, rhs);
  }
  return p;
}

// ---- MILFP oracles ---------------------------------------------------

struct MilfpEnumResult {
  bool feasible = false;
  double objective = 0.0;
  std::vector<double> x;
  std::vector<double> y;
};

/// Fixes y to one lattice point and solves the remaining LFP in x through
/// the C&C transform (single LP, no branching involved).
inline std::optional<std::pair<double, std::vector<double>>> solve_lfp_fixed_y(
    const ptaplan::milfp::MilfpProblem& p, const std::vector<double>& yfix) {
  using namespace ptaplan::milfp;
  MilfpProblem sub;
  sub.numerator.constant = p.numerator.constant;
  sub.denominator.constant = p.denominator.constant;
  for (int j = 0; j < p.num_y(); ++j) {
    sub.numerator.constant += p.numerator.y_coeffs[j] * yfix[static_cast<std::size_t>(j)];
    sub.denominator.constant += p.denominator.y_coeffs[j] * yfix[static_cast<std::size_t>(j)];
  }
  for (int i = 0; i < p.num_x(); ++i) sub.add_x(p.x_lo[i], p.x_hi[i]);
  sub.numerator.x_coeffs = p.numerator.x_coeffs;
  sub.denominator.x_coeffs = p.denominator.x_coeffs;
  for (const MilfpRow& r : p.rows) {
    MilfpRow sr;
    sr.sense = r.sense;
    sr.rhs = r.rhs;
    sr.x_coeffs = r.x_coeffs;
    for (const auto& [j, v] : r.y_coeffs) sr.rhs -= v * yfix[static_cast<std::size_t>(j)];
    sub.add_row(std::move(sr));
  }
  if (!(sub.denominator.constant > 0.0) || sub.num_x() > 0) {
    // keep going; denominator positivity over the box is the generator's job
  }
  auto cc = charnes_cooper_transform(relax(sub));
  auto sol = ptaplan::lp::solve_lp(cc.lp);
  if (sol.status != ptaplan::lp::LpStatus::Optimal) return std::nullopt;
  try {
    auto [x, yrel] = recover_solution(sol, cc);
    (void)yrel;
    return std::pair{sub.objective_value(x, {}), std::move(x)};
  } catch (const ptaplan::DegenerateScale&) {
    return std::nullopt;
  }
}

/// Exhaustive integer-grid enumeration; each assignment solved as an LFP.
inline MilfpEnumResult grid_enum_milfp(const ptaplan::milfp::MilfpProblem& p) {
  MilfpEnumResult best;
  std::vector<double> y(static_cast<std::size_t>(p.num_y()));
  auto rec = [&](auto&& self, int j) -> void {
    if (j == p.num_y()) {
      auto r = solve_lfp_fixed_y(p, y);
      if (r && (!best.feasible || r->first < best.objective)) {
        best.feasible = true;
        best.objective = r->first;
        best.x = r->second;
        best.y = y;
      }
      return;
    }
    for (double k = p.y_lo[j]; k <= p.y_hi[j] + 0.5; k += 1.0) {
      y[static_cast<std::size_t>(j)] = k;
      self(self, j + 1);
    }
  };
  rec(rec, 0);
  return best;
}

/// Random bounded-feasible MILFP with positive denominator over the box:
/// q coefficients are nonnegative, variables nonnegative, q0 >= 0.5.
inline ptaplan::milfp::MilfpProblem random_milfp(Rng& rng, int nx, int ny, int m, int ydom,
                                                 bool fractional = true) {
  using namespace ptaplan::milfp;
  MilfpProblem p;
  std::vector<double> x0;
  for (int i = 0; i < nx; ++i) {
    const double hi = rng.uniform(1.0, 5.0);
    p.add_x(0.0, hi);
    x0.push_back(hi * rng.uniform(0.2, 0.8));
    p.numerator.x_coeffs[i] = rng.uniform(-2.0, 2.0);
    p.denominator.x_coeffs[i] = fractional ? rng.uniform(0.0, 1.0) : 0.0;
  }
  std::vector<double> y0;
  for (int j = 0; j < ny; ++j) {
    p.add_y(0.0, ydom);
    y0.push_back(rng.uniform_int(0, ydom));
    p.numerator.y_coeffs[j] = rng.uniform(-2.0, 2.0);
    p.denominator.y_coeffs[j] = fractional ? rng.uniform(0.0, 1.0) : 0.0;
  }
  p.numerator.constant = rng.uniform(-1.0, 1.0);
  p.denominator.constant = fractional ? rng.uniform(0.5, 2.0) : 1.0;
  for (int r = 0; r < m; ++r) {
    MilfpRow row;
    double act = 0.0;
    for (int i = 0; i < nx; ++i) {
      if (rng.uniform() < 0.4) continue;
      const double a = rng.uniform(-2.0, 2.0);
      row.x_coeffs.emplace_back(i, a);
      act += a * x0[static_cast<std::size_t>(i)];
    }
    for (int j = 0; j < ny; ++j) {
      if (rng.uniform() < 0.4) continue;
      const double a = rng.uniform(-2.0, 2.0);
      row.y_coeffs.emplace_back(j, a);
      act += a * y0[static_cast<std::size_t>(j)];
    }
    if (row.x_coeffs.empty() && row.y_coeffs.empty()) continue;
    // anchor at (x0, y0) so the instance is feasible
    const double u = rng.uniform();
    if (u < 0.75) {
      row.sense = ptaplan::milfp::Sense::Le;
      row.rhs = act + rng.uniform(0.0, 3.0);
    } else {
      row.sense = ptaplan::milfp::Sense::Ge;
      row.rhs = act - rng.uniform(0.0, 3.0);
    }
    p.add_row(std::move(row));
  }
  return p;
}

}  // namespace oracles
