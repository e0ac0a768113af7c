#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptaplan/milfp/problem.hpp"
#include "ptaplan/model/params.hpp"
#include "ptaplan/model/profile.hpp"

namespace ptaplan::model {

/// Installed capacities with exact unit counts.
struct Capacities {
  double c_w = 0.0, c_s = 0.0, c_ae = 0.0;  // MW
  double c_hs = 0.0;                        // Nm3
  double c_fc = 0.0;                        // MW
  double c_b = 0.0;                         // MWh
  int n_w = 0, n_s = 0, n_ae = 0;
};

/// Column index map: every decision variable of the planning model resolves
/// to exactly one column. Block fields are the first column of a length-n
/// (or length-k) run.
struct IndexMap {
  int n = 0;  // time steps
  int k = 0;  // QSS scheduling periods
  // continuous (x-space)
  int c_w = -1, c_s = -1, c_ae = -1, c_hs = -1, c_fc = -1, c_b = -1;
  int p_w = -1, p_s = -1, p_ae = -1, p_as = -1, p_fc = -1;
  int p_ch = -1, p_disc = -1, p_curt = -1;
  int q_in = -1, q_out = -1, q_out1 = -1;
  int n_hs = -1, esoc = -1;  // states at t = 0..n-1
  int qss = -1;
  int alpha = -1;                  // IGDT uncertainty horizon
  int x_n_w = -1, x_n_s = -1;      // IGDT: unit counts carried by bits
  int delta_w = -1, delta_s = -1;  // IGDT: delta_l blocks (alpha.b_l)
  // integer (y-space)
  int y_n_w = -1, y_n_s = -1, y_n_ae = -1;
  int y_delta = -1;                // BESS exclusivity binaries; -1 when relaxed
  int y_bits_w = -1, y_bits_s = -1;
  int nbits_w = 0, nbits_s = 0;
};

enum class ObjectiveKind { Lcoa, FixedRasCost, RevenueMax };
enum class UncertaintyMode { None, Robust, Opportunistic };

struct BuildOptions {
  ObjectiveKind kind = ObjectiveKind::Lcoa;
  double fixed_ras = 1.0;       // FixedRasCost: pinned utilization rate
  double ammonia_price = 0.0;   // RevenueMax
  std::optional<Capacities> fixed_capacities;  // operation-only solves
  double gen_scale_w = 1.0;  // generation multipliers (worst/best-case recheck)
  double gen_scale_s = 1.0;
  std::optional<double> as_period_hours;  // overrides planning.as_period_hours

  // IGDT hooks (UncertaintyMode != None): objective becomes max/min alpha,
  // renewables scale by (1 -/+ alpha), and the LCOA cap row is emitted.
  UncertaintyMode uncertainty = UncertaintyMode::None;
  double beta = 0.0;
  double dlcoa = 0.0;
  double big_m = 1.0;
  double alpha_max = 0.5;
  int n_bits_w = -1;  // -1: smallest width covering the unit-count bound
  int n_bits_s = -1;
};

struct ModelInstance {
  milfp::MilfpProblem prob;
  IndexMap map;
  ObjectiveKind kind = ObjectiveKind::Lcoa;
  UncertaintyMode uncertainty = UncertaintyMode::None;
  int n = 0;
  double dt = 1.0;
  double dt_as = 24.0;
  double chi = 1.0;      // annualization factor
  double q_rated = 0.0;  // rated AS hydrogen intake (Nm3/h)
  double beta = 0.0;
  double dlcoa = 0.0;
  std::string config_hash;
};

/// Exponential factors of the first-order QSS regulation map, one per local
/// step offset tau = 0..L-1 within a scheduling period (L = dt_as/dt).
/// q_t = (1 + f_tau) q_k - f_tau q_{k+1}; t_trans <= 0 collapses to the
/// piecewise-constant limit f = 0.
std::vector<double> as_transient_factors(double dt_as_hours, double t_trans_hours,
                                         double dt_hours);

/// Shared assembler behind the named builders below.
ModelInstance build_model(const SystemConfig& cfg, const RenewableProfile& prof,
                          const BuildOptions& opt);

/// D-MILFP planning instance: LCOA objective over the full constraint set.
ModelInstance build_deterministic_model(const SystemConfig& cfg, const RenewableProfile& prof);

/// MILP variant with O_A pinned to r_as.C_AS (objective = LCOA numerator over
/// that constant output).
ModelInstance build_fixed_ras_milp(const SystemConfig& cfg, const RenewableProfile& prof,
                                   double r_as);

/// Revenue-maximization MILP: max price.O_A - (C_inv + C_O&M + R_oper),
/// emitted as minimization of the negation.
ModelInstance build_revenue_milp(const SystemConfig& cfg, const RenewableProfile& prof,
                                 double ammonia_price);

}  // namespace ptaplan::model
