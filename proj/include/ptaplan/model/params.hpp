#pragma once

#include <map>
#include <string>
#include <vector>

#include "ptaplan/common/errors.hpp"
#include "ptaplan/milfp/bnb.hpp"

namespace ptaplan::model {

enum class Facility { W, S, AE, FC, HS, AS, B };

const char* to_string(Facility f);
Facility facility_from(const std::string& id);

/// Physical and economic parameters of one facility.
/// invest_per_unit is per internal capacity unit: MW for W/S/AE/FC,
/// MWh for B, Nm3 for HS, t/yr for AS. kappa is kWh per Nm3 H2.
struct FacilityParams {
  Facility id = Facility::W;
  double unit_size = 0.0;  // C0 (MW); nonzero for W/S/AE only
  double invest_per_unit = 0.0;
  double om_frac = 0.0;
  double lifetime_years = 20.0;
  double eta_lo = 0.0;
  double eta_hi = 1.0;
  double kappa = 0.0;

  void validate() const {
    if (!(eta_lo >= 0.0 && eta_lo <= eta_hi && eta_hi <= 1.0))
      throw ConfigError(std::string("facility ") + to_string(id) +
                        ": operating range must satisfy 0 <= lo <= hi <= 1");
    if (lifetime_years < 1.0)
      throw ConfigError(std::string("facility ") + to_string(id) + ": lifetime must be >= 1 year");
    if (invest_per_unit < 0.0)
      throw ConfigError(std::string("facility ") + to_string(id) + ": negative investment cost");
  }
};

/// Finite capacity bounds; branch-and-bound needs bounded integer domains.
struct CapacityBounds {
  int n_w_max = 64;
  int n_s_max = 64;
  int n_ae_max = 40;
  double c_hs_max = 1e6;   // Nm3
  double c_fc_max = 50.0;  // MW
  double c_b_max = 200.0;  // MWh
};

struct PlanningConfig {
  int horizon = 168;                 // N steps
  double dt_hours = 1.0;             // step length (h)
  double as_period_hours = 24.0;     // ammonia scheduling period
  double as_transient_hours = 2.0;   // first-order transient time constant
  double c_as = 20000.0;             // nominal annual ammonia capacity (t)
  double c_h2a = 5.06e-4;            // t NH3 per Nm3 H2 (3H2+N2 -> 2NH3 at 22.4 Nm3/kmol)
  double interest_rate = 0.08;
  double lambda_deg = 50.0;          // BESS degradation price (currency/MWh discharged)
  double bess_hour_ratio = 2.0;      // H_B
  double bess_big_m = 0.0;           // M_B (MW); 0 derives c_b_max / H_B
  double bess_self_discharge = 2e-4; // xi_B per step
  double bess_leg_efficiency = 0.95; // eta_B (one-way)
  double soc_boundary_frac = 0.5;    // start = end SOC fraction
  double as_ramp_down = -0.02;       // r- (fraction of rated per step)
  double as_ramp_up = 0.02;          // r+
  bool relax_bess_binaries = false;
  double eps_denominator = 1e-9;
  bool annualize = true;  // scale O_A and R_oper by 8760/(N dt) at sub-year horizons

  /// Output/cycling terms are annualized so LCOA and r_AS keep their annual
  /// meaning at desk horizons; equals 1 on a full 8760 h run.
  double annualization() const {
    return annualize ? 8760.0 / (static_cast<double>(horizon) * dt_hours) : 1.0;
  }
  /// Rated hydrogen intake of ammonia synthesis (8000-hour-full-load mode).
  double q_rated() const { return c_as / (8000.0 * c_h2a); }

  void validate() const;
};

struct SolverSettings {
  long node_limit = 100000;
  double time_limit_s = 600.0;
  double tol_integrality = 1e-6;
  double tol_feasibility = 1e-7;
  double rel_obj_tol = 1e-9;
  std::string lp_backend = "bundled";
  std::string shellout_command;
};

struct SystemConfig {
  PlanningConfig planning;
  std::map<Facility, FacilityParams> facilities;
  CapacityBounds bounds;
  SolverSettings solver;

  const FacilityParams& facility(Facility f) const {
    auto it = facilities.find(f);
    if (it == facilities.end())
      throw ConfigError(std::string("missing facility parameters for ") + to_string(f));
    return it->second;
  }
  void validate() const;
};

/// Capital recovery factor r(1+r)^Y / ((1+r)^Y - 1); 1/Y at r = 0.
double crf(double r, double years);

SystemConfig default_config();
SystemConfig load_config(const std::string& path);
void save_config(const SystemConfig& cfg, const std::string& path);
std::string config_to_json(const SystemConfig& cfg);
SystemConfig config_from_json(const std::string& text);

milfp::BnbConfig make_bnb_config(const SystemConfig& cfg);

}  // namespace ptaplan::model
