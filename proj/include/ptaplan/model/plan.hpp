#pragma once

#include <string>
#include <vector>

#include "ptaplan/milfp/bnb.hpp"
#include "ptaplan/model/builder.hpp"

namespace ptaplan::model {

struct LcoaBreakdown {
  double c_inv = 0.0;   // annualized capital investment
  double c_om = 0.0;    // annual O&M
  double r_oper = 0.0;  // BESS degradation penalty (annualized)
  double o_a = 0.0;     // ammonia output (annualized, t)
};

/// Operation schedules in model units (MW, Nm3/h, Nm3, MWh).
struct Schedules {
  std::vector<double> p_w, p_s, p_ae, p_as, p_fc, p_ch, p_disc, p_curt;
  std::vector<double> n_hs, esoc;
  std::vector<double> q_in, q_out, q_out1;
  std::vector<double> qss;
};

struct PlanResult {
  Capacities caps;
  double lcoa = 0.0;  // numerator / O_A at the solution
  LcoaBreakdown parts;
  double r_as = 0.0;
  double flh_ae = 0.0;
  double c_inv_total = 0.0;  // total initial investment (unannualized)
  double objective = 0.0;    // solver objective of the instance's own kind
  double revenue = 0.0;      // RevenueMax instances: price.O_A - numerator
  Schedules sched;
  long nodes_explored = 0;
  std::string status;
};

/// Decodes a solved instance through its index map, recomputes the LCOA
/// decomposition from the raw schedules and cross-checks the solver
/// objective. Throws DecodeError on index-map or identity mismatch.
PlanResult extract_plan(const ModelInstance& inst, const milfp::MilfpSolution& sol,
                        const SystemConfig& cfg);

std::string plan_to_json(const PlanResult& plan, const std::string& manifest_hash);
PlanResult plan_from_json(const std::string& text);
PlanResult read_plan_file(const std::string& path);
void write_plan_file(const PlanResult& plan, const std::string& path,
                     const std::string& manifest_hash);

/// Schedule CSV: `t,P_W,P_S,P_AE,P_AS,P_FC,P_ch,P_disc,P_curt,n_HS,ESOC,q_in,q_out,q_out1`.
void write_schedule_csv(const Schedules& sched, const std::string& path,
                        const std::string& manifest_hash);

}  // namespace ptaplan::model
