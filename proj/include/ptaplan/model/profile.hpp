#pragma once

#include <string>
#include <vector>

#include "ptaplan/common/errors.hpp"

namespace ptaplan::model {

/// Standardized (per-unit) wind/solar generation series, entries in [0, 1].
struct RenewableProfile {
  double dt_hours = 1.0;
  std::vector<double> p_w_sta;
  std::vector<double> p_s_sta;

  int steps() const { return static_cast<int>(p_w_sta.size()); }
  void validate() const {
    if (p_w_sta.size() != p_s_sta.size())
      throw DataError("profile: wind and solar series lengths differ");
    for (double v : p_w_sta)
      if (!(v >= 0.0 && v <= 1.0)) throw DataError("profile: p_w_sta entry outside [0,1]");
    for (double v : p_s_sta)
      if (!(v >= 0.0 && v <= 1.0)) throw DataError("profile: p_s_sta entry outside [0,1]");
  }
};

/// CSV with header `t,p_w_sta,p_s_sta`.
RenewableProfile read_profile_csv(const std::string& path);
void write_profile_csv(const RenewableProfile& prof, const std::string& path);

}  // namespace ptaplan::model
