#pragma once

#include <memory>
#include <string>

#include "ptaplan/lp/problem.hpp"

namespace ptaplan::lp {

/// LP solving contract consumed by the MILFP solver. Implementations must be
/// safe for concurrent solve() calls on distinct problems.
class LpBackend {
 public:
  virtual ~LpBackend() = default;
  virtual LpSolution solve(const LpProblem& p, const LpConfig& cfg,
                           const WarmStart* warm) const = 0;
  virtual bool supports_warm_start() const { return false; }
  virtual std::string name() const = 0;
};

/// Bundled revised simplex.
class BundledBackend final : public LpBackend {
 public:
  LpSolution solve(const LpProblem& p, const LpConfig& cfg,
                   const WarmStart* warm) const override {
    return solve_lp(p, cfg, warm);
  }
  bool supports_warm_start() const override { return true; }
  std::string name() const override { return "bundled"; }
};

/// Writes the problem as MPS, invokes a user-configured solver command
/// ("{mps}" and "{sol}" placeholders), then parses its solution file:
///
///   status <Optimal|Infeasible|Unbounded|IterLimit>
///   objective <value>
///   iterations <count>            (optional)
///   var <index> <value>           (one line per structural variable)
///
/// Unlisted variables default to zero.
class MpsShelloutBackend final : public LpBackend {
 public:
  explicit MpsShelloutBackend(std::string command_template);
  LpSolution solve(const LpProblem& p, const LpConfig& cfg,
                   const WarmStart* warm) const override;
  std::string name() const override { return "mps-shellout"; }

 private:
  std::string command_;
};

/// kind: "bundled" or "mps-shellout" (the latter needs a non-empty command).
std::unique_ptr<LpBackend> make_backend(const std::string& kind,
                                        const std::string& shellout_command = {});

}  // namespace ptaplan::lp
