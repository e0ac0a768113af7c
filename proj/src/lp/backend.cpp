#include "ptaplan/lp/backend.hpp"

#include <unistd.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ptaplan/common/errors.hpp"
#include "ptaplan/lp/mps.hpp"

namespace ptaplan::lp {
namespace {

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  std::size_t pos = 0;
  while ((pos = s.find(from, pos)) != std::string::npos) {
    s.replace(pos, from.size(), to);
    pos += to.size();
  }
  return s;
}

std::filesystem::path unique_tmp(const char* ext) {
  static std::atomic<unsigned> counter{0};
  std::ostringstream name;
  name << "ptaplan-" << ::getpid() << "-" << counter.fetch_add(1) << ext;
  return std::filesystem::temp_directory_path() / name.str();
}

}  // namespace

MpsShelloutBackend::MpsShelloutBackend(std::string command_template)
    : command_(std::move(command_template)) {
  if (command_.find("{mps}") == std::string::npos || command_.find("{sol}") == std::string::npos)
    throw ConfigError("shellout command must contain {mps} and {sol} placeholders");
}

LpSolution MpsShelloutBackend::solve(const LpProblem& p, const LpConfig&,
                                     const WarmStart*) const {
  const auto mps_path = unique_tmp(".mps");
  const auto sol_path = unique_tmp(".sol");
  write_mps_file(p, mps_path.string());

  std::string cmd = replace_all(command_, "{mps}", mps_path.string());
  cmd = replace_all(cmd, "{sol}", sol_path.string());
  const int rc = std::system(cmd.c_str());
  std::filesystem::remove(mps_path);
  if (rc != 0) {
    std::filesystem::remove(sol_path);
    throw NumericalFailure("external LP solver command failed (exit " + std::to_string(rc) + ")");
  }

  std::ifstream f(sol_path);
  if (!f) throw DataError("external solver produced no solution file: " + sol_path.string());
  LpSolution sol;
  sol.primal.assign(static_cast<std::size_t>(p.num_vars()), 0.0);
  bool have_status = false;
  std::string line;
  while (std::getline(f, line)) {
    std::istringstream is(line);
    std::string key;
    if (!(is >> key)) continue;
    if (key == "status") {
      std::string v;
      is >> v;
      if (v == "Optimal" || v == "optimal") sol.status = LpStatus::Optimal;
      else if (v == "Infeasible" || v == "infeasible") sol.status = LpStatus::Infeasible;
      else if (v == "Unbounded" || v == "unbounded") sol.status = LpStatus::Unbounded;
      else if (v == "IterLimit" || v == "iterlimit") sol.status = LpStatus::IterLimit;
      else throw DataError("solution file: unknown status '" + v + "'");
      have_status = true;
    } else if (key == "objective") {
      is >> sol.objective;
    } else if (key == "iterations") {
      is >> sol.iterations;
    } else if (key == "var") {
      int j = -1;
      double v = 0.0;
      is >> j >> v;
      if (j < 0 || j >= p.num_vars()) throw DataError("solution file: variable index out of range");
      sol.primal[static_cast<std::size_t>(j)] = v;
    }
  }
  f.close();
  std::filesystem::remove(sol_path);
  if (!have_status) throw DataError("solution file: missing status line");
  return sol;
}

std::unique_ptr<LpBackend> make_backend(const std::string& kind, const std::string& shellout_command) {
  if (kind.empty() || kind == "bundled") return std::make_unique<BundledBackend>();
  if (kind == "mps-shellout") {
    if (shellout_command.empty())
      throw ConfigError("lp-backend mps-shellout requires a solver command");
    return std::make_unique<MpsShelloutBackend>(shellout_command);
  }
  throw ConfigError("unknown lp backend '" + kind + "'");
}

}  // namespace ptaplan::lp
