#include "ptaplan/milfp/bnb.hpp"

#include <chrono>
#include <cmath>
#include <memory>
#include <set>
#include <utility>

#include "ptaplan/milfp/transform.hpp"

namespace ptaplan::milfp {
namespace {

struct LiveNode {
  BnbNode node;
  std::shared_ptr<const lp::WarmStart> warm;  // parent's final basis
};

struct NodeOrder {
  bool operator()(const LiveNode& a, const LiveNode& b) const {
    if (a.node.parent_bound != b.node.parent_bound)
      return a.node.parent_bound < b.node.parent_bound;
    return a.node.id < b.node.id;
  }
};

class BnbSolver {
 public:
  BnbSolver(const MilfpProblem& prob, const BnbConfig& cfg)
      : prob_(cfg.expand_equalities ? prob.to_inequality_form() : prob),
        cfg_(cfg),
        backend_(cfg.backend != nullptr ? cfg.backend : &bundled_),
        milp_mode_(prob_.is_pure_milp()) {
    if (milp_mode_ && !(prob_.denominator.constant > 0.0))
      throw ConfigError("solve_milfp: constant denominator must be positive");
    build_base_lp();
  }

  MilfpSolution run() {
    const auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&] {
      return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };

    MilfpSolution out;
    std::multiset<LiveNode, NodeOrder> open;
    open.insert(LiveNode{BnbNode{next_id_++, {}, -kInf, 0}, nullptr});

    bool have_inc = false;
    double inc_obj = kInf;
    std::vector<double> inc_x, inc_y;
    bool hit_limit = false;
    bool root_infeasible = false;

    while (!open.empty()) {
      if (out.nodes_explored >= cfg_.node_limit) {
        out.status = MilfpStatus::NodeLimit;
        hit_limit = true;
        break;
      }
      if (elapsed() > cfg_.time_limit_s) {
        out.status = MilfpStatus::TimeLimit;
        hit_limit = true;
        break;
      }

      LiveNode live = std::move(open.extract(open.begin()).value());
      // Queued-node pruning against the incumbent uses the parent bound
      // (Algorithm 1 removes such nodes at each incumbent update; doing it
      // lazily on pop visits exactly the same node set).
      if (have_inc && live.node.parent_bound > inc_obj) continue;

      lp::LpProblem node_lp = base_lp_;
      for (const BranchRow& br : live.node.branch_rows) append_branch_row(node_lp, br);

      lp::LpSolution sol;
      try {
        sol = solve_node_lp(node_lp, live.warm.get());
      } catch (const DegenerateScale&) {
        ++out.nodes_explored;
        continue;  // u below u_min: numerically infeasible node
      }
      ++out.nodes_explored;
      if (sol.status == lp::LpStatus::Infeasible) {
        if (live.node.depth == 0) root_infeasible = true;
        continue;
      }
      if (sol.status != lp::LpStatus::Optimal)
        throw NumericalFailure("solve_milfp: node LP ended " +
                               std::string(lp::to_string(sol.status)));

      std::vector<double> xhat, yhat;
      try {
        std::tie(xhat, yhat) = decode(sol);
      } catch (const DegenerateScale&) {
        continue;
      }
      const double obj = prob_.objective_value(xhat, yhat);
      if (have_inc && obj >= inc_obj - cfg_.rel_obj_tol * (1.0 + std::abs(inc_obj)))
        continue;  // LP bound dominates every descendant

      // Integrality test: [.] is rounding to nearest.
      int jstar = -1;
      double worst = cfg_.tol_int;
      for (int j = 0; j < prob_.num_y(); ++j) {
        const double dev = std::abs(yhat[j] - std::round(yhat[j]));
        if (dev > worst) {
          worst = dev;
          jstar = j;
        }
      }

      if (jstar < 0) {
        have_inc = true;
        inc_obj = obj;
        inc_x = std::move(xhat);
        inc_y = std::move(yhat);
        out.incumbent_history.emplace_back(live.node.id, obj);
        continue;
      }

      // Branch on the most-fractional variable; the up child is created
      // first, matching the paper's node numbering.
      const double v = yhat[jstar];
      const double kf = std::floor(v);
      const double kc = kf + 1.0;
      auto warm = std::make_shared<const lp::WarmStart>(
          lp::WarmStart{std::move(sol.basis), std::move(sol.states)});
      if (kc <= prob_.y_hi[jstar]) {
        LiveNode child{live.node, backend_->supports_warm_start() ? warm : nullptr};
        child.node.id = next_id_++;
        child.node.depth = live.node.depth + 1;
        child.node.parent_bound = obj;
        child.node.branch_rows.push_back(BranchRow{jstar, true, kc});
        open.insert(std::move(child));
      }
      if (kf >= prob_.y_lo[jstar]) {
        LiveNode child{live.node, backend_->supports_warm_start() ? warm : nullptr};
        child.node.id = next_id_++;
        child.node.depth = live.node.depth + 1;
        child.node.parent_bound = obj;
        child.node.branch_rows.push_back(BranchRow{jstar, false, kf});
        open.insert(std::move(child));
      }
    }

    if (have_inc) {
      if (!hit_limit) out.status = MilfpStatus::Optimal;
      out.x_star = std::move(inc_x);
      out.y_star = std::move(inc_y);
      out.objective = prob_.objective_value(out.x_star, out.y_star);
    } else if (!hit_limit) {
      out.status = MilfpStatus::Infeasible;
      (void)root_infeasible;
    }
    return out;
  }

 private:
  void build_base_lp() {
    if (milp_mode_) {
      const double q0 = prob_.denominator.constant;
      for (int i = 0; i < prob_.num_x(); ++i)
        base_lp_.add_var(prob_.x_lo[i], prob_.x_hi[i], prob_.numerator.x_coeffs[i] / q0);
      for (int j = 0; j < prob_.num_y(); ++j)
        base_lp_.add_var(prob_.y_lo[j], prob_.y_hi[j], prob_.numerator.y_coeffs[j] / q0);
      for (const MilfpRow& r : prob_.rows) {
        std::vector<std::pair<int, double>> coeffs;
        for (const auto& [i, v] : r.x_coeffs) coeffs.emplace_back(i, v);
        for (const auto& [j, v] : r.y_coeffs) coeffs.emplace_back(prob_.num_x() + j, v);
        base_lp_.add_row(std::move(coeffs), r.sense, r.rhs);
      }
    } else {
      cc_ = charnes_cooper_transform(relax(prob_));
      base_lp_ = cc_.lp;
    }
  }

  void append_branch_row(lp::LpProblem& node_lp, const BranchRow& br) const {
    const lp::Sense sense = br.is_lower ? lp::Sense::Ge : lp::Sense::Le;
    if (milp_mode_) {
      node_lp.add_row({{prob_.num_x() + br.j, 1.0}}, sense, br.k);
    } else {
      const double k_shifted = br.k - cc_.y_shift[br.j];
      node_lp.add_row({{cc_.w_col(br.j), 1.0}, {cc_.u_col, -k_shifted}}, sense, 0.0);
    }
  }

  lp::LpSolution solve_node_lp(const lp::LpProblem& p, const lp::WarmStart* warm) const {
    auto sol = backend_->solve(p, cfg_.lp, warm);
    if (sol.status == lp::LpStatus::IterLimit) {
      lp::LpConfig retry = cfg_.lp;
      retry.max_iters = 400000 + 100L * (p.num_rows() + p.num_vars());
      sol = backend_->solve(p, retry, nullptr);
      if (sol.status == lp::LpStatus::IterLimit)
        throw NumericalFailure("solve_milfp: node LP exhausted iteration budget");
    }
    if (sol.status == lp::LpStatus::Unbounded)
      throw NumericalFailure("solve_milfp: node LP unbounded despite finite bounds");
    return sol;
  }

  std::pair<std::vector<double>, std::vector<double>> decode(const lp::LpSolution& sol) const {
    if (milp_mode_) {
      std::vector<double> x(sol.primal.begin(), sol.primal.begin() + prob_.num_x());
      std::vector<double> y(sol.primal.begin() + prob_.num_x(), sol.primal.end());
      return {std::move(x), std::move(y)};
    }
    return recover_solution(sol, cc_, cfg_.u_min);
  }

  MilfpProblem prob_;
  BnbConfig cfg_;
  lp::BundledBackend bundled_;
  const lp::LpBackend* backend_;
  bool milp_mode_;
  CcLpProblem cc_;
  lp::LpProblem base_lp_;
  long next_id_ = 1;
};

}  // namespace

MilfpSolution solve_milfp(const MilfpProblem& prob, const BnbConfig& cfg) {
  prob.validate();
  BnbSolver solver(prob, cfg);
  return solver.run();
}

}  // namespace ptaplan::milfp
