#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "ptaplan/lp/problem.hpp"

namespace ptaplan::lp {
namespace {

struct SparseCol {
  std::vector<int> idx;
  std::vector<double> val;
};

struct Eta {
  int r = -1;
  double pivot = 0.0;
  std::vector<std::pair<int, double>> nz;  // entries i != r
};

constexpr double kTolDegen = 1e-12;

double pow2_round(double s) {
  if (!(s > 0.0) || !std::isfinite(s)) return 1.0;
  return std::exp2(std::round(std::log2(s)));
}

// Bounded-variable two-phase revised simplex. Basis factorized with
// Eigen SparseLU; product-form eta updates between refactorizations.
class Simplex {
 public:
  Simplex(const LpProblem& p, const LpConfig& cfg, const WarmStart* warm)
      : p_(p), cfg_(cfg), warm_(warm) {}

  LpSolution run() {
    setup();
    init_basis();
    refactor();
    repair_initial_violations();

    LpStatus st = LpStatus::Optimal;
    if (have_artificials()) {
      phase_ = 1;
      st = iterate();
      if (st == LpStatus::Optimal) {
        if (infeasibility() > infeas_tol_) st = LpStatus::Infeasible;
      }
      ban_artificials();
    }
    if (st == LpStatus::Optimal) {
      phase_ = 2;
      st = iterate();
    }
    return finish(st);
  }

 private:
  // ---- problem setup -------------------------------------------------

  void setup() {
    m_ = p_.num_rows();
    n_ = p_.num_vars();
    nslack_begin_ = n_;
    nart_begin_ = n_ + m_;

    row_scale_.assign(m_, 1.0);
    col_scale_.assign(n_, 1.0);
    if (cfg_.scale) compute_scaling();

    cols_.resize(static_cast<std::size_t>(n_ + m_));
    lo_.assign(static_cast<std::size_t>(n_ + m_), 0.0);
    hi_.assign(static_cast<std::size_t>(n_ + m_), kInf);
    cost_.assign(static_cast<std::size_t>(n_ + m_), 0.0);
    rhs_.assign(m_, 0.0);

    for (int i = 0; i < m_; ++i) {
      const Row& r = p_.rows[static_cast<std::size_t>(i)];
      rhs_[i] = r.rhs * row_scale_[i];
      for (const auto& [j, v] : r.coeffs) {
        if (v == 0.0) continue;
        cols_[static_cast<std::size_t>(j)].idx.push_back(i);
        cols_[static_cast<std::size_t>(j)].val.push_back(v * row_scale_[i] * col_scale_[j]);
      }
    }
    for (int j = 0; j < n_; ++j) {
      lo_[j] = p_.var_lo[j] / col_scale_[j];
      hi_[j] = p_.var_hi[j] / col_scale_[j];
      cost_[j] = p_.c[j] * col_scale_[j];
    }
    // Slack of row i: a.x + s = b with bounds fixed by the row sense.
    for (int i = 0; i < m_; ++i) {
      const int j = nslack_begin_ + i;
      cols_[static_cast<std::size_t>(j)].idx.push_back(i);
      cols_[static_cast<std::size_t>(j)].val.push_back(1.0);
      switch (p_.rows[static_cast<std::size_t>(i)].sense) {
        case Sense::Le: lo_[j] = 0.0; hi_[j] = kInf; break;
        case Sense::Ge: lo_[j] = -kInf; hi_[j] = 0.0; break;
        case Sense::Eq: lo_[j] = 0.0; hi_[j] = 0.0; break;
      }
    }

    double bmax = 0.0;
    for (double b : rhs_) bmax = std::max(bmax, std::abs(b));
    infeas_tol_ = 1e-9 * (1.0 + bmax);

    max_iters_ = cfg_.max_iters > 0 ? cfg_.max_iters
                                    : std::max<long>(20000, 30L * (m_ + n_));

    xval_.assign(cols_.size(), 0.0);
    state_.assign(cols_.size(), VarState::AtLower);
    pos_in_basis_.assign(cols_.size(), -1);
    xb_.assign(m_, 0.0);
    work_m_.resize(m_);
    work_m2_.resize(m_);
    work_w_.resize(m_);
  }

  void compute_scaling() {
    for (int pass = 0; pass < 3; ++pass) {
      for (int i = 0; i < m_; ++i) {
        double amin = kInf, amax = 0.0;
        for (const auto& [j, v] : p_.rows[static_cast<std::size_t>(i)].coeffs) {
          const double a = std::abs(v) * row_scale_[i] * col_scale_[j];
          if (a == 0.0) continue;
          amin = std::min(amin, a);
          amax = std::max(amax, a);
        }
        if (amax > 0.0) row_scale_[i] *= pow2_round(1.0 / std::sqrt(amin * amax));
      }
      std::vector<double> cmin(n_, kInf), cmax(n_, 0.0);
      for (int i = 0; i < m_; ++i) {
        for (const auto& [j, v] : p_.rows[static_cast<std::size_t>(i)].coeffs) {
          const double a = std::abs(v) * row_scale_[i] * col_scale_[j];
          if (a == 0.0) continue;
          cmin[j] = std::min(cmin[j], a);
          cmax[j] = std::max(cmax[j], a);
        }
      }
      for (int j = 0; j < n_; ++j)
        if (cmax[j] > 0.0) col_scale_[j] *= pow2_round(1.0 / std::sqrt(cmin[j] * cmax[j]));
    }
  }

  // ---- basis construction and repair ---------------------------------

  void set_nonbasic_default(int j) {
    if (std::isfinite(lo_[j])) {
      state_[j] = VarState::AtLower;
      xval_[j] = lo_[j];
    } else if (std::isfinite(hi_[j])) {
      state_[j] = VarState::AtUpper;
      xval_[j] = hi_[j];
    } else {
      state_[j] = VarState::Free;
      xval_[j] = 0.0;
    }
  }

  void init_basis() {
    basis_.clear();
    if (warm_ != nullptr && try_warm_basis()) return;
    for (int j = 0; j < n_; ++j) set_nonbasic_default(j);
    basis_.resize(m_);
    for (int i = 0; i < m_; ++i) {
      basis_[i] = nslack_begin_ + i;
      state_[nslack_begin_ + i] = VarState::Basic;
      pos_in_basis_[nslack_begin_ + i] = i;
    }
  }

  bool try_warm_basis() {
    std::vector<int> cand;
    std::vector<char> used(cols_.size(), 0);
    for (int j : warm_->basis) {
      if (j < 0 || j >= n_ + m_ || used[j]) continue;
      used[j] = 1;
      cand.push_back(j);
    }
    if (cand.size() > static_cast<std::size_t>(m_)) return false;
    // Complete with slacks of rows whose slack is still unused; branch rows
    // appended after the parent's rows pick up their slacks here.
    for (int i = 0; i < m_ && cand.size() < static_cast<std::size_t>(m_); ++i) {
      const int j = nslack_begin_ + i;
      if (!used[j]) {
        used[j] = 1;
        cand.push_back(j);
      }
    }
    if (cand.size() != static_cast<std::size_t>(m_)) return false;

    for (int j = 0; j < n_ + m_; ++j) {
      if (used[j]) continue;
      if (static_cast<std::size_t>(j) < warm_->states.size() &&
          warm_->states[static_cast<std::size_t>(j)] != VarState::Basic) {
        state_[j] = warm_->states[static_cast<std::size_t>(j)];
        switch (state_[j]) {
          case VarState::AtLower: xval_[j] = lo_[j]; break;
          case VarState::AtUpper: xval_[j] = hi_[j]; break;
          default: state_[j] = VarState::Free; xval_[j] = 0.0; break;
        }
        if (!std::isfinite(xval_[j])) set_nonbasic_default(j);
      } else {
        set_nonbasic_default(j);
      }
    }
    basis_ = cand;
    for (int i = 0; i < m_; ++i) {
      state_[basis_[i]] = VarState::Basic;
      pos_in_basis_[basis_[i]] = i;
    }
    return true;
  }

  bool have_artificials() const { return static_cast<int>(cols_.size()) > nart_begin_; }

  int add_artificial(int row, double sigma) {
    const int j = static_cast<int>(cols_.size());
    cols_.push_back(SparseCol{{row}, {sigma}});
    lo_.push_back(0.0);
    hi_.push_back(kInf);
    cost_.push_back(0.0);
    xval_.push_back(0.0);
    state_.push_back(VarState::AtLower);
    pos_in_basis_.push_back(-1);
    return j;
  }

  // Swap out-of-bound basic slacks for artificial columns so phase 1 starts
  // from a bounded-feasible basis.
  void repair_initial_violations() {
    compute_basic_values();
    bool swapped = false;
    for (int i = 0; i < m_; ++i) {
      const int j = basis_[i];
      const double v = xb_[i];
      const double viol_lo = lo_[j] - v;
      const double viol_hi = v - hi_[j];
      if (viol_lo <= cfg_.tol_feas && viol_hi <= cfg_.tol_feas) continue;
      if (j >= nslack_begin_ && j < nart_begin_) {
        // Park the slack at its nearest bound; an artificial absorbs the rest.
        const int row = j - nslack_begin_;
        pos_in_basis_[j] = -1;
        state_[j] = (viol_lo > cfg_.tol_feas) ? VarState::AtLower : VarState::AtUpper;
        xval_[j] = (state_[j] == VarState::AtLower) ? lo_[j] : hi_[j];
        const double resid = v - xval_[j];
        const int a = add_artificial(row, resid >= 0.0 ? 1.0 : -1.0);
        basis_[i] = a;
        state_[a] = VarState::Basic;
        pos_in_basis_[a] = i;
        swapped = true;
      } else {
        // A structural variable out of bounds can only come from a stale
        // warm basis; restart cold.
        warm_ = nullptr;
        for (auto& s : state_) s = VarState::AtLower;
        std::fill(pos_in_basis_.begin(), pos_in_basis_.end(), -1);
        init_basis();
        refactor();
        repair_initial_violations();
        return;
      }
    }
    if (swapped) {
      refactor();
      compute_basic_values();
    }
  }

  void ban_artificials() {
    for (std::size_t j = static_cast<std::size_t>(nart_begin_); j < cols_.size(); ++j) {
      lo_[j] = 0.0;
      hi_[j] = 0.0;
      cost_[j] = 0.0;
      if (state_[j] != VarState::Basic) {
        state_[j] = VarState::AtLower;
        xval_[j] = 0.0;
      }
    }
  }

  double infeasibility() const {
    double s = 0.0;
    for (int i = 0; i < m_; ++i)
      if (basis_[i] >= nart_begin_) s += std::abs(xb_[i]);
    return s;
  }

  // ---- factorization and solves ---------------------------------------

  void refactor() {
    if (m_ == 0) {
      etas_.clear();
      compute_basic_values();
      return;
    }
    std::vector<Eigen::Triplet<double>> trips;
    for (int i = 0; i < m_; ++i) {
      const SparseCol& col = cols_[static_cast<std::size_t>(basis_[i])];
      for (std::size_t k = 0; k < col.idx.size(); ++k)
        trips.emplace_back(col.idx[k], i, col.val[k]);
    }
    Eigen::SparseMatrix<double> B(m_, m_);
    B.setFromTriplets(trips.begin(), trips.end());
    lu_.compute(B);
    if (lu_.info() != Eigen::Success)
      throw NumericalFailure("simplex: singular basis at refactorization");
    etas_.clear();
    compute_basic_values();
  }

  void compute_basic_values() {
    Eigen::VectorXd r(m_);
    for (int i = 0; i < m_; ++i) r[i] = rhs_[i];
    for (std::size_t j = 0; j < cols_.size(); ++j) {
      if (state_[static_cast<std::size_t>(j)] == VarState::Basic) continue;
      const double v = xval_[j];
      if (v == 0.0) continue;
      const SparseCol& col = cols_[j];
      for (std::size_t k = 0; k < col.idx.size(); ++k) r[col.idx[k]] -= col.val[k] * v;
    }
    ftran(r);
    for (int i = 0; i < m_; ++i) {
      xb_[i] = r[i];
      xval_[static_cast<std::size_t>(basis_[i])] = r[i];
    }
  }

  void ftran(Eigen::VectorXd& x) {
    if (m_ == 0) return;
    work_m2_ = lu_.solve(x);
    x.swap(work_m2_);
    for (const Eta& e : etas_) {
      const double xr = x[e.r] / e.pivot;
      if (xr != 0.0)
        for (const auto& [i, v] : e.nz) x[i] -= v * xr;
      x[e.r] = xr;
    }
  }

  void btran(Eigen::VectorXd& y) {
    if (m_ == 0) return;
    for (auto it = etas_.rbegin(); it != etas_.rend(); ++it) {
      double s = 0.0;
      for (const auto& [i, v] : it->nz) s += v * y[i];
      y[it->r] = (y[it->r] - s) / it->pivot;
    }
    work_m2_ = lu_.transpose().solve(y);
    y.swap(work_m2_);
  }

  void push_eta(int r, const Eigen::VectorXd& w) {
    Eta e;
    e.r = r;
    e.pivot = w[r];
    for (int i = 0; i < m_; ++i)
      if (i != r && std::abs(w[i]) > 1e-14) e.nz.emplace_back(i, w[i]);
    etas_.push_back(std::move(e));
  }

  // ---- main loop -------------------------------------------------------

  double phase_cost(int j) const {
    if (phase_ == 1) return j >= nart_begin_ ? 1.0 : 0.0;
    return j < static_cast<int>(cost_.size()) ? cost_[static_cast<std::size_t>(j)] : 0.0;
  }

  LpStatus iterate() {
    int degen_streak = 0;
    bool bland = false;
    const long stall_budget = std::max<long>(50000, 4L * (m_ + n_));
    long stall = 0;

    while (true) {
      if (iterations_ >= max_iters_) return LpStatus::IterLimit;

      // Duals: B^T y = c_B.
      Eigen::VectorXd& y = work_m_;
      for (int i = 0; i < m_; ++i) y[i] = phase_cost(basis_[i]);
      btran(y);

      // Pricing. Artificials never re-enter.
      int q = -1, dir = 0;
      double best = cfg_.tol_cost;
      const int limit = phase_ == 1 ? static_cast<int>(cols_.size()) : nart_begin_;
      for (int j = 0; j < limit; ++j) {
        const VarState st = state_[static_cast<std::size_t>(j)];
        if (st == VarState::Basic || j >= nart_begin_) continue;
        if (lo_[j] == hi_[j]) continue;  // fixed
        const SparseCol& col = cols_[static_cast<std::size_t>(j)];
        double d = phase_cost(j);
        for (std::size_t k = 0; k < col.idx.size(); ++k) d -= y[col.idx[k]] * col.val[k];
        int cand_dir = 0;
        if ((st == VarState::AtLower || st == VarState::Free) && d < -cfg_.tol_cost) cand_dir = 1;
        else if ((st == VarState::AtUpper || st == VarState::Free) && d > cfg_.tol_cost) cand_dir = -1;
        if (cand_dir == 0) continue;
        if (bland) {
          q = j;
          dir = cand_dir;
          break;
        }
        if (std::abs(d) > best) {
          best = std::abs(d);
          q = j;
          dir = cand_dir;
        }
      }
      if (q < 0) return LpStatus::Optimal;

      // FTRAN the entering column; retry on a weak pivot right after refactor.
      Eigen::VectorXd& w = work_w_;
      for (int attempt = 0;; ++attempt) {
        w.setZero();
        const SparseCol& col = cols_[static_cast<std::size_t>(q)];
        for (std::size_t k = 0; k < col.idx.size(); ++k) w[col.idx[k]] = col.val[k];
        ftran(w);

        const auto [r, t, leave_to_upper, flip] = ratio_test(q, dir, w, bland);
        if (t == kInf) {
          if (phase_ == 1) throw NumericalFailure("simplex: unbounded phase-1 subproblem");
          return LpStatus::Unbounded;
        }
        if (!flip && r >= 0 && std::abs(w[r]) < 1e-7 && !etas_.empty() && attempt == 0) {
          refactor();  // weak pivot: refresh the factorization and redo
          continue;
        }
        apply_step(q, dir, w, r, t, leave_to_upper, flip);
        ++iterations_;
        const bool degen = t <= kTolDegen;
        if (degen) {
          ++degen_streak;
          ++stall;
        } else {
          degen_streak = 0;
          stall = 0;
          bland = false;
        }
        if (degen_streak >= cfg_.bland_threshold) bland = true;
        if (stall > stall_budget)
          throw NumericalFailure("simplex: pivoting stalled beyond anti-cycling budget");
        break;
      }
    }
  }

  struct RatioResult {
    int r;
    double t;
    bool leave_to_upper;
    bool flip;
  };

  RatioResult ratio_test(int q, int dir, const Eigen::VectorXd& w, bool bland) const {
    double tmax = kInf;
    if (std::isfinite(lo_[q]) && std::isfinite(hi_[q])) tmax = hi_[q] - lo_[q];

    int leave = -1;
    bool to_upper = false;
    double tbest = kInf;
    double pivabs = 0.0;
    for (int i = 0; i < m_; ++i) {
      const double wi = w[i];
      if (std::abs(wi) <= cfg_.tol_pivot) continue;
      const double delta = dir * wi;
      const int j = basis_[i];
      double ti;
      bool hit_upper;
      if (delta > 0.0) {
        if (!std::isfinite(lo_[j])) continue;
        ti = (xb_[i] - lo_[j]) / delta;
        hit_upper = false;
      } else {
        if (!std::isfinite(hi_[j])) continue;
        ti = (xb_[i] - hi_[j]) / delta;
        hit_upper = true;
      }
      if (ti < 0.0) ti = 0.0;
      bool take;
      if (bland) {
        take = ti < tbest || (ti == tbest && leave >= 0 && j < basis_[leave]);
      } else {
        const double window = tbest * 1e-9 + 1e-12;
        take = ti < tbest - window ||
               (ti < tbest + window &&
                (std::abs(wi) > pivabs ||
                 (std::abs(wi) == pivabs && leave >= 0 && j < basis_[leave])));
      }
      if (take) {
        tbest = ti;
        leave = i;
        to_upper = hit_upper;
        pivabs = std::abs(wi);
      }
    }
    if (tmax < tbest || (leave < 0 && std::isfinite(tmax)))
      return {-1, tmax, false, true};  // bound flip
    if (leave < 0) return {-1, kInf, false, false};
    return {leave, tbest, to_upper, false};
  }

  void apply_step(int q, int dir, const Eigen::VectorXd& w, int r, double t,
                  bool leave_to_upper, bool flip) {
    if (t > 0.0) {
      for (int i = 0; i < m_; ++i) {
        if (std::abs(w[i]) <= 1e-14) continue;
        xb_[i] -= t * dir * w[i];
        xval_[static_cast<std::size_t>(basis_[i])] = xb_[i];
      }
    }
    if (flip) {
      state_[static_cast<std::size_t>(q)] =
          state_[static_cast<std::size_t>(q)] == VarState::AtLower ? VarState::AtUpper
                                                                   : VarState::AtLower;
      xval_[static_cast<std::size_t>(q)] =
          state_[static_cast<std::size_t>(q)] == VarState::AtLower ? lo_[q] : hi_[q];
      return;
    }
    const int jl = basis_[r];
    state_[static_cast<std::size_t>(jl)] = leave_to_upper ? VarState::AtUpper : VarState::AtLower;
    xval_[static_cast<std::size_t>(jl)] = leave_to_upper ? hi_[jl] : lo_[jl];
    pos_in_basis_[jl] = -1;

    const double enter_val = xval_[static_cast<std::size_t>(q)] + dir * t;
    basis_[r] = q;
    pos_in_basis_[q] = r;
    state_[static_cast<std::size_t>(q)] = VarState::Basic;
    xb_[r] = enter_val;
    xval_[static_cast<std::size_t>(q)] = enter_val;

    push_eta(r, w);
    if (static_cast<int>(etas_.size()) >= cfg_.refactor_interval) refactor();
  }

  // ---- wrap-up ---------------------------------------------------------

  LpSolution finish(LpStatus st) {
    LpSolution sol;
    sol.status = st;
    sol.iterations = iterations_;
    sol.primal.assign(static_cast<std::size_t>(n_), 0.0);
    for (int j = 0; j < n_; ++j) sol.primal[j] = xval_[static_cast<std::size_t>(j)] * col_scale_[j];
    double obj = 0.0;
    for (int j = 0; j < n_; ++j) obj += p_.c[j] * sol.primal[j];
    sol.objective = obj;

    sol.basis.reserve(m_);
    for (int i = 0; i < m_; ++i) {
      // Basic artificials sit at zero; hand the row's own slack to warm-start
      // consumers instead of a column id that will not exist for them.
      int j = basis_[i];
      if (j >= nart_begin_) j = nslack_begin_ + cols_[static_cast<std::size_t>(j)].idx[0];
      sol.basis.push_back(j);
    }
    sol.states.assign(state_.begin(), state_.begin() + (n_ + m_));

    if (st == LpStatus::Optimal && !certify(sol.primal)) {
      if (cfg_.scale) {
        LpConfig c2 = cfg_;
        c2.scale = false;
        Simplex retry(p_, c2, nullptr);
        return retry.run();
      }
      throw NumericalFailure("simplex: optimal point failed feasibility certification");
    }
    return sol;
  }

  bool certify(const std::vector<double>& x) const {
    for (int j = 0; j < n_; ++j) {
      const double tol = cfg_.tol_feas * (1.0 + std::abs(x[j]));
      if (x[j] < p_.var_lo[j] - tol || x[j] > p_.var_hi[j] + tol) return false;
    }
    for (const Row& r : p_.rows) {
      double act = 0.0, mag = 0.0;
      for (const auto& [j, v] : r.coeffs) {
        act += v * x[static_cast<std::size_t>(j)];
        mag += std::abs(v * x[static_cast<std::size_t>(j)]);
      }
      const double tol = cfg_.tol_feas * (1.0 + std::abs(r.rhs) + mag);
      switch (r.sense) {
        case Sense::Le:
          if (act > r.rhs + tol) return false;
          break;
        case Sense::Ge:
          if (act < r.rhs - tol) return false;
          break;
        case Sense::Eq:
          if (std::abs(act - r.rhs) > tol) return false;
          break;
      }
    }
    return true;
  }

  const LpProblem& p_;
  LpConfig cfg_;
  const WarmStart* warm_;

  int m_ = 0, n_ = 0;
  int nslack_begin_ = 0, nart_begin_ = 0;
  std::vector<SparseCol> cols_;
  std::vector<double> lo_, hi_, cost_, rhs_;
  std::vector<double> row_scale_, col_scale_;

  std::vector<int> basis_;
  std::vector<int> pos_in_basis_;
  std::vector<VarState> state_;
  std::vector<double> xval_;
  std::vector<double> xb_;

  Eigen::SparseLU<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>> lu_;
  std::vector<Eta> etas_;
  mutable Eigen::VectorXd work_m_, work_m2_, work_w_;

  int phase_ = 2;
  long iterations_ = 0;
  long max_iters_ = 0;
  double infeas_tol_ = 1e-9;
};

}  // namespace

LpSolution solve_lp(const LpProblem& p, const LpConfig& cfg, const WarmStart* warm) {
  p.validate();
  if (p.num_vars() == 0) {
    LpSolution sol;
    sol.status = LpStatus::Optimal;
    for (const Row& r : p.rows) {
      const bool ok = (r.sense == Sense::Le && 0.0 <= r.rhs + cfg.tol_feas) ||
                      (r.sense == Sense::Ge && 0.0 >= r.rhs - cfg.tol_feas) ||
                      (r.sense == Sense::Eq && std::abs(r.rhs) <= cfg.tol_feas);
      if (!ok) sol.status = LpStatus::Infeasible;
    }
    return sol;
  }
  Simplex s(p, cfg, warm);
  return s.run();
}

}  // namespace ptaplan::lp
