#include "latcover/lp.hpp"

#include <cassert>

#include "latcover/error.hpp"

namespace latcover {

namespace {

// Dense exact simplex, Bland's rule. Free variables are split u - w; phase 1
// uses artificials on rows with negative rhs. Sizes here are tiny (a few
// dozen rows), so the doubled standard form costs nothing that matters.
class Simplex {
 public:
  // maximize c.y subject to A y <= b, y free.
  Simplex(const std::vector<Vec>& a, const std::vector<Rat>& b, const Vec& c) {
    n_ = c.dim();
    m_ = static_cast<int>(a.size());
    int nslack = m_;
    nart_ = 0;
    for (const auto& bi : b)
      if (bi.sign() < 0) ++nart_;
    ncols_ = 2 * n_ + nslack + nart_;
    t_.assign(m_, std::vector<Rat>(ncols_ + 1));
    basis_.assign(m_, -1);
    allowed_.assign(ncols_, true);

    int art = 2 * n_ + nslack;
    for (int i = 0; i < m_; ++i) {
      bool neg = b[i].sign() < 0;
      Rat s = neg ? Rat(-1) : Rat(1);
      for (int j = 0; j < n_; ++j) {
        t_[i][j] = s * a[i][j];
        t_[i][n_ + j] = -t_[i][j];
      }
      t_[i][2 * n_ + i] = s;  // slack
      t_[i][ncols_] = s * b[i];
      if (neg) {
        t_[i][art] = Rat(1);
        basis_[i] = art;
        ++art;
      } else {
        basis_[i] = 2 * n_ + i;
      }
    }
    first_art_ = 2 * n_ + nslack;
  }

  LpStatus solve(const Vec& c) {
    if (nart_ > 0) {
      // phase 1: maximize -(sum of artificials)
      obj_.assign(ncols_ + 1, Rat(0));
      for (int j = first_art_; j < ncols_; ++j) obj_[j] = Rat(-1);
      for (int i = 0; i < m_; ++i)
        if (basis_[i] >= first_art_)
          for (int j = 0; j <= ncols_; ++j) obj_[j] += t_[i][j];
      bool ok = run();
      assert(ok);  // phase-1 objective is bounded above by 0
      (void)ok;
      if ((-obj_[ncols_]).sign() < 0) return LpStatus::Infeasible;
      purge_artificials();
    }
    // phase 2
    obj_.assign(ncols_ + 1, Rat(0));
    for (int j = 0; j < n_; ++j) {
      obj_[j] = c[j];
      obj_[n_ + j] = -c[j];
    }
    for (int i = 0; i < m_; ++i) {
      int bj = basis_[i];
      Rat f = obj_[bj];
      if (f.is_zero()) continue;
      for (int j = 0; j <= ncols_; ++j) obj_[j] -= f * t_[i][j];
    }
    if (!run()) return LpStatus::Unbounded;
    return LpStatus::Optimal;
  }

  Rat objective_value() const { return -obj_[ncols_]; }

  Vec solution() const {
    Vec y(n_);
    for (int i = 0; i < m_; ++i) {
      int j = basis_[i];
      if (j < n_)
        y[j] += t_[i][ncols_];
      else if (j < 2 * n_)
        y[j - n_] -= t_[i][ncols_];
    }
    return y;
  }

 private:
  void pivot(int r, int c) {
    Rat p = t_[r][c];
    for (auto& x : t_[r]) x /= p;
    for (int i = 0; i < m_; ++i) {
      if (i == r) continue;
      Rat f = t_[i][c];
      if (f.is_zero()) continue;
      for (int j = 0; j <= ncols_; ++j) t_[i][j] -= f * t_[r][j];
    }
    Rat f = obj_[c];
    if (!f.is_zero())
      for (int j = 0; j <= ncols_; ++j) obj_[j] -= f * t_[r][j];
    basis_[r] = c;
  }

  // Bland's rule; returns false on unbounded.
  bool run() {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < ncols_; ++j)
        if (allowed_[j] && obj_[j].sign() > 0) {
          enter = j;
          break;
        }
      if (enter < 0) return true;
      int leave = -1;
      Rat best;
      for (int i = 0; i < m_; ++i) {
        if (t_[i][enter].sign() <= 0) continue;
        Rat ratio = t_[i][ncols_] / t_[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  // After a feasible phase 1, pivot artificials out of the basis (or drop
  // redundant rows) and bar them from re-entering.
  void purge_artificials() {
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < first_art_) continue;
      int c = -1;
      for (int j = 0; j < first_art_; ++j)
        if (!t_[i][j].is_zero()) {
          c = j;
          break;
        }
      if (c >= 0) {
        // rhs is 0 in this row, so the pivot keeps feasibility
        obj_.assign(ncols_ + 1, Rat(0));  // dummy; reset by phase 2
        Rat p = t_[i][c];
        for (auto& x : t_[i]) x /= p;
        for (int r = 0; r < m_; ++r) {
          if (r == i) continue;
          Rat f = t_[r][c];
          if (f.is_zero()) continue;
          for (int j = 0; j <= ncols_; ++j) t_[r][j] -= f * t_[i][j];
        }
        basis_[i] = c;
      }
    }
    // remove rows still basic in an artificial (all-zero, redundant)
    std::vector<std::vector<Rat>> nt;
    std::vector<int> nb;
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] >= first_art_) continue;
      nt.push_back(std::move(t_[i]));
      nb.push_back(basis_[i]);
    }
    t_ = std::move(nt);
    basis_ = std::move(nb);
    m_ = static_cast<int>(t_.size());
    for (int j = first_art_; j < ncols_; ++j) allowed_[j] = false;
  }

  int n_ = 0, m_ = 0, ncols_ = 0, nart_ = 0, first_art_ = 0;
  std::vector<std::vector<Rat>> t_;
  std::vector<Rat> obj_;
  std::vector<int> basis_;
  std::vector<bool> allowed_;
};

}  // namespace

LpOptimum lp_maximize(const std::vector<Halfspace>& constraints, const Vec& objective) {
  int n = objective.dim();
  std::vector<Vec> a;
  std::vector<Rat> b;
  a.reserve(constraints.size());
  for (const auto& h : constraints) {
    if (h.dim() != n)
      throw Error(Errc::DimensionMismatch, "constraint dim " + std::to_string(h.dim()) +
                                               " vs objective dim " + std::to_string(n));
    a.push_back(h.normal);
    b.push_back(h.offset);
  }
  Simplex sx(a, b, objective);
  LpStatus st = sx.solve(objective);
  LpOptimum out{st, Rat(0), Vec(n)};
  if (st == LpStatus::Optimal) {
    out.value = sx.objective_value();
    out.point = sx.solution();
  }
  return out;
}

LpResult lp_feasible(const std::vector<Halfspace>& constraints,
                     const std::vector<bool>& strict_flags, int dim) {
  if (!strict_flags.empty() && strict_flags.size() != constraints.size())
    throw Error(Errc::DimensionMismatch, "strict_flags size mismatch");
  int n = dim;
  for (const auto& h : constraints) {
    if (n < 0) n = h.dim();
    if (h.dim() != n) throw Error(Errc::DimensionMismatch, "mixed constraint dimensions");
  }
  if (n < 0) throw Error(Errc::DimensionMismatch, "empty system needs an explicit dimension");
  if (constraints.empty()) return LpResult{Vec(n)};

  // maximize t subject to normal.y + [strict] t <= offset, t <= 1
  std::vector<Halfspace> sys;
  sys.reserve(constraints.size() + 1);
  for (size_t i = 0; i < constraints.size(); ++i) {
    Vec row(n + 1);
    for (int j = 0; j < n; ++j) row[j] = constraints[i].normal[j];
    row[n] = (!strict_flags.empty() && strict_flags[i]) ? Rat(1) : Rat(0);
    sys.emplace_back(std::move(row), constraints[i].offset);
  }
  Vec cap(n + 1);
  cap[n] = Rat(1);
  sys.emplace_back(cap, Rat(1));

  Vec obj(n + 1);
  obj[n] = Rat(1);
  LpOptimum opt = lp_maximize(sys, obj);
  if (opt.status == LpStatus::Unbounded)
    throw Error(Errc::Internal, "capped objective reported unbounded");
  if (opt.status == LpStatus::Infeasible) return LpResult{std::nullopt};

  bool any_strict = false;
  for (bool f : strict_flags) any_strict |= f;
  if (any_strict && opt.value.sign() <= 0) return LpResult{std::nullopt};

  Vec y(n);
  for (int j = 0; j < n; ++j) y[j] = opt.point[j];
  return LpResult{std::move(y)};
}

}  // namespace latcover
