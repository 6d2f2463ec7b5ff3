#include "toricmin/lp.hpp"

#include <stdexcept>

namespace toricmin {

namespace {

// Tableau over columns [u (n) | v (n) | slack (m) | artificial (m)], with
// x = u - v and a_i.u - a_i.v - s_i = -b_i, rows negated so the rhs is >= 0.
class Simplex {
 public:
  Simplex(const std::vector<AffineForm> &cons, std::size_t n) : n_(n), m_(cons.size()) {
    cols_ = 2 * n_ + 2 * m_;
    tab_.assign(m_, Point(cols_ + 1, Scalar(0)));
    basis_.resize(m_);
    for (size_t i = 0; i < m_; ++i) {
      const auto &f = cons[i];
      Scalar rhs = -f.constant;
      Scalar sign(rhs.sign() < 0 ? -1 : 1);
      for (size_t j = 0; j < n_; ++j) {
        tab_[i][j] = sign * f.coef[j];
        tab_[i][n_ + j] = -sign * f.coef[j];
      }
      tab_[i][2 * n_ + i] = -sign;
      tab_[i][2 * n_ + m_ + i] = Scalar(1);
      tab_[i][cols_] = sign * rhs;
      basis_[i] = 2 * n_ + m_ + i;
    }
  }

  LpResult run(const Point &objective) {
    LpResult res;
    // Phase 1: minimize the sum of artificials.
    Point phase1(cols_, Scalar(0));
    for (size_t i = 0; i < m_; ++i) phase1[2 * n_ + m_ + i] = Scalar(1);
    if (!optimize(phase1, /*allow_artificial=*/true)) {
      // Phase 1 is bounded below by zero; cannot happen.
      throw std::logic_error("simplex: phase 1 unbounded");
    }
    Scalar infeas(0);
    for (size_t i = 0; i < m_; ++i)
      if (basis_[i] >= 2 * n_ + m_) infeas += tab_[i][cols_];
    if (infeas.sign() > 0) {
      res.status = LpResult::Status::Infeasible;
      return res;
    }
    drive_out_artificials();

    Point cost(cols_, Scalar(0));
    for (size_t j = 0; j < n_; ++j) {
      cost[j] = objective[j];
      cost[n_ + j] = -objective[j];
    }
    if (!optimize(cost, /*allow_artificial=*/false)) {
      res.status = LpResult::Status::Unbounded;
      return res;
    }
    res.status = LpResult::Status::Optimal;
    res.x.assign(n_, Scalar(0));
    for (size_t i = 0; i < m_; ++i) {
      size_t b = basis_[i];
      if (b < n_) res.x[b] += tab_[i][cols_];
      else if (b < 2 * n_) res.x[b - n_] -= tab_[i][cols_];
    }
    res.value = dot(objective, res.x);
    return res;
  }

 private:
  // Returns false when unbounded.
  bool optimize(const Point &cost, bool allow_artificial) {
    size_t limit = allow_artificial ? cols_ : 2 * n_ + m_;
    for (int iter = 0; iter < 100000; ++iter) {
      // Reduced costs c_j - c_B B^{-1} A_j, read straight off the tableau.
      size_t enter = cols_;
      for (size_t j = 0; j < limit; ++j) {
        if (is_basic(j)) continue;
        Scalar rc = cost[j];
        for (size_t i = 0; i < m_; ++i)
          if (!tab_[i][j].is_zero()) rc -= cost[basis_[i]] * tab_[i][j];
        if (rc.sign() < 0) {
          enter = j;
          break;  // Bland: smallest index
        }
      }
      if (enter == cols_) return true;
      size_t leave = m_;
      Scalar best;
      for (size_t i = 0; i < m_; ++i) {
        if (tab_[i][enter].sign() <= 0) continue;
        Scalar ratio = tab_[i][cols_] / tab_[i][enter];
        if (leave == m_) {
          leave = i;
          best = ratio;
          continue;
        }
        int c = compare(ratio, best);
        if (c < 0 || (c == 0 && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m_) return false;
      pivot(leave, enter);
    }
    throw std::runtime_error("simplex: iteration limit");
  }

  void drive_out_artificials() {
    for (size_t i = 0; i < m_; ++i) {
      if (basis_[i] < 2 * n_ + m_) continue;
      for (size_t j = 0; j < 2 * n_ + m_; ++j) {
        if (is_basic(j) || tab_[i][j].is_zero()) continue;
        pivot(i, j);
        break;
      }
      // If nothing was found the row is redundant; its artificial stays at 0
      // and can never re-enter because phase 2 excludes artificial columns.
    }
  }

  bool is_basic(size_t j) const {
    for (auto b : basis_)
      if (b == j) return true;
    return false;
  }

  void pivot(size_t r, size_t c) {
    Scalar p = tab_[r][c];
    for (auto &x : tab_[r]) x /= p;
    for (size_t i = 0; i < m_; ++i) {
      if (i == r || tab_[i][c].is_zero()) continue;
      Scalar f = tab_[i][c];
      for (size_t j = 0; j <= cols_; ++j)
        if (!tab_[r][j].is_zero()) tab_[i][j] -= f * tab_[r][j];
      tab_[i][c] = Scalar(0);
    }
    basis_[r] = c;
  }

  size_t n_, m_, cols_;
  std::vector<Point> tab_;
  std::vector<size_t> basis_;
};

}  // namespace

LpResult solve_lp(const std::vector<AffineForm> &constraints, const Point &objective) {
  if (constraints.empty()) {
    LpResult r;
    bool zero = true;
    for (const auto &c : objective)
      if (!c.is_zero()) zero = false;
    r.status = zero ? LpResult::Status::Optimal : LpResult::Status::Unbounded;
    r.x.assign(objective.size(), Scalar(0));
    r.value = Scalar(0);
    return r;
  }
  Simplex s(constraints, objective.size());
  return s.run(objective);
}

LpResult solve_lp_lexmin(const std::vector<AffineForm> &constraints, const Point &objective) {
  LpResult first = solve_lp(constraints, objective);
  if (first.status != LpResult::Status::Optimal) return first;
  size_t n = objective.size();
  std::vector<AffineForm> cons = constraints;
  // Fix the objective at its optimum, then minimize the coordinates in order.
  cons.push_back(AffineForm{scale(Scalar(-1), objective), first.value});
  LpResult cur = first;
  for (size_t k = 0; k < n; ++k) {
    Point e(n, Scalar(0));
    e[k] = Scalar(1);
    LpResult r = solve_lp(cons, e);
    if (r.status != LpResult::Status::Optimal) break;  // coordinate unbounded below: keep current
    cur.x = r.x;
    Point neg(n, Scalar(0));
    neg[k] = Scalar(-1);
    cons.push_back(AffineForm{neg, r.x[k]});
  }
  cur.value = dot(objective, cur.x);
  cur.value = prefer_exact(first.value, cur.value);
  return cur;
}

}  // namespace toricmin
