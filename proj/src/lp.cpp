#include "matchfield/lp.hpp"

#include <limits>
#include <stdexcept>

namespace matchfield::lp {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

class Tableau {
 public:
  // rows_[i] has width_ + 1 entries; the last one is the right-hand side.
  std::vector<RationalVector> rows_;
  RationalVector cost_;  // reduced costs, last entry holds -objective
  std::vector<std::size_t> basis_;
  std::size_t width_ = 0;
  std::size_t pivots_ = 0;

  void pivot(std::size_t row, std::size_t col) {
    ++pivots_;
    RationalVector& pr = rows_[row];
    const Rational inv = 1 / pr[col];
    for (auto& x : pr)
      if (x != 0) x *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == row || rows_[i][col] == 0) continue;
      eliminate(rows_[i], pr, col);
    }
    if (cost_[col] != 0) eliminate(cost_, pr, col);
    basis_[row] = col;
  }

  static void eliminate(RationalVector& target, const RationalVector& pr, std::size_t col) {
    const Rational factor = target[col];
    for (std::size_t j = 0; j < pr.size(); ++j)
      if (pr[j] != 0) target[j] -= factor * pr[j];
  }

  // Runs simplex iterations on the current cost row. Columns flagged in
  // `blocked` never enter. Returns false when the problem is unbounded.
  bool optimize(const std::vector<bool>& blocked) {
    for (;;) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < width_; ++j) {
        if (!blocked[j] && cost_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == kNone) return true;
      std::size_t leave = kNone;
      Rational best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational& a = rows_[i][enter];
        if (a <= 0) continue;
        Rational ratio = rows_[i][width_] / a;
        if (leave == kNone || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == kNone) return false;
      pivot(leave, enter);
    }
  }

  void load_cost(const RationalVector& c) {
    cost_.assign(width_ + 1, Rational(0));
    for (std::size_t j = 0; j < c.size(); ++j) cost_[j] = c[j];
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (cost_[basis_[i]] != 0) eliminate(cost_, rows_[i], basis_[i]);
  }
};

}  // namespace

Solution solve(const Problem& problem) {
  const std::size_t nv = problem.num_variables;
  if (!problem.objective.empty() && problem.objective.size() != nv)
    throw std::invalid_argument("lp: objective has wrong dimension");
  for (const auto& c : problem.constraints)
    if (c.coefficients.size() != nv) throw std::invalid_argument("lp: constraint has wrong dimension");

  // Normalize to nonnegative right-hand sides.
  std::vector<Constraint> cons = problem.constraints;
  for (auto& c : cons) {
    if (c.rhs < 0) {
      for (auto& a : c.coefficients) a = -a;
      c.rhs = -c.rhs;
      if (c.relation == Relation::LessEqual)
        c.relation = Relation::GreaterEqual;
      else if (c.relation == Relation::GreaterEqual)
        c.relation = Relation::LessEqual;
    }
  }

  std::size_t num_slack = 0;
  std::size_t num_artificial = 0;
  for (const auto& c : cons) {
    if (c.relation != Relation::Equal) ++num_slack;
    if (c.relation != Relation::LessEqual) ++num_artificial;
  }
  const std::size_t first_artificial = nv + num_slack;

  Tableau t;
  t.width_ = nv + num_slack + num_artificial;
  t.rows_.assign(cons.size(), RationalVector(t.width_ + 1, Rational(0)));
  t.basis_.assign(cons.size(), kNone);
  std::size_t slack = nv;
  std::size_t art = first_artificial;
  for (std::size_t i = 0; i < cons.size(); ++i) {
    auto& row = t.rows_[i];
    for (std::size_t j = 0; j < nv; ++j) row[j] = cons[i].coefficients[j];
    row[t.width_] = cons[i].rhs;
    switch (cons[i].relation) {
      case Relation::LessEqual:
        row[slack] = 1;
        t.basis_[i] = slack++;
        break;
      case Relation::GreaterEqual:
        row[slack++] = -1;
        row[art] = 1;
        t.basis_[i] = art++;
        break;
      case Relation::Equal:
        row[art] = 1;
        t.basis_[i] = art++;
        break;
    }
  }

  Solution sol;
  std::vector<bool> blocked(t.width_, false);

  if (num_artificial > 0) {
    RationalVector phase1(t.width_, Rational(0));
    for (std::size_t j = first_artificial; j < t.width_; ++j) phase1[j] = 1;
    t.load_cost(phase1);
    t.optimize(blocked);  // bounded below by zero
    if (t.cost_[t.width_] != 0) {
      sol.status = Status::Infeasible;
      sol.pivots = t.pivots_;
      return sol;
    }
    // Drive zero-valued artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < t.rows_.size();) {
      if (t.basis_[i] < first_artificial) {
        ++i;
        continue;
      }
      std::size_t col = kNone;
      for (std::size_t j = 0; j < first_artificial; ++j) {
        if (t.rows_[i][j] != 0) {
          col = j;
          break;
        }
      }
      if (col == kNone) {
        t.rows_.erase(t.rows_.begin() + static_cast<std::ptrdiff_t>(i));
        t.basis_.erase(t.basis_.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        t.pivot(i, col);
        ++i;
      }
    }
    for (std::size_t j = first_artificial; j < t.width_; ++j) blocked[j] = true;
  }

  RationalVector cost(t.width_, Rational(0));
  if (!problem.objective.empty()) {
    for (std::size_t j = 0; j < nv; ++j)
      cost[j] = problem.sense == Sense::Maximize ? Rational(-problem.objective[j]) : problem.objective[j];
  }
  t.load_cost(cost);
  if (!t.optimize(blocked)) {
    sol.status = Status::Unbounded;
    sol.pivots = t.pivots_;
    return sol;
  }

  sol.status = Status::Optimal;
  sol.values.assign(nv, Rational(0));
  for (std::size_t i = 0; i < t.rows_.size(); ++i)
    if (t.basis_[i] < nv) sol.values[t.basis_[i]] = t.rows_[i][t.width_];
  Rational value = 0;
  if (!problem.objective.empty())
    for (std::size_t j = 0; j < nv; ++j) value += problem.objective[j] * sol.values[j];
  sol.objective = value;
  sol.pivots = t.pivots_;
  return sol;
}

}  // namespace matchfield::lp
