#pragma once

#include <vector>

#include "matchfield/rational.hpp"

// Dense two-phase simplex over exact rationals. Bland's rule is used for both
// the entering and the leaving variable, so degenerate problems terminate.
namespace matchfield::lp {

enum class Relation { LessEqual, Equal, GreaterEqual };
enum class Sense { Minimize, Maximize };
enum class Status { Optimal, Infeasible, Unbounded };

struct Constraint {
  RationalVector coefficients;
  Relation relation = Relation::LessEqual;
  Rational rhs = 0;
};

/// All variables are implicitly nonnegative.
struct Problem {
  std::size_t num_variables = 0;
  Sense sense = Sense::Minimize;
  RationalVector objective;  // empty means the zero objective
  std::vector<Constraint> constraints;
};

struct Solution {
  Status status = Status::Infeasible;
  RationalVector values;  // filled when status == Optimal
  Rational objective = 0;
  std::size_t pivots = 0;
};

Solution solve(const Problem& problem);

}  // namespace matchfield::lp
