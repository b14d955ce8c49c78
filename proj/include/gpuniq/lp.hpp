#ifndef GPUNIQ_LP_HPP
#define GPUNIQ_LP_HPP

#include <optional>

#include "gpuniq/exact.hpp"

namespace gpuniq {

// Feasibility problem over free variables x:
//   equalities * x == equality_rhs,  inequalities * x >= inequality_rhs.
struct LPProblem {
  explicit LPProblem(Eigen::Index num_vars = 0)
      : equalities(0, num_vars), equality_rhs(0), inequalities(0, num_vars), inequality_rhs(0) {}

  RatMatrix equalities;
  RatVector equality_rhs;
  RatMatrix inequalities;
  RatVector inequality_rhs;

  Eigen::Index num_vars() const { return equalities.cols(); }

  void add_equality(const RatVector& row, const Rational& rhs);
  void add_inequality(const RatVector& row, const Rational& rhs);
  // Appends every row of `rows` as rows * x == rhs (resp. >=).
  void add_equalities(const RatMatrix& rows, const RatVector& rhs);
  void add_inequalities(const RatMatrix& rows, const RatVector& rhs);

  bool satisfied_by(const RatVector& x) const;
};

// Exact Phase-I simplex with Bland's rule. Returns a point satisfying every
// constraint exactly, or nullopt if the system is infeasible. Unboundedness is
// irrelevant here (no objective).
std::optional<RatVector> lp_feasible(const LPProblem& problem);

}  // namespace gpuniq

#endif  // GPUNIQ_LP_HPP
