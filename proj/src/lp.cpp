#include "gpuniq/lp.hpp"

#include <stdexcept>
#include <vector>

namespace gpuniq {

namespace {

void append_row(RatMatrix& m, RatVector& rhs, const RatVector& row, const Rational& value) {
  if (row.size() != m.cols()) throw std::invalid_argument("LPProblem: column count mismatch");
  m.conservativeResize(m.rows() + 1, Eigen::NoChange);
  m.row(m.rows() - 1) = row.transpose();
  rhs.conservativeResize(rhs.size() + 1);
  rhs(rhs.size() - 1) = value;
}

}  // namespace

void LPProblem::add_equality(const RatVector& row, const Rational& rhs) {
  append_row(equalities, equality_rhs, row, rhs);
}

void LPProblem::add_inequality(const RatVector& row, const Rational& rhs) {
  append_row(inequalities, inequality_rhs, row, rhs);
}

void LPProblem::add_equalities(const RatMatrix& rows, const RatVector& rhs) {
  for (Eigen::Index i = 0; i < rows.rows(); ++i) add_equality(rows.row(i).transpose(), rhs(i));
}

void LPProblem::add_inequalities(const RatMatrix& rows, const RatVector& rhs) {
  for (Eigen::Index i = 0; i < rows.rows(); ++i) add_inequality(rows.row(i).transpose(), rhs(i));
}

bool LPProblem::satisfied_by(const RatVector& x) const {
  if (x.size() != num_vars()) return false;
  for (Eigen::Index i = 0; i < equalities.rows(); ++i) {
    Rational s = 0;
    for (Eigen::Index j = 0; j < x.size(); ++j) s += equalities(i, j) * x(j);
    if (s != equality_rhs(i)) return false;
  }
  for (Eigen::Index i = 0; i < inequalities.rows(); ++i) {
    Rational s = 0;
    for (Eigen::Index j = 0; j < x.size(); ++j) s += inequalities(i, j) * x(j);
    if (s < inequality_rhs(i)) return false;
  }
  return true;
}

std::optional<RatVector> lp_feasible(const LPProblem& problem) {
  if (problem.equalities.cols() != problem.inequalities.cols() ||
      problem.equalities.rows() != problem.equality_rhs.size() ||
      problem.inequalities.rows() != problem.inequality_rhs.size()) {
    throw std::invalid_argument("lp_feasible: malformed problem");
  }
  const Eigen::Index n = problem.num_vars();
  const Eigen::Index ne = problem.equalities.rows();
  const Eigen::Index ni = problem.inequalities.rows();
  const Eigen::Index rows = ne + ni;
  if (rows == 0) return RatVector::Zero(n);

  // Standard form over z = (x+, x-, s) >= 0, one artificial per row.
  const Eigen::Index nz = 2 * n + ni;
  const Eigen::Index art0 = nz;
  const Eigen::Index ncols = nz + rows;
  RatMatrix tab = RatMatrix::Zero(rows, ncols);
  RatVector rhs(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const bool is_eq = i < ne;
    const auto src = is_eq ? problem.equalities.row(i) : problem.inequalities.row(i - ne);
    Rational b = is_eq ? problem.equality_rhs(i) : problem.inequality_rhs(i - ne);
    for (Eigen::Index j = 0; j < n; ++j) {
      tab(i, j) = src(j);
      tab(i, n + j) = -src(j);
    }
    if (!is_eq) tab(i, 2 * n + (i - ne)) = -1;
    if (b.sign() < 0) {
      for (Eigen::Index j = 0; j < nz; ++j) {
        if (!tab(i, j).is_zero()) tab(i, j) = -tab(i, j);
      }
      b = -b;
    }
    tab(i, art0 + i) = 1;
    rhs(i) = b;
  }

  std::vector<Eigen::Index> basis(static_cast<std::size_t>(rows));
  for (Eigen::Index i = 0; i < rows; ++i) basis[static_cast<std::size_t>(i)] = art0 + i;

  // Reduced costs for min sum(artificials).
  RatVector cost = RatVector::Zero(ncols);
  Rational objective = 0;
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < nz; ++j) {
      if (!tab(i, j).is_zero()) cost(j) -= tab(i, j);
    }
    objective += rhs(i);
  }

  while (objective.sign() > 0) {
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < ncols; ++j) {
      if (cost(j).sign() < 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;

    Eigen::Index leave = -1;
    Rational best;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (tab(i, enter).sign() <= 0) continue;
      Rational ratio = rhs(i) / tab(i, enter);
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
        leave = i;
        best = std::move(ratio);
      }
    }
    // Phase I is bounded below by 0, so a positive pivot always exists.
    if (leave < 0) throw std::logic_error("lp_feasible: unbounded phase I");

    const Rational piv = tab(leave, enter);
    if (piv != Rational(1)) {
      const Rational inv = Rational(1) / piv;
      for (Eigen::Index j = 0; j < ncols; ++j) {
        if (!tab(leave, j).is_zero()) tab(leave, j) *= inv;
      }
      rhs(leave) *= inv;
    }
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == leave || tab(i, enter).is_zero()) continue;
      const Rational f = tab(i, enter);
      for (Eigen::Index j = 0; j < ncols; ++j) {
        if (!tab(leave, j).is_zero()) tab(i, j) -= f * tab(leave, j);
      }
      rhs(i) -= f * rhs(leave);
    }
    if (!cost(enter).is_zero()) {
      const Rational f = cost(enter);
      for (Eigen::Index j = 0; j < ncols; ++j) {
        if (!tab(leave, j).is_zero()) cost(j) -= f * tab(leave, j);
      }
      objective += f * rhs(leave);
    }
    basis[static_cast<std::size_t>(leave)] = enter;
  }

  if (objective.sign() != 0) return std::nullopt;

  RatVector z = RatVector::Zero(nz);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Eigen::Index b = basis[static_cast<std::size_t>(i)];
    if (b < nz) z(b) = rhs(i);
  }
  RatVector x(n);
  for (Eigen::Index j = 0; j < n; ++j) x(j) = z(j) - z(n + j);
  if (!problem.satisfied_by(x)) throw std::logic_error("lp_feasible: witness failed verification");
  return x;
}

}  // namespace gpuniq
