#include "gpuniq/exact.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace gpuniq {

RrefResult rref(const RatMatrix& m) {
  RrefResult out;
  out.reduced = m;
  RatMatrix& r = out.reduced;
  const Eigen::Index rows = r.rows();
  const Eigen::Index cols = r.cols();
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index piv = row;
    while (piv < rows && r(piv, col).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != row) r.row(piv).swap(r.row(row));
    const Rational inv = Rational(1) / r(row, col);
    for (Eigen::Index j = col; j < cols; ++j) r(row, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == row || r(i, col).is_zero()) continue;
      const Rational f = r(i, col);
      for (Eigen::Index j = col; j < cols; ++j) {
        if (!r(row, j).is_zero()) r(i, j) -= f * r(row, j);
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;
  return out;
}

Eigen::Index rank(const RatMatrix& m) { return rref(m).rank; }

bool is_zero(const RatMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (!m(i, j).is_zero()) return false;
    }
  }
  return true;
}

RatMatrix to_rational(const Eigen::MatrixXd& m) {
  RatMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rational::from_double_decimal(m(i, j));
  }
  return out;
}

Eigen::MatrixXd to_double(const RatMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_double();
  }
  return out;
}

Eigen::VectorXd to_double(const RatVector& v) {
  Eigen::VectorXd out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = v(i).to_double();
  return out;
}

Subspace Subspace::span(const RatMatrix& spanning) {
  const RrefResult rr = rref(spanning.transpose());
  return Subspace(rr.reduced.topRows(rr.rank).transpose());
}

Subspace Subspace::from_basis(RatMatrix basis) {
  if (rank(basis) != basis.cols()) throw std::invalid_argument("Subspace: basis columns are dependent");
  return Subspace(std::move(basis));
}

Subspace Subspace::zero(Eigen::Index ambient) { return Subspace(RatMatrix(ambient, 0)); }

Subspace Subspace::full(Eigen::Index ambient) {
  RatMatrix id = RatMatrix::Zero(ambient, ambient);
  for (Eigen::Index i = 0; i < ambient; ++i) id(i, i) = 1;
  return Subspace(std::move(id));
}

bool Subspace::contains(const RatVector& x) const {
  if (x.size() != ambient_dim()) throw std::invalid_argument("Subspace::contains: size mismatch");
  RatMatrix aug(ambient_dim(), dim() + 1);
  aug << basis_, x;
  return rank(aug) == dim();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim()) return false;
  RatMatrix aug(ambient_dim(), dim() + other.dim());
  aug << basis_, other.basis_;
  return rank(aug) == dim();
}

Subspace Subspace::orthogonal_complement() const {
  if (dim() == 0) return full(ambient_dim());
  return kernel_basis(basis_.transpose());
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_dim() == b.ambient_dim() && a.dim() == b.dim() && a.contains(b);
}

Subspace kernel_basis(const RatMatrix& m) {
  const RrefResult rr = rref(m);
  const Eigen::Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto p : rr.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  RatMatrix k = RatMatrix::Zero(n, n - rr.rank);
  Eigen::Index col = 0;
  for (Eigen::Index f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    k(f, col) = 1;
    for (Eigen::Index i = 0; i < rr.rank; ++i) k(rr.pivots[static_cast<std::size_t>(i)], col) = -rr.reduced(i, f);
    ++col;
  }
  return Subspace::from_basis(std::move(k));
}

RatMatrix solve_square(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != a.rows()) throw std::invalid_argument("solve_square: shape");
  RatMatrix aug(a.rows(), a.cols() + b.cols());
  aug << a, b;
  const RrefResult rr = rref(aug);
  if (rr.rank < a.rows() || (a.rows() > 0 && rr.pivots[static_cast<std::size_t>(a.rows() - 1)] >= a.cols())) {
    throw std::domain_error("solve_square: singular matrix");
  }
  return rr.reduced.rightCols(b.cols());
}

Rational determinant(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: not square");
  RatMatrix r = a;
  const Eigen::Index n = r.rows();
  Rational det = 1;
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index piv = c;
    while (piv < n && r(piv, c).is_zero()) ++piv;
    if (piv == n) return Rational(0);
    if (piv != c) {
      r.row(piv).swap(r.row(c));
      det = -det;
    }
    det *= r(c, c);
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (r(i, c).is_zero()) continue;
      const Rational f = r(i, c) / r(c, c);
      for (Eigen::Index j = c; j < n; ++j) r(i, j) -= f * r(c, j);
    }
  }
  return det;
}

RatMatrix generalized_inverse(const RatMatrix& m) {
  const RrefResult rr = rref(m);
  const Eigen::Index r = rr.rank;
  if (r == 0) return RatMatrix::Zero(m.cols(), m.rows());
  // m = C F with C = pivot columns of m, F = nonzero rows of rref(m).
  RatMatrix c(m.rows(), r);
  for (Eigen::Index j = 0; j < r; ++j) c.col(j) = m.col(rr.pivots[static_cast<std::size_t>(j)]);
  const RatMatrix f = rr.reduced.topRows(r);
  const RatMatrix ctc = c.transpose() * c;
  const RatMatrix fft = f * f.transpose();
  // M* = F^T (F F^T)^{-1} (C^T C)^{-1} C^T
  const RatMatrix left = solve_square(fft, f).transpose();        // F^T (F F^T)^{-1}
  const RatMatrix right = solve_square(ctc, c.transpose());       // (C^T C)^{-1} C^T
  RatMatrix mstar = left * right;
  const RatMatrix check = m * mstar * m;
  if (check != m) throw std::logic_error("generalized_inverse: m M* m != m");
  return mstar;
}

RatVector primitive_integer(const RatVector& v) {
  mpz_class lcm_den = 1;
  mpz_class gcd_num = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i).is_zero()) continue;
    mpz_class den = v(i).denominator();
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
  }
  RatVector out = v;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out(i) = v(i) * Rational(mpq_class(lcm_den));
    mpz_class num = out(i).numerator();
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), num.get_mpz_t());
  }
  if (gcd_num == 0) return out;
  Rational scale{mpq_class(gcd_num)};
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!out(i).is_zero()) {
      if (out(i).sign() < 0) scale = -scale;
      break;
    }
  }
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) /= scale;
  return out;
}

}  // namespace gpuniq
