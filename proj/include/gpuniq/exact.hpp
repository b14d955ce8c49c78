#ifndef GPUNIQ_EXACT_HPP
#define GPUNIQ_EXACT_HPP

#include <Eigen/Core>
#include <vector>

#include "gpuniq/rational.hpp"

namespace gpuniq {

using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

struct RrefResult {
  RatMatrix reduced;
  std::vector<Eigen::Index> pivots;
  Eigen::Index rank = 0;
};

RrefResult rref(const RatMatrix& m);
Eigen::Index rank(const RatMatrix& m);

bool is_zero(const RatMatrix& m);

RatMatrix to_rational(const Eigen::MatrixXd& m);
Eigen::MatrixXd to_double(const RatMatrix& m);
Eigen::VectorXd to_double(const RatVector& v);

// Linear subspace of Q^n stored as a basis matrix (columns independent).
//
// Two subspaces compare equal iff they have the same span; the stored basis is
// canonical (transposed RREF of the spanning set) so equal spans also give
// equal bases, but callers should not rely on particular entries.
class Subspace {
 public:
  Subspace() = default;

  // Span of the columns of `spanning` (need not be independent).
  static Subspace span(const RatMatrix& spanning);
  // Use `basis` as-is; its columns must be independent.
  static Subspace from_basis(RatMatrix basis);
  static Subspace zero(Eigen::Index ambient);
  static Subspace full(Eigen::Index ambient);

  const RatMatrix& basis() const { return basis_; }
  Eigen::Index ambient_dim() const { return basis_.rows(); }
  Eigen::Index dim() const { return basis_.cols(); }

  bool contains(const RatVector& x) const;
  bool contains(const Subspace& other) const;
  Subspace orthogonal_complement() const;

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  explicit Subspace(RatMatrix basis) : basis_(std::move(basis)) {}
  RatMatrix basis_;
};

// Columns span ker(m). Canonical RREF form: one column per free variable, with
// a 1 in that free coordinate.
Subspace kernel_basis(const RatMatrix& m);

// Moore-Penrose inverse computed exactly from the rank factorization m = C F.
// Satisfies m * M* * m = m; the identity is asserted before returning.
RatMatrix generalized_inverse(const RatMatrix& m);

// Solve the square nonsingular system a x = b exactly. Throws if singular.
RatMatrix solve_square(const RatMatrix& a, const RatMatrix& b);

// Determinant by fraction-free elimination on a copy.
Rational determinant(const RatMatrix& a);

// Scale to coprime integers with first nonzero entry positive. Zero stays zero.
RatVector primitive_integer(const RatVector& v);

}  // namespace gpuniq

#endif  // GPUNIQ_EXACT_HPP
