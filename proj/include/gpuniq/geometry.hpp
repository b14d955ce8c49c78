#ifndef GPUNIQ_GEOMETRY_HPP
#define GPUNIQ_GEOMETRY_HPP

#include <cstdint>
#include <vector>

#include "gpuniq/exact.hpp"

namespace gpuniq {

// Index set over [m] as a bitmask; m <= 64.
using IndexSet = std::uint64_t;

inline bool contains_index(IndexSet s, Eigen::Index i) { return (s >> i) & 1U; }
inline IndexSet full_index_set(Eigen::Index m) {
  return m >= 64 ? ~IndexSet{0} : ((IndexSet{1} << m) - 1);
}
std::vector<Eigen::Index> indices_of(IndexSet s);

// Coordinates where v vanishes.
IndexSet zero_set(const RatVector& v);

// A nonempty face of the coefficient polytope, described combinatorially.
struct Face {
  std::vector<std::size_t> vertices;  // indices into Instance::vertices, ascending
  IndexSet zero = 0;                  // coordinates vanishing on every vertex of the face
};

// A system A (c o x^B) = 0 together with every exact object derived from (A, B).
struct Instance {
  RatMatrix A;        // l x m coefficient matrix
  RatMatrix B;        // n x m exponent matrix
  RatMatrix calA;     // A over a row of ones
  RatMatrix calB;     // B over a row of ones
  Subspace T;         // ker calA, basis G
  Subspace D;         // ker calB, basis H
  RatMatrix I;        // m x (m-1) incidence matrix (differences against the last column)
  RatMatrix M;        // B I
  RatMatrix Mstar;    // generalized inverse of M
  RatMatrix E;        // I M*
  Subspace Lperp;     // ker M^T
  Eigen::Index L_dim = 0;
  std::vector<RatVector> vertices;  // vertices of the closed coefficient polytope
  std::vector<Face> faces;          // nonempty faces, improper face last

  Eigen::Index m() const { return A.cols(); }
  Eigen::Index n() const { return B.rows(); }
  Eigen::Index l() const { return A.rows(); }
  Eigen::Index d() const { return D.dim(); }
  Eigen::Index dP() const { return T.dim(); }
  bool dimension_ok() const { return d() == dP(); }

  const RatMatrix& G() const { return T.basis(); }
  const RatMatrix& H() const { return D.basis(); }
  // D-perp realized as ker H^T.
  Subspace Dperp() const { return D.orthogonal_complement(); }
  // zero(closure of P): coordinates zero on the whole polytope.
  IndexSet polytope_zero() const;
  const Face& improper_face() const { return faces.back(); }

  // Replace the basis matrices G and H with other bases of the same subspaces.
  // Throws std::invalid_argument if a span differs.
  Instance with_bases(const RatMatrix& G, const RatMatrix& H) const;
};

// Throws EmptyPolytope if ker A has no strictly positive vector, and
// InvalidInput on shape errors.
Instance build_instance(const RatMatrix& A, const RatMatrix& B);

// One representative per +- pair of support-minimal nonzero vectors of S,
// as coprime integer vectors whose first nonzero entry is positive. Built from
// signed maximal minors of a basis of the orthogonal complement.
std::vector<RatVector> elementary_vectors(const Subspace& S);

// Vertices of closure(ker A n R^m_> n simplex): nonnegative elementary vectors
// of ker A scaled to coordinate sum one. Throws EmptyPolytope.
std::vector<RatVector> polytope_vertices(const RatMatrix& A);

// All nonempty faces. Zero sets of the vertices are closed under intersection;
// each closed zero set Z yields the face of all vertices vanishing on Z.
// Faces are sorted by vertex count, then lexicographically; the improper face
// comes last.
std::vector<Face> face_lattice(const std::vector<RatVector>& vertices);

}  // namespace gpuniq

#endif  // GPUNIQ_GEOMETRY_HPP
