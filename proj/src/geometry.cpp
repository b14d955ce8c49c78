#include "gpuniq/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "gpuniq/errors.hpp"

namespace gpuniq {

std::vector<Eigen::Index> indices_of(IndexSet s) {
  std::vector<Eigen::Index> out;
  for (Eigen::Index i = 0; s != 0; ++i, s >>= 1U) {
    if (s & 1U) out.push_back(i);
  }
  return out;
}

IndexSet zero_set(const RatVector& v) {
  IndexSet z = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i).is_zero()) z |= IndexSet{1} << i;
  }
  return z;
}

IndexSet Instance::polytope_zero() const { return improper_face().zero; }

Instance Instance::with_bases(const RatMatrix& G, const RatMatrix& H) const {
  Subspace t = Subspace::from_basis(G);
  Subspace dd = Subspace::from_basis(H);
  if (!(t == T)) throw std::invalid_argument("with_bases: G does not span T");
  if (!(dd == D)) throw std::invalid_argument("with_bases: H does not span D");
  Instance out = *this;
  out.T = std::move(t);
  out.D = std::move(dd);
  return out;
}

namespace {

RatMatrix with_cayley_row(const RatMatrix& m) {
  RatMatrix out(m.rows() + 1, m.cols());
  out.topRows(m.rows()) = m;
  for (Eigen::Index j = 0; j < m.cols(); ++j) out(m.rows(), j) = 1;
  return out;
}

// Calls fn(subset) for every k-subset of {0..n-1} in lexicographic order.
template <typename Fn>
void for_each_combination(Eigen::Index n, Eigen::Index k, Fn&& fn) {
  if (k > n || k < 0) return;
  std::vector<Eigen::Index> idx(static_cast<std::size_t>(k));
  for (Eigen::Index i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    fn(idx);
    Eigen::Index i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (Eigen::Index j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

std::vector<RatVector> elementary_vectors(const Subspace& S) {
  const Eigen::Index m = S.ambient_dim();
  if (S.dim() == 0) return {};
  if (m > 64) throw LimitExceeded("elementary_vectors: ambient dimension above 64");
  // S = ker W with W of full row rank q.
  const RatMatrix W = S.orthogonal_complement().basis().transpose();
  const Eigen::Index q = W.rows();

  std::vector<RatVector> out;
  std::set<IndexSet> seen;
  for_each_combination(m, q + 1, [&](const std::vector<Eigen::Index>& cols) {
    RatVector x = RatVector::Zero(m);
    bool nonzero = false;
    RatMatrix minor(q, q);
    for (Eigen::Index drop = 0; drop <= q; ++drop) {
      Eigen::Index c = 0;
      for (Eigen::Index j = 0; j <= q; ++j) {
        if (j == drop) continue;
        minor.col(c++) = W.col(cols[static_cast<std::size_t>(j)]);
      }
      Rational det = q == 0 ? Rational(1) : determinant(minor);
      if (drop % 2 == 1) det = -det;
      if (!det.is_zero()) nonzero = true;
      x(cols[static_cast<std::size_t>(drop)]) = std::move(det);
    }
    if (!nonzero) return;
    const IndexSet support = ~zero_set(x) & full_index_set(m);
    if (!seen.insert(support).second) return;
    out.push_back(primitive_integer(x));
  });
  return out;
}

std::vector<RatVector> polytope_vertices(const RatMatrix& A) {
  const Eigen::Index m = A.cols();
  const Subspace kerA = kernel_basis(A);
  std::vector<RatVector> vertices;
  IndexSet covered = 0;
  for (const RatVector& e : elementary_vectors(kerA)) {
    // primitive_integer makes the first nonzero entry positive, so a sign
    // pattern in {0,+} is the only nonnegative representative.
    bool nonneg = true;
    Rational sum = 0;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (e(i).sign() < 0) {
        nonneg = false;
        break;
      }
      sum += e(i);
    }
    if (!nonneg) continue;
    covered |= ~zero_set(e) & full_index_set(m);
    RatVector v = e;
    for (Eigen::Index i = 0; i < m; ++i) v(i) /= sum;
    vertices.push_back(std::move(v));
  }
  if (vertices.empty() || covered != full_index_set(m)) throw EmptyPolytope();
  return vertices;
}

std::vector<Face> face_lattice(const std::vector<RatVector>& vertices) {
  if (vertices.empty()) throw std::invalid_argument("face_lattice: no vertices");
  std::vector<IndexSet> vz;
  vz.reserve(vertices.size());
  for (const auto& v : vertices) vz.push_back(zero_set(v));

  std::set<IndexSet> closed;
  for (IndexSet z : vz) {
    std::vector<IndexSet> fresh{z};
    for (IndexSet c : closed) fresh.push_back(c & z);
    closed.insert(fresh.begin(), fresh.end());
  }

  std::vector<Face> faces;
  for (IndexSet z : closed) {
    Face f;
    f.zero = z;
    for (std::size_t k = 0; k < vz.size(); ++k) {
      if ((z & ~vz[k]) == 0) f.vertices.push_back(k);
    }
    faces.push_back(std::move(f));
  }
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
    return a.vertices < b.vertices;
  });
  return faces;
}

Instance build_instance(const RatMatrix& A, const RatMatrix& B) {
  const Eigen::Index m = A.cols();
  if (m < 1) throw InvalidInput("A must have at least one column");
  if (B.cols() != m) {
    throw InvalidInput("A and B must have the same number of columns (" + std::to_string(m) + " vs " +
                       std::to_string(B.cols()) + ")");
  }
  if (m > 64) throw InvalidInput("at most 64 columns are supported");

  Instance inst;
  inst.A = A;
  inst.B = B;
  inst.calA = with_cayley_row(A);
  inst.calB = with_cayley_row(B);
  inst.T = kernel_basis(inst.calA);
  inst.D = kernel_basis(inst.calB);

  inst.I = RatMatrix::Zero(m, m - 1);
  for (Eigen::Index j = 0; j + 1 < m; ++j) {
    inst.I(j, j) = 1;
    inst.I(m - 1, j) = -1;
  }
  inst.M = B * inst.I;
  inst.L_dim = rank(inst.M);
  inst.Mstar = generalized_inverse(inst.M);
  inst.E = inst.I * inst.Mstar;
  inst.Lperp = kernel_basis(inst.M.transpose());
  if (inst.d() != m - 1 - inst.L_dim) {
    throw std::logic_error("build_instance: dim D != m - 1 - dim L");
  }

  inst.vertices = polytope_vertices(A);
  inst.faces = face_lattice(inst.vertices);
  return inst;
}

}  // namespace gpuniq
