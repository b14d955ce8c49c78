#include <doctest.h>

#include <algorithm>

#include "gpuniq/analysis.hpp"
#include "gpuniq/errors.hpp"
#include "gpuniq/geometry.hpp"
#include "support.hpp"

using namespace gpuniq;
using testsupport::rmat;
using testsupport::rvec;

namespace {

bool same_vector_set(std::vector<RatVector> a, std::vector<RatVector> b) {
  if (a.size() != b.size()) return false;
  for (const auto& x : a) {
    if (std::count(b.begin(), b.end(), x) != 1) return false;
  }
  return true;
}

bool same_up_to_scale(const std::vector<RatVector>& a, const std::vector<RatVector>& b) {
  if (a.size() != b.size()) return false;
  for (const auto& x : a) {
    if (std::count_if(b.begin(), b.end(), [&](const RatVector& y) { return testsupport::proportional(x, y); }) != 1) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("example instance objects") {
  const Instance inst = build_instance(testsupport::example_A(), testsupport::example_B());
  CHECK(inst.m() == 5);
  CHECK(inst.n() == 2);
  CHECK(inst.l() == 2);
  CHECK(inst.dP() == 2);
  CHECK(inst.d() == 2);
  CHECK(inst.L_dim == 2);
  CHECK(inst.dimension_ok());
  CHECK(inst.T == Subspace::span(testsupport::example_G()));
  CHECK(inst.D == Subspace::span(testsupport::example_H()));
  CHECK(inst.M == rmat({{2, 1, -1, 1}, {-2, 0, 0, -1}}));
  CHECK(inst.M * inst.Mstar * inst.M == inst.M);
  CHECK(inst.E == inst.I * inst.Mstar);
  CHECK(inst.Lperp.dim() == 0);
  CHECK(same_vector_set(inst.vertices, {rvec({Rational(3, 5), 0, Rational(1, 5), 0, Rational(1, 5)}),
                                        rvec({Rational(1, 2), 0, Rational(1, 4), Rational(1, 4), 0}),
                                        rvec({Rational(7, 12), Rational(1, 12), Rational(1, 3), 0, 0})}));
  for (const auto& v : inst.vertices) {
    CHECK(is_zero(inst.A * v));
    CHECK(v.sum() == Rational(1));
  }
  // Basis columns of T and D have zero sum.
  CHECK(is_zero(RatMatrix(RatVector::Ones(5).transpose() * inst.G())));
  CHECK(is_zero(RatMatrix(RatVector::Ones(5).transpose() * inst.H())));
}

TEST_CASE("with_bases swaps bases and rejects other spans") {
  const Instance inst = testsupport::example_instance();
  CHECK(inst.G() == testsupport::example_G());
  CHECK(inst.H() == testsupport::example_H());
  const Instance plain = build_instance(testsupport::example_A(), testsupport::example_B());
  CHECK_THROWS(plain.with_bases(testsupport::example_H(), testsupport::example_H()));
}

TEST_CASE("small instances") {
  const Instance mismatch = build_instance(rmat({{1, -1}}), rmat({{0, 0}}));
  CHECK(mismatch.dP() == 0);
  CHECK(mismatch.d() == 1);
  CHECK(!mismatch.dimension_ok());

  const Instance seg = build_instance(rmat({{1, 1, -1}}), rmat({{1, 2, 1}}));
  CHECK(seg.dP() == 1);
  CHECK(seg.d() == 1);
  CHECK(same_vector_set(seg.vertices, {rvec({Rational(1, 2), 0, Rational(1, 2)}), rvec({0, Rational(1, 2), Rational(1, 2)})}));

  CHECK_THROWS_AS(build_instance(rmat({{1, 1}}), rmat({{1, 2}})), EmptyPolytope);
  CHECK_THROWS_AS(build_instance(rmat({{1, 1}}), rmat({{1, 2, 3}})), InvalidInput);
  CHECK_THROWS_AS(build_instance(RatMatrix(1, 0), RatMatrix(1, 0)), InvalidInput);
}

TEST_CASE("elementary vectors") {
  CHECK(same_vector_set(elementary_vectors(Subspace::span(rmat({{1}, {1}}))), {rvec({1, 1})}));
  const Subspace K = kernel_basis(rmat({{1, 1, -1}}));
  CHECK(same_vector_set(elementary_vectors(K), {rvec({1, 0, 1}), rvec({0, 1, 1}), rvec({1, -1, 0})}));

  std::vector<IndexSet> nonneg;
  for (const auto& e : elementary_vectors(kernel_basis(testsupport::example_A()))) {
    bool ok = true;
    for (Eigen::Index i = 0; i < e.size(); ++i) ok = ok && e(i).sign() >= 0;
    if (ok) nonneg.push_back(~zero_set(e) & full_index_set(5));
  }
  std::sort(nonneg.begin(), nonneg.end());
  // supports {1,2,3}, {1,3,4}, {1,3,5} as bitmasks over 0-based indices
  CHECK(nonneg == std::vector<IndexSet>{0b00111, 0b01101, 0b10101});
}

TEST_CASE("elementary vectors match brute-force support scan") {
  testsupport::Rng rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const Subspace S = testsupport::random_subspace(rng, rng.integer(1, 6));
    if (S.dim() == 0) continue;
    const auto fast = elementary_vectors(S);
    CHECK(same_up_to_scale(fast, testsupport::brute_elementary_vectors(S)));
    for (const auto& e : fast) {
      CHECK(S.contains(e));
      CHECK(primitive_integer(e) == e);
    }
  }
}

TEST_CASE("polytope vertices") {
  CHECK(same_vector_set(polytope_vertices(rmat({{1, -1, 0}})),
                        {rvec({Rational(1, 2), Rational(1, 2), 0}), rvec({0, 0, 1})}));
  CHECK_THROWS_AS(polytope_vertices(rmat({{1, 1}})), EmptyPolytope);
  CHECK(same_vector_set(polytope_vertices(RatMatrix(0, 3)),
                        {rvec({1, 0, 0}), rvec({0, 1, 0}), rvec({0, 0, 1})}));
}

TEST_CASE("face lattice") {
  const Instance inst = build_instance(testsupport::example_A(), testsupport::example_B());
  REQUIRE(inst.faces.size() == 7);
  CHECK(inst.improper_face().vertices.size() == 3);
  CHECK(inst.improper_face().zero == 0);
  int vertex_faces = 0, edges = 0;
  for (const auto& f : inst.faces) {
    vertex_faces += f.vertices.size() == 1;
    edges += f.vertices.size() == 2;
  }
  CHECK(vertex_faces == 3);
  CHECK(edges == 3);

  // Vertex (3,0,1,0,1)/5 vanishes on coordinates 2 and 4 (1-based).
  const auto v1 = std::find(inst.vertices.begin(), inst.vertices.end(),
                            rvec({Rational(3, 5), 0, Rational(1, 5), 0, Rational(1, 5)}));
  REQUIRE(v1 != inst.vertices.end());
  const auto i1 = static_cast<std::size_t>(v1 - inst.vertices.begin());
  const auto& f1 = inst.faces[face_with_vertices(inst, {i1})];
  CHECK(f1.zero == 0b01010);

  const std::vector<Face> seg = face_lattice({rvec({Rational(1, 2), Rational(1, 2), 0}), rvec({0, 0, 1})});
  CHECK(seg.size() == 3);
  CHECK(face_lattice({rvec({Rational(1, 2), Rational(1, 2)})}).size() == 1);

  // A simplex with k vertices has 2^k - 1 faces.
  for (Eigen::Index k = 1; k <= 5; ++k) {
    CHECK(face_lattice(polytope_vertices(RatMatrix(0, k))).size() == (std::size_t{1} << k) - 1);
  }
}

TEST_CASE("face zero sets are closed under intersection") {
  testsupport::Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const Instance inst = testsupport::random_instance(rng, 3, 6, false);
    for (const auto& f : inst.faces) {
      for (const auto& g : inst.faces) {
        std::vector<std::size_t> common;
        std::set_intersection(f.vertices.begin(), f.vertices.end(), g.vertices.begin(), g.vertices.end(),
                              std::back_inserter(common));
        if (common.empty()) continue;
        CHECK(std::any_of(inst.faces.begin(), inst.faces.end(), [&](const Face& h) { return h.vertices == common; }));
      }
      for (std::size_t k : f.vertices) CHECK((zero_set(inst.vertices[k]) & f.zero) == f.zero);
    }
  }
}

TEST_CASE("dimension identity on random instances") {
  testsupport::Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const auto [A, B] = testsupport::random_problem(rng, 2, 6, false);
    const Eigen::Index m = A.cols();
    RatMatrix calB(B.rows() + 1, m);
    calB << B, RatMatrix::Ones(1, m);
    RatMatrix I = RatMatrix::Zero(m, m - 1);
    for (Eigen::Index j = 0; j + 1 < m; ++j) {
      I(j, j) = 1;
      I(m - 1, j) = -1;
    }
    const Eigen::Index d = kernel_basis(calB).dim();
    CHECK(d == m - 1 - rank(RatMatrix(B * I)));
    const Instance inst = build_instance(A, B);
    CHECK(inst.d() == d);
    CHECK(inst.L_dim == rank(RatMatrix(B * I)));
  }
}
