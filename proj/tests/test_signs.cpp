#include <doctest.h>

#include <algorithm>

#include "gpuniq/errors.hpp"
#include "gpuniq/signs.hpp"
#include "support.hpp"

using namespace gpuniq;
using testsupport::rmat;
using testsupport::rvec;

namespace {

std::vector<SignVec> parse_all(std::initializer_list<const char*> xs) {
  std::vector<SignVec> out;
  for (const char* x : xs) out.push_back(SignVec::parse(x));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("sign vector basics") {
  const SignVec a = SignVec::parse("+0-");
  CHECK(a.str() == "+0-");
  CHECK((-a).str() == "-0+");
  CHECK(a.compose(SignVec::parse("-+0")).str() == "++-");
  CHECK(SignVec::parse("0+0").le(SignVec::parse("++0")));
  CHECK(!SignVec::parse("0-0").le(SignVec::parse("++0")));
  CHECK(a.conformal_with(SignVec::parse("000")));
  CHECK(!a.conformal_with(SignVec::parse("-00")));
  CHECK(SignVec::parse("-++") < SignVec::parse("0--"));
  CHECK(SignVec::of(rvec({Rational(-1, 2), 0, 3})) == SignVec::parse("-0+"));
  CHECK_THROWS(SignVec::parse("+x"));

  // Composition is associative.
  const SignVec b = SignVec::parse("0+-");
  const SignVec c = SignVec::parse("-0+");
  CHECK(a.compose(b).compose(c) == a.compose(b.compose(c)));
}

TEST_CASE("subspace sign vectors") {
  CHECK(subspace_sign_vectors(Subspace::span(rmat({{1}, {1}}))) == parse_all({"00", "++", "--"}));
  CHECK(subspace_sign_vectors(Subspace::zero(3)) == parse_all({"000"}));

  const Instance inst = testsupport::example_instance();
  const auto sT = subspace_sign_vectors(inst.T);
  CHECK(std::binary_search(sT.begin(), sT.end(), SignVec::parse("+++-0")));
  CHECK(std::binary_search(sT.begin(), sT.end(), SignVec::parse("+--0+")));

  SignOptions small;
  small.dim_limit = 4;
  CHECK_THROWS_AS(subspace_sign_vectors(inst.T, small), LimitExceeded);
}

TEST_CASE("sign sets match 3^m enumeration") {
  testsupport::Rng rng(123);
  for (int trial = 0; trial < 50; ++trial) {
    const Subspace S = testsupport::random_subspace(rng, rng.integer(1, 6));
    const auto fast = subspace_sign_vectors(S);
    CHECK(fast == testsupport::brute_sign_vectors(S));
    // Closed under negation and composition.
    for (const auto& x : fast) {
      CHECK(std::binary_search(fast.begin(), fast.end(), -x));
      for (const auto& y : fast) CHECK(std::binary_search(fast.begin(), fast.end(), x.compose(y)));
    }
  }
}

TEST_CASE("sampled vectors never leave the enumerated sign set") {
  testsupport::Rng rng(321);
  for (int trial = 0; trial < 20; ++trial) {
    const Subspace S = testsupport::random_subspace(rng, rng.integer(1, 6));
    const auto fast = subspace_sign_vectors(S);
    for (int k = 0; k < 200; ++k) {
      const RatMatrix coeff = testsupport::random_int_matrix(S.dim(), 1, -3, 3, rng);
      const RatVector x = S.basis() * coeff.col(0);
      CHECK(std::binary_search(fast.begin(), fast.end(), SignVec::of(x)));
    }
  }
}

TEST_CASE("sign realizability") {
  const auto w = sign_realizable_in(SignVec::parse("+0-"), Subspace::span(rmat({{1}, {0}, {-1}})));
  REQUIRE(w);
  CHECK(SignVec::of(*w) == SignVec::parse("+0-"));
  CHECK(!sign_realizable_in(SignVec::parse("++"), Subspace::span(rmat({{1}, {-1}}))));

  const Instance inst = testsupport::example_instance();
  CHECK(!sign_realizable_in(SignVec::parse("0+0+0"), inst.Dperp()));
  CHECK(inst.Dperp() == kernel_basis(RatMatrix(inst.H().transpose())));
}

TEST_CASE("sign intersections") {
  const Instance inst = testsupport::example_instance();
  CHECK(signs_intersect_trivially(inst.T, inst.Dperp()).trivial());
  CHECK(signs_intersect_trivially(inst.Dperp(), inst.T).trivial());

  const Subspace e1 = Subspace::span(rmat({{1}, {0}}));
  const auto r = signs_intersect_trivially(e1, e1);
  REQUIRE(!r.trivial());
  CHECK((r.witness->sigma == SignVec::parse("+0") || r.witness->sigma == SignVec::parse("-0")));
  CHECK(e1.contains(r.witness->x1));
  CHECK(SignVec::of(r.witness->x2) == r.witness->sigma);

  // T = span{(1,-1,0)}, D-perp = {u : u1 = u3}
  const Subspace T = Subspace::span(rmat({{1}, {-1}, {0}}));
  const Subspace Dp = kernel_basis(rmat({{1, 0, -1}}));
  CHECK(signs_intersect_trivially(T, Dp).trivial());
  CHECK(signs_intersect_trivially(Dp, T).trivial());
}

TEST_CASE("sign intersection is symmetric on random pairs") {
  testsupport::Rng rng(55);
  for (int trial = 0; trial < 40; ++trial) {
    const Eigen::Index m = rng.integer(1, 5);
    const Subspace a = testsupport::random_subspace(rng, m);
    const Subspace b = testsupport::random_subspace(rng, m);
    CHECK(signs_intersect_trivially(a, b).trivial() == signs_intersect_trivially(b, a).trivial());
  }
}

TEST_CASE("face sign condition") {
  const Instance inst = testsupport::example_instance();
  CHECK(face_sign_condition(inst.faces, inst.D, inst.m()).holds());
  int proper = 0;
  for (std::size_t i = 0; i + 1 < inst.faces.size(); ++i) {
    ++proper;
    CHECK(!sign_realizable_in(face_tau(inst.faces[i], inst.m()), inst.Dperp()));
  }
  CHECK(proper == 6);
  CHECK(face_tau(inst.faces[0], 5).is_nonnegative());

  const Instance seg = build_instance(rmat({{1, 1, -1}}), rmat({{1, 2, 1}}));
  const auto r = face_sign_condition(seg.faces, seg.D, seg.m());
  REQUIRE(!r.holds());
  CHECK(r.witness->tau == SignVec::parse("0+0"));
  CHECK(is_zero(RatMatrix(seg.H().transpose() * r.witness->u)));
  CHECK(SignVec::of(r.witness->u) == r.witness->tau);

  // One strictly positive vertex: only the improper face exists.
  const Instance point = build_instance(rmat({{1, -1}, {0, 0}}), rmat({{1, 2}}));
  REQUIRE(point.faces.size() == 1);
  CHECK(face_sign_condition(point.faces, point.D, point.m()).holds());
}

TEST_CASE("surjectivity sign condition") {
  const Instance inst = testsupport::example_instance();
  const auto r = surjectivity_sign_condition(inst.T, inst.D);
  REQUIRE(!r.holds());
  // The failing vector is a nonnegative sign of D-perp dominating no nonzero
  // nonnegative sign of T-perp.
  CHECK(r.failing->is_nonnegative());
  CHECK(sign_realizable_in(*r.failing, inst.Dperp()));
  for (const auto& tau : subspace_sign_vectors(inst.T.orthogonal_complement())) {
    if (tau.is_zero() || !tau.is_nonnegative()) continue;
    CHECK(!tau.le(*r.failing));
  }

  CHECK(surjectivity_sign_condition(inst.T, Subspace::full(5)).holds());  // D-perp = {0}
  CHECK(surjectivity_sign_condition(inst.T, inst.T).holds());
}
