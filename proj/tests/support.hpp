#ifndef GPUNIQ_TEST_SUPPORT_HPP
#define GPUNIQ_TEST_SUPPORT_HPP

#include <functional>
#include <initializer_list>
#include <random>
#include <vector>

#include "gpuniq/geometry.hpp"
#include "gpuniq/signs.hpp"

namespace testsupport {

using gpuniq::Instance;
using gpuniq::Rational;
using gpuniq::RatMatrix;
using gpuniq::RatVector;
using gpuniq::SignVec;
using gpuniq::Subspace;

RatMatrix rmat(std::initializer_list<std::initializer_list<Rational>> rows);
RatVector rvec(std::initializer_list<Rational> entries);

// The worked example: two equations in two unknowns with five monomials.
RatMatrix example_A();
RatMatrix example_B();
RatMatrix example_G();  // printed basis of T
RatMatrix example_H();  // printed basis of D
// build_instance on the example, rebased onto the printed G and H.
Instance example_instance();

struct Rng {
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen); }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(gen); }
  std::mt19937_64 gen;
};

RatMatrix random_int_matrix(Eigen::Index rows, Eigen::Index cols, int lo, int hi, Rng& rng);

// Random (A, B) with m in [m_min, m_max] whose kernel contains a positive
// vector. With square=true, retries until d == dP >= 1.
std::pair<RatMatrix, RatMatrix> random_problem(Rng& rng, int m_min, int m_max, bool square);
Instance random_instance(Rng& rng, int m_min, int m_max, bool square);

// Span of k random small-integer columns in Q^m; k may be 0.
Subspace random_subspace(Rng& rng, Eigen::Index m);

// --- oracles -------------------------------------------------------------

// Rows a.x >= b (strict: a.x > b). Decided by Fourier-Motzkin elimination.
struct FMRow {
  RatVector a;
  Rational b;
  bool strict = false;
};
bool fm_feasible(std::vector<FMRow> rows, Eigen::Index num_vars);

// All of {-,0,+}^m tested one by one for realizability in S, each test a
// Fourier-Motzkin run on the basis coordinates.
std::vector<SignVec> brute_sign_vectors(const Subspace& S);
bool brute_realizable(const SignVec& sigma, const Subspace& S);

// Support-minimal vectors of S found by scanning all 2^m coordinate supports.
std::vector<RatVector> brute_elementary_vectors(const Subspace& S);

bool proportional(const RatVector& a, const RatVector& b);

// Central differences, column by column.
Eigen::MatrixXd finite_difference_jacobian(const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& f,
                                           const Eigen::VectorXd& x, double h);

// Number of positive real roots of a x^2 + b x + c, a != 0, by the
// discriminant and Vieta.
int positive_quadratic_roots(double a, double b, double c);

}  // namespace testsupport

#endif  // GPUNIQ_TEST_SUPPORT_HPP
