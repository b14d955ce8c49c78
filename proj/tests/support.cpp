#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "gpuniq/errors.hpp"

namespace testsupport {

RatMatrix rmat(std::initializer_list<std::initializer_list<Rational>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = r == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(rows.begin()->size());
  RatMatrix out(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (const auto& x : row) out(i, j++) = x;
    ++i;
  }
  return out;
}

RatVector rvec(std::initializer_list<Rational> entries) {
  RatVector out(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (const auto& x : entries) out(i++) = x;
  return out;
}

RatMatrix example_A() { return rmat({{1, 1, -2, 0, -1}, {-1, 3, 1, 1, 2}}); }
RatMatrix example_B() { return rmat({{2, 1, -1, 1, 0}, {-1, 1, 1, 0, 1}}); }
RatMatrix example_G() { return rmat({{1, 1}, {1, -5}, {1, -8}, {-3, 0}, {0, 12}}); }
RatMatrix example_H() { return rmat({{1, 0}, {0, 1}, {0, 1}, {-2, 0}, {1, -2}}); }

Instance example_instance() {
  return gpuniq::build_instance(example_A(), example_B()).with_bases(example_G(), example_H());
}

RatMatrix random_int_matrix(Eigen::Index rows, Eigen::Index cols, int lo, int hi, Rng& rng) {
  RatMatrix out(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) out(i, j) = rng.integer(lo, hi);
  }
  return out;
}

std::pair<RatMatrix, RatMatrix> random_problem(Rng& rng, int m_min, int m_max, bool square) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const int m = rng.integer(m_min, m_max);
    const int l = rng.integer(1, std::max(1, m - 2));
    const int n = square ? l : rng.integer(1, std::max(1, m - 2));
    // A = R (s I - y 1^T) kills the positive vector y, s = sum(y).
    RatVector y(m);
    Rational s = 0;
    for (int i = 0; i < m; ++i) {
      y(i) = rng.integer(1, 4);
      s += y(i);
    }
    RatMatrix P = RatMatrix::Identity(m, m) * s - y * RatVector::Ones(m).transpose();
    RatMatrix A = random_int_matrix(l, m, -3, 3, rng) * P;
    RatMatrix B = random_int_matrix(n, m, -2, 3, rng);
    if (!square) return {A, B};
    try {
      const Instance inst = gpuniq::build_instance(A, B);
      if (inst.dimension_ok() && inst.dP() >= 1) return {A, B};
    } catch (const gpuniq::EmptyPolytope&) {
    }
  }
  throw std::runtime_error("random_problem: no instance found");
}

Instance random_instance(Rng& rng, int m_min, int m_max, bool square) {
  const auto [A, B] = random_problem(rng, m_min, m_max, square);
  return gpuniq::build_instance(A, B);
}

Subspace random_subspace(Rng& rng, Eigen::Index m) {
  const int k = rng.integer(0, static_cast<int>(m));
  RatMatrix S = random_int_matrix(m, k, -2, 2, rng);
  // Sparse rows make zero patterns and dependent coordinates common.
  for (Eigen::Index i = 0; i < m; ++i) {
    if (rng.integer(0, 4) == 0) S.row(i).setZero();
  }
  return Subspace::span(S);
}

namespace {

// Scale to a canonical positive multiple so duplicate rows collapse.
FMRow normalize(FMRow r) {
  Rational scale = 0;
  for (Eigen::Index i = 0; i < r.a.size(); ++i) {
    if (!r.a(i).is_zero()) {
      scale = gpuniq::abs(r.a(i));
      break;
    }
  }
  if (scale.is_zero() && !r.b.is_zero()) scale = gpuniq::abs(r.b);
  if (!scale.is_zero()) {
    for (Eigen::Index i = 0; i < r.a.size(); ++i) r.a(i) /= scale;
    r.b /= scale;
  }
  return r;
}

std::string key(const FMRow& r) {
  std::string k = r.strict ? ">" : ">=";
  for (Eigen::Index i = 0; i < r.a.size(); ++i) k += r.a(i).str() + ",";
  return k + "|" + r.b.str();
}

}  // namespace

bool fm_feasible(std::vector<FMRow> rows, Eigen::Index num_vars) {
  for (Eigen::Index v = 0; v < num_vars; ++v) {
    std::vector<FMRow> pos, neg, next;
    for (auto& r : rows) {
      const int s = r.a(v).sign();
      if (s > 0) pos.push_back(r);
      if (s < 0) neg.push_back(r);
      if (s == 0) next.push_back(r);
    }
    for (const auto& p : pos) {
      for (const auto& n : neg) {
        const Rational wp = Rational(1) / p.a(v);
        const Rational wn = Rational(1) / (-n.a(v));
        FMRow c;
        c.a = p.a * wp + n.a * wn;
        c.a(v) = 0;
        c.b = p.b * wp + n.b * wn;
        c.strict = p.strict || n.strict;
        next.push_back(c);
      }
    }
    std::map<std::string, FMRow> unique;
    for (auto& r : next) {
      FMRow nr = normalize(r);
      unique.emplace(key(nr), nr);
    }
    rows.clear();
    for (auto& [k, r] : unique) rows.push_back(r);
  }
  for (const auto& r : rows) {
    // 0 >= b or 0 > b
    if (r.strict ? !(r.b.sign() < 0) : !(r.b.sign() <= 0)) return false;
  }
  return true;
}

bool brute_realizable(const SignVec& sigma, const Subspace& S) {
  const RatMatrix& K = S.basis();
  const Eigen::Index m = S.ambient_dim();
  if (S.dim() == 0) return sigma.is_zero();
  // Restrict to the coordinates a with (K a)_i = 0 on the zero entries.
  std::vector<Eigen::Index> zeros;
  for (Eigen::Index i = 0; i < m; ++i) {
    if (sigma[i] == gpuniq::Sign::Zero) zeros.push_back(i);
  }
  RatMatrix Z(static_cast<Eigen::Index>(zeros.size()), S.dim());
  for (std::size_t r = 0; r < zeros.size(); ++r) Z.row(static_cast<Eigen::Index>(r)) = K.row(zeros[r]);
  const RatMatrix N = zeros.empty() ? RatMatrix(RatMatrix::Identity(S.dim(), S.dim()))
                                    : gpuniq::kernel_basis(Z).basis();
  const RatMatrix KN = K * N;
  std::vector<FMRow> rows;
  for (Eigen::Index i = 0; i < m; ++i) {
    if (sigma[i] == gpuniq::Sign::Zero) continue;
    const RatVector row = KN.row(i).transpose();
    rows.push_back({sigma[i] == gpuniq::Sign::Plus ? row : RatVector(-row), 0, true});
  }
  return fm_feasible(rows, N.cols());
}

std::vector<SignVec> brute_sign_vectors(const Subspace& S) {
  const Eigen::Index m = S.ambient_dim();
  long total = 1;
  for (Eigen::Index i = 0; i < m; ++i) total *= 3;
  std::vector<SignVec> out;
  for (long code = 0; code < total; ++code) {
    SignVec s(m);
    long c = code;
    for (Eigen::Index i = 0; i < m; ++i) {
      const int digit = static_cast<int>(c % 3);
      c /= 3;
      s.set(i, static_cast<gpuniq::Sign>(digit - 1));
    }
    if (brute_realizable(s, S)) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RatVector> brute_elementary_vectors(const Subspace& S) {
  const Eigen::Index m = S.ambient_dim();
  std::vector<RatVector> out;
  if (S.dim() == 0) return out;
  const RatMatrix& K = S.basis();
  for (gpuniq::IndexSet support = 1; support < (gpuniq::IndexSet{1} << m); ++support) {
    std::vector<Eigen::Index> outside;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (!gpuniq::contains_index(support, i)) outside.push_back(i);
    }
    RatMatrix Z(static_cast<Eigen::Index>(outside.size()), S.dim());
    for (std::size_t r = 0; r < outside.size(); ++r) Z.row(static_cast<Eigen::Index>(r)) = K.row(outside[r]);
    const RatMatrix N = outside.empty() ? RatMatrix(RatMatrix::Identity(S.dim(), S.dim()))
                                        : gpuniq::kernel_basis(Z).basis();
    if (N.cols() != 1) continue;
    const RatVector x = K * N.col(0);
    bool full = true;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (gpuniq::contains_index(support, i) && x(i).is_zero()) full = false;
    }
    if (full) out.push_back(x);
  }
  return out;
}

bool proportional(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) return false;
  Eigen::Index pivot = -1;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i).is_zero() != b(i).is_zero()) return false;
    if (pivot < 0 && !a(i).is_zero()) pivot = i;
  }
  if (pivot < 0) return true;
  const Rational ratio = b(pivot) / a(pivot);
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (!(a(i) * ratio == b(i))) return false;
  }
  return true;
}

Eigen::MatrixXd finite_difference_jacobian(const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& f,
                                           const Eigen::VectorXd& x, double h) {
  const Eigen::VectorXd f0 = f(x);
  Eigen::MatrixXd J(f0.size(), x.size());
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    Eigen::VectorXd xp = x, xm = x;
    xp(j) += h;
    xm(j) -= h;
    J.col(j) = (f(xp) - f(xm)) / (2 * h);
  }
  return J;
}

int positive_quadratic_roots(double a, double b, double c) {
  const double disc = b * b - 4 * a * c;
  if (disc < 0) return 0;
  if (disc == 0) return (-b / (2 * a)) > 0 ? 1 : 0;
  const double r = std::sqrt(disc);
  const double x1 = (-b - r) / (2 * a);
  const double x2 = (-b + r) / (2 * a);
  return (x1 > 0 ? 1 : 0) + (x2 > 0 ? 1 : 0);
}

}  // namespace testsupport
