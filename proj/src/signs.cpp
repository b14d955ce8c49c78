#include "gpuniq/signs.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "gpuniq/errors.hpp"
#include "gpuniq/lp.hpp"

namespace gpuniq {

SignVec::SignVec(Eigen::Index size, IndexSet plus, IndexSet minus) : size_(size), plus_(plus), minus_(minus) {
  if (size > 64) throw LimitExceeded("SignVec: more than 64 coordinates");
  if ((plus & minus) != 0 || ((plus | minus) & ~full_index_set(size)) != 0) {
    throw std::invalid_argument("SignVec: inconsistent masks");
  }
}

SignVec SignVec::of(const RatVector& x) {
  SignVec s(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) s.set(i, static_cast<Sign>(x(i).sign()));
  return s;
}

SignVec SignVec::of(const Eigen::VectorXd& x, double zero_tol) {
  SignVec s(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (x(i) > zero_tol) s.set(i, Sign::Plus);
    if (x(i) < -zero_tol) s.set(i, Sign::Minus);
  }
  return s;
}

SignVec SignVec::parse(std::string_view text) {
  SignVec s(static_cast<Eigen::Index>(text.size()));
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case '+': s.set(static_cast<Eigen::Index>(i), Sign::Plus); break;
      case '-': s.set(static_cast<Eigen::Index>(i), Sign::Minus); break;
      case '0': break;
      default: throw std::invalid_argument("SignVec::parse: unexpected character");
    }
  }
  return s;
}

Sign SignVec::operator[](Eigen::Index i) const {
  if (contains_index(plus_, i)) return Sign::Plus;
  if (contains_index(minus_, i)) return Sign::Minus;
  return Sign::Zero;
}

void SignVec::set(Eigen::Index i, Sign s) {
  const IndexSet bit = IndexSet{1} << i;
  plus_ &= ~bit;
  minus_ &= ~bit;
  if (s == Sign::Plus) plus_ |= bit;
  if (s == Sign::Minus) minus_ |= bit;
}

SignVec SignVec::compose(const SignVec& other) const {
  const IndexSet free = ~support();
  return {size_, plus_ | (other.plus_ & free), minus_ | (other.minus_ & free)};
}

bool SignVec::le(const SignVec& other) const {
  return (plus_ & ~other.plus_) == 0 && (minus_ & ~other.minus_) == 0;
}

bool SignVec::conformal_with(const SignVec& other) const {
  return (plus_ & other.minus_) == 0 && (minus_ & other.plus_) == 0;
}

std::string SignVec::str() const {
  std::string out(static_cast<std::size_t>(size_), '0');
  for (Eigen::Index i = 0; i < size_; ++i) {
    const Sign s = (*this)[i];
    if (s == Sign::Plus) out[static_cast<std::size_t>(i)] = '+';
    if (s == Sign::Minus) out[static_cast<std::size_t>(i)] = '-';
  }
  return out;
}

std::strong_ordering operator<=>(const SignVec& a, const SignVec& b) {
  if (a.size_ != b.size_) return a.size_ <=> b.size_;
  for (Eigen::Index i = 0; i < a.size_; ++i) {
    const auto sa = static_cast<int>(a[i]);
    const auto sb = static_cast<int>(b[i]);
    if (sa != sb) return sa <=> sb;
  }
  return std::strong_ordering::equal;
}

namespace {

struct SignVecHash {
  std::size_t operator()(const SignVec& s) const {
    return std::hash<IndexSet>{}(s.plus() * 0x9E3779B97F4A7C15ULL ^ s.minus());
  }
};

}  // namespace

std::vector<SignVec> subspace_sign_vectors(const Subspace& S, const SignOptions& opts) {
  const Eigen::Index m = S.ambient_dim();
  if (m > opts.dim_limit) {
    throw LimitExceeded("sign vector enumeration: ambient dimension " + std::to_string(m) +
                        " exceeds limit " + std::to_string(opts.dim_limit));
  }
  std::vector<SignVec> circuits;
  for (const RatVector& e : elementary_vectors(S)) {
    const SignVec s = SignVec::of(e);
    circuits.push_back(s);
    circuits.push_back(-s);
  }

  std::unordered_set<SignVec, SignVecHash> seen;
  std::deque<SignVec> queue;
  seen.insert(SignVec(m));
  queue.push_back(SignVec(m));
  while (!queue.empty()) {
    const SignVec x = queue.front();
    queue.pop_front();
    for (const SignVec& c : circuits) {
      SignVec y = x.compose(c);
      if (y == x) continue;
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  std::vector<SignVec> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<RatVector> sign_realizable_in(const SignVec& sigma, const Subspace& S) {
  if (sigma.size() != S.ambient_dim()) throw std::invalid_argument("sign_realizable_in: size mismatch");
  const RatMatrix& K = S.basis();
  if (S.dim() == 0) {
    if (sigma.is_zero()) return RatVector::Zero(S.ambient_dim());
    return std::nullopt;
  }
  // Strict signs scaled to |x_i| >= 1; valid because the constraint set is a cone.
  LPProblem lp(S.dim());
  for (Eigen::Index i = 0; i < K.rows(); ++i) {
    const RatVector row = K.row(i).transpose();
    switch (sigma[i]) {
      case Sign::Plus: lp.add_inequality(row, 1); break;
      case Sign::Minus: lp.add_inequality(-row, 1); break;
      case Sign::Zero: lp.add_equality(row, 0); break;
    }
  }
  const auto coeffs = lp_feasible(lp);
  if (!coeffs) return std::nullopt;
  RatVector x = K * *coeffs;
  if (!(SignVec::of(x) == sigma)) throw std::logic_error("sign_realizable_in: witness has wrong sign");
  return x;
}

IntersectionResult signs_intersect_trivially(const Subspace& S1, const Subspace& S2, const SignOptions& opts) {
  if (S1.ambient_dim() != S2.ambient_dim()) throw std::invalid_argument("signs_intersect_trivially: size mismatch");
  for (const SignVec& sigma : subspace_sign_vectors(S1, opts)) {
    if (sigma.is_zero()) continue;
    auto x2 = sign_realizable_in(sigma, S2);
    if (!x2) continue;
    auto x1 = sign_realizable_in(sigma, S1);
    if (!x1) throw std::logic_error("signs_intersect_trivially: enumerated sign not realizable");
    return {SignIntersection{sigma, std::move(*x1), std::move(*x2)}};
  }
  return {};
}

SignVec face_tau(const Face& face, Eigen::Index m) { return SignVec(m, face.zero, 0); }

FaceConditionResult face_sign_condition(const std::vector<Face>& faces, const Subspace& D, Eigen::Index m) {
  if (faces.empty()) throw std::invalid_argument("face_sign_condition: no faces");
  const auto improper = std::max_element(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    return a.vertices.size() < b.vertices.size();
  });
  const Subspace Dperp = D.orthogonal_complement();
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (faces[i].zero == improper->zero) continue;
    const SignVec tau = face_tau(faces[i], m);
    if (auto u = sign_realizable_in(tau, Dperp)) {
      return {FaceSignWitness{i, tau, std::move(*u)}};
    }
  }
  return {};
}

SurjectivityResult surjectivity_sign_condition(const Subspace& T, const Subspace& D, const SignOptions& opts) {
  if (T.ambient_dim() != D.ambient_dim()) throw std::invalid_argument("surjectivity_sign_condition: size mismatch");
  auto nonneg_nonzero = [&](const Subspace& S) {
    std::vector<SignVec> out;
    for (const SignVec& s : subspace_sign_vectors(S, opts)) {
      if (!s.is_zero() && s.is_nonnegative()) out.push_back(s);
    }
    return out;
  };
  const std::vector<SignVec> tperp = nonneg_nonzero(T.orthogonal_complement());
  // Sorted ascending, so the first failure is the lexicographically smallest.
  for (const SignVec& tilde : nonneg_nonzero(D.orthogonal_complement())) {
    const bool dominated = std::any_of(tperp.begin(), tperp.end(), [&](const SignVec& tau) { return tau.le(tilde); });
    if (!dominated) return {tilde};
  }
  return {};
}

}  // namespace gpuniq
