#ifndef GPUNIQ_SIGNS_HPP
#define GPUNIQ_SIGNS_HPP

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "gpuniq/geometry.hpp"

namespace gpuniq {

enum class Sign : signed char { Minus = -1, Zero = 0, Plus = 1 };

// Element of {-,0,+}^m, m <= 64, stored as positive/negative bitmasks.
class SignVec {
 public:
  SignVec() = default;
  explicit SignVec(Eigen::Index size) : size_(size) {}
  SignVec(Eigen::Index size, IndexSet plus, IndexSet minus);

  static SignVec of(const RatVector& x);
  static SignVec of(const Eigen::VectorXd& x, double zero_tol = 0.0);
  // Parses "+0-" style strings.
  static SignVec parse(std::string_view text);

  Eigen::Index size() const { return size_; }
  Sign operator[](Eigen::Index i) const;
  void set(Eigen::Index i, Sign s);

  IndexSet plus() const { return plus_; }
  IndexSet minus() const { return minus_; }
  IndexSet support() const { return plus_ | minus_; }
  bool is_zero() const { return support() == 0; }
  bool is_nonnegative() const { return minus_ == 0; }

  SignVec operator-() const { return {size_, minus_, plus_}; }
  // Composition: entries of *this where nonzero, otherwise entries of other.
  SignVec compose(const SignVec& other) const;
  // Componentwise order with 0 < - and 0 < +.
  bool le(const SignVec& other) const;
  // Conformal: no coordinate where the two have opposite nonzero signs.
  bool conformal_with(const SignVec& other) const;

  std::string str() const;

  friend bool operator==(const SignVec&, const SignVec&) = default;
  // Lexicographic on entries with - < 0 < +.
  friend std::strong_ordering operator<=>(const SignVec& a, const SignVec& b);

 private:
  Eigen::Index size_ = 0;
  IndexSet plus_ = 0;
  IndexSet minus_ = 0;
};

struct SignOptions {
  Eigen::Index dim_limit = 14;
};

// sign(S) = {sign(x) : x in S}, as all compositions of signed circuits plus 0,
// sorted ascending. Throws LimitExceeded above the dimension limit.
std::vector<SignVec> subspace_sign_vectors(const Subspace& S, const SignOptions& opts = {});

// x in S with sign(x) == sigma, via an exact LP over basis coordinates.
std::optional<RatVector> sign_realizable_in(const SignVec& sigma, const Subspace& S);

struct SignIntersection {
  SignVec sigma;
  RatVector x1;
  RatVector x2;
};

struct IntersectionResult {
  std::optional<SignIntersection> witness;  // empty iff the intersection is {0}
  bool trivial() const { return !witness.has_value(); }
};

// Enumerates sign(S1) and tests each nonzero element for membership in sign(S2).
IntersectionResult signs_intersect_trivially(const Subspace& S1, const Subspace& S2,
                                             const SignOptions& opts = {});

struct FaceSignWitness {
  std::size_t face_index = 0;  // index into the face list passed in
  SignVec tau;
  RatVector u;  // in D-perp, sign(u) == tau
};

// Sign vector tau_F in {0,+}^m with support zero(F).
SignVec face_tau(const Face& face, Eigen::Index m);

struct FaceConditionResult {
  std::optional<FaceSignWitness> witness;
  bool holds() const { return !witness.has_value(); }
};

// Holds iff tau_F is not in sign(D-perp) for every proper face F, i.e. every
// face whose zero set differs from that of the improper face (the face with
// the most vertices). D-perp is realized as ker H^T.
FaceConditionResult face_sign_condition(const std::vector<Face>& faces, const Subspace& D, Eigen::Index m);

// Surjectivity sign condition for the pair (T, D): every nonzero tau~ in
// sign(D-perp) n {0,+}^m dominates some nonzero tau in sign(T-perp) n {0,+}^m.
struct SurjectivityResult {
  std::optional<SignVec> failing;  // lexicographically smallest tau~ without a dominated tau
  bool holds() const { return !failing.has_value(); }
};

SurjectivityResult surjectivity_sign_condition(const Subspace& T, const Subspace& D,
                                               const SignOptions& opts = {});

}  // namespace gpuniq

#endif  // GPUNIQ_SIGNS_HPP
