#ifndef GPUNIQ_ANALYSIS_HPP
#define GPUNIQ_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gpuniq/geometry.hpp"
#include "gpuniq/signs.hpp"

namespace gpuniq {

// mu^max_j(t) = max over vertices v^k with v^k_j != 0 of v^k . t.
// Throws std::invalid_argument if t is not in T, BadCoordinate if some
// coordinate vanishes on every vertex.
RatVector mu_max(const Instance& inst, const RatVector& t);

// delta mu^max = mu^max - (max_j mu^max_j) 1. Nonpositive.
RatVector delta_mu_max(const Instance& inst, const RatVector& t);

// Vertices maximizing v^k . t, ascending.
std::vector<std::size_t> argmax_vertices(const Instance& inst, const RatVector& t);

// Index into inst.faces of the face with exactly these vertices; throws if absent.
std::size_t face_with_vertices(const Instance& inst, const std::vector<std::size_t>& vertices);

// Nonzero t in T with mu^max(t) in D-perp: the map f is not proper.
struct PropernessWitness {
  RatVector t;
  std::size_t face = 0;                 // face whose normal cone contains t
  std::vector<std::size_t> assignment;  // coordinate j -> vertex attaining mu^max_j(t)
  RatVector mu_max;
};

// True iff the witness re-verifies exactly: t != 0, t in T, H^T mu^max(t) = 0,
// and every assigned vertex attains the maximum.
bool verify(const Instance& inst, const PropernessWitness& w);

enum class Properness { NotChecked, Proper, ProperBySigns, NotProper, Inconclusive };

struct PropernessResult {
  Properness status = Properness::NotChecked;
  std::optional<PropernessWitness> witness;          // when NotProper
  std::optional<FaceSignWitness> sign_obstruction;   // face with tau_F in sign(D-perp)
  std::size_t leaves_checked = 0;
  std::size_t lp_calls = 0;
};

// Exact decision by enumerating, per distinct vertex support set K_j, which
// vertex attains mu^max_j. Each choice gives a polyhedral cone on which mu^max
// is linear; a nonzero point of the cone with H^T mu^max = 0 is a witness.
PropernessResult check_properness_exact(const Instance& inst);

// ProperBySigns iff no proper face has tau_F in sign(D-perp); otherwise
// Inconclusive with the offending face.
PropernessResult check_properness_sufficient(const Instance& inst);

// y in P, nonzero t in T and dbar in D-perp with t = y o dbar.
struct LocalInvWitness {
  Eigen::VectorXd y;
  Eigen::VectorXd t;
  Eigen::VectorXd dbar;
  bool exact = false;
  RatVector y_exact, t_exact, dbar_exact;  // populated when exact
  double relative_error = 0;               // ||t - y o dbar|| / ||t|| with dbar projected onto D-perp
};

// Exact check when `exact`, otherwise the floating tolerance check (1e-8).
bool verify(const Instance& inst, const LocalInvWitness& w);

enum class LocalInvertibility { NotChecked, CertifiedBySigns, Violated, Undetermined };

struct LocalInvResult {
  LocalInvertibility status = LocalInvertibility::NotChecked;
  std::optional<LocalInvWitness> witness;
  std::optional<SignIntersection> common_sign;  // sign(T) n sign(D-perp) != {0}
  double best_score = 1.0;                      // smallest sigma_min/sigma_max seen by the falsifier
  std::size_t samples = 0;
};

struct AnalysisOptions {
  std::size_t falsifier_samples = 10000;
  int descent_steps = 50;
  std::optional<std::uint64_t> seed;
  double singular_threshold = 1e-10;
  double witness_tol = 1e-8;
  SignOptions signs;
  // Also run the exact properness decision when the sign route already
  // certified properness.
  bool always_exact_properness = false;
};

// Sign route first; otherwise a seeded falsifier searching for a point where
// H^T diag(p(xi)^-1) G is singular. Needs opts.seed when the falsifier runs.
LocalInvResult check_local_invertibility(const Instance& inst, const AnalysisOptions& opts);

enum class Status { UniqueForAllC, NotUnique, Undetermined };

struct Verdict {
  Status status = Status::Undetermined;
  LocalInvResult local;
  PropernessResult properness;
  bool dimension_ok = false;
  bool sign_route = false;  // both conditions certified by sign vectors alone
  std::string notes;
};

Verdict decide_unique_existence(const Instance& inst, const AnalysisOptions& opts);

std::string to_string(Status s);
std::string to_string(Properness p);
std::string to_string(LocalInvertibility l);

}  // namespace gpuniq

#endif  // GPUNIQ_ANALYSIS_HPP
