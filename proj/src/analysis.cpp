#include "gpuniq/analysis.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

#include "gpuniq/errors.hpp"
#include "gpuniq/lp.hpp"
#include "gpuniq/solver.hpp"

namespace gpuniq {

namespace {

Rational dot(const RatVector& a, const RatVector& b) {
  Rational s = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (!a(i).is_zero() && !b(i).is_zero()) s += a(i) * b(i);
  }
  return s;
}

bool in_T(const Instance& inst, const RatVector& t) {
  return t.size() == inst.m() && is_zero(inst.calA * t);
}

}  // namespace

RatVector mu_max(const Instance& inst, const RatVector& t) {
  if (!in_T(inst, t)) throw std::invalid_argument("mu_max: t is not in T");
  const Eigen::Index m = inst.m();
  std::vector<Rational> proj;
  proj.reserve(inst.vertices.size());
  for (const auto& v : inst.vertices) proj.push_back(dot(v, t));
  RatVector out(m);
  for (Eigen::Index j = 0; j < m; ++j) {
    std::optional<Rational> best;
    for (std::size_t k = 0; k < inst.vertices.size(); ++k) {
      if (inst.vertices[k](j).is_zero()) continue;
      if (!best || proj[k] > *best) best = proj[k];
    }
    if (!best) throw BadCoordinate("coordinate " + std::to_string(j) + " vanishes on every vertex");
    out(j) = *best;
  }
  return out;
}

RatVector delta_mu_max(const Instance& inst, const RatVector& t) {
  RatVector mu = mu_max(inst, t);
  Rational top = mu(0);
  for (Eigen::Index j = 1; j < mu.size(); ++j) top = std::max(top, mu(j));
  for (Eigen::Index j = 0; j < mu.size(); ++j) mu(j) -= top;
  return mu;
}

std::vector<std::size_t> argmax_vertices(const Instance& inst, const RatVector& t) {
  std::vector<std::size_t> out;
  std::optional<Rational> best;
  for (std::size_t k = 0; k < inst.vertices.size(); ++k) {
    const Rational p = dot(inst.vertices[k], t);
    if (!best || p > *best) {
      best = p;
      out.clear();
    }
    if (p == *best) out.push_back(k);
  }
  return out;
}

std::size_t face_with_vertices(const Instance& inst, const std::vector<std::size_t>& vertices) {
  for (std::size_t i = 0; i < inst.faces.size(); ++i) {
    if (inst.faces[i].vertices == vertices) return i;
  }
  throw std::logic_error("face_with_vertices: no such face");
}

bool verify(const Instance& inst, const PropernessWitness& w) {
  if (w.t.size() != inst.m() || is_zero(w.t) || !in_T(inst, w.t)) return false;
  const RatVector mu = mu_max(inst, w.t);
  if (mu != w.mu_max) return false;
  if (!is_zero(inst.H().transpose() * mu)) return false;
  if (w.assignment.size() != static_cast<std::size_t>(inst.m())) return false;
  for (Eigen::Index j = 0; j < inst.m(); ++j) {
    const std::size_t k = w.assignment[static_cast<std::size_t>(j)];
    if (k >= inst.vertices.size() || inst.vertices[k](j).is_zero()) return false;
    if (dot(inst.vertices[k], w.t) != mu(j)) return false;
  }
  return true;
}

namespace {

struct ProperSearch {
  const Instance& inst;
  std::vector<RatVector> w;                   // G^T v^k
  std::vector<IndexSet> group_masks;          // distinct vertex sets K_j
  std::vector<std::size_t> coord_group;       // j -> group index
  std::vector<std::size_t> choice;            // group -> chosen vertex
  std::size_t leaves = 0;
  std::size_t lp_calls = 0;

  // A nonzero point of the cone described by `cone`, if any: the cone is
  // nonzero iff one of the 2 dP normalizations xi_i >= 1, -xi_i >= 1 is feasible.
  std::optional<RatVector> nonzero_point(const LPProblem& cone) {
    const Eigen::Index dp = cone.num_vars();
    for (Eigen::Index i = 0; i < dp; ++i) {
      for (int sgn : {1, -1}) {
        LPProblem lp = cone;
        RatVector e = RatVector::Zero(dp);
        e(i) = sgn;
        lp.add_inequality(e, 1);
        ++lp_calls;
        if (auto x = lp_feasible(lp)) return x;
      }
    }
    return std::nullopt;
  }

  std::optional<RatVector> search(std::size_t g, const LPProblem& cone) {
    if (g == group_masks.size()) {
      ++leaves;
      LPProblem lp = cone;
      const RatMatrix& H = inst.H();
      for (Eigen::Index i = 0; i < H.cols(); ++i) {
        RatVector row = RatVector::Zero(cone.num_vars());
        for (Eigen::Index j = 0; j < inst.m(); ++j) {
          if (H(j, i).is_zero()) continue;
          row += H(j, i) * w[choice[coord_group[static_cast<std::size_t>(j)]]];
        }
        lp.add_equality(row, 0);
      }
      return nonzero_point(lp);
    }
    const auto members = indices_of(group_masks[g]);
    for (Eigen::Index k : members) {
      LPProblem next = cone;
      for (Eigen::Index other : members) {
        if (other == k) continue;
        next.add_inequality(w[static_cast<std::size_t>(k)] - w[static_cast<std::size_t>(other)], 0);
      }
      if (members.size() > 1 && !nonzero_point(next)) continue;
      choice[g] = static_cast<std::size_t>(k);
      if (auto xi = search(g + 1, next)) return xi;
    }
    return std::nullopt;
  }
};

}  // namespace

PropernessResult check_properness_exact(const Instance& inst) {
  PropernessResult out;
  const Eigen::Index dp = inst.dP();
  if (dp == 0) {
    out.status = Properness::Proper;
    return out;
  }
  ProperSearch s{inst, {}, {}, {}, {}};
  for (const auto& v : inst.vertices) s.w.push_back(inst.G().transpose() * v);

  std::vector<IndexSet> masks(static_cast<std::size_t>(inst.m()), 0);
  for (Eigen::Index j = 0; j < inst.m(); ++j) {
    for (std::size_t k = 0; k < inst.vertices.size(); ++k) {
      if (!inst.vertices[k](j).is_zero()) masks[static_cast<std::size_t>(j)] |= IndexSet{1} << k;
    }
    if (masks[static_cast<std::size_t>(j)] == 0) {
      throw BadCoordinate("coordinate " + std::to_string(j) + " vanishes on every vertex");
    }
  }
  // Coordinates with the same K_j share mu^max_j, so one choice per distinct set.
  s.group_masks = masks;
  std::sort(s.group_masks.begin(), s.group_masks.end(), [](IndexSet a, IndexSet b) {
    const int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
    return pa != pb ? pa < pb : a < b;
  });
  s.group_masks.erase(std::unique(s.group_masks.begin(), s.group_masks.end()), s.group_masks.end());
  for (IndexSet mask : masks) {
    const auto it = std::find(s.group_masks.begin(), s.group_masks.end(), mask);
    s.coord_group.push_back(static_cast<std::size_t>(it - s.group_masks.begin()));
  }
  s.choice.assign(s.group_masks.size(), 0);

  const auto xi = s.search(0, LPProblem(dp));
  out.leaves_checked = s.leaves;
  out.lp_calls = s.lp_calls;
  if (!xi) {
    out.status = Properness::Proper;
    return out;
  }
  PropernessWitness wit;
  const RatVector t = inst.G() * *xi;
  wit.t = primitive_integer(t);
  // Positive rescaling keeps the argmax choices, so the search assignment still attains mu^max.
  for (Eigen::Index i = 0; i < t.size(); ++i) {
    if (t(i).is_zero()) continue;
    if (t(i).sign() != wit.t(i).sign()) wit.t = -wit.t;
    break;
  }
  wit.mu_max = mu_max(inst, wit.t);
  for (Eigen::Index j = 0; j < inst.m(); ++j) {
    wit.assignment.push_back(s.choice[s.coord_group[static_cast<std::size_t>(j)]]);
  }
  wit.face = face_with_vertices(inst, argmax_vertices(inst, wit.t));
  if (!verify(inst, wit)) throw std::logic_error("check_properness_exact: witness failed verification");
  out.status = Properness::NotProper;
  out.witness = std::move(wit);
  return out;
}

PropernessResult check_properness_sufficient(const Instance& inst) {
  PropernessResult out;
  auto res = face_sign_condition(inst.faces, inst.D, inst.m());
  if (res.holds()) {
    out.status = Properness::ProperBySigns;
  } else {
    out.status = Properness::Inconclusive;
    out.sign_obstruction = std::move(res.witness);
  }
  return out;
}

bool verify(const Instance& inst, const LocalInvWitness& w) {
  const Eigen::Index m = inst.m();
  if (w.exact) {
    if (w.y_exact.size() != m || w.t_exact.size() != m || w.dbar_exact.size() != m) return false;
    Rational sum = 0;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (w.y_exact(i).sign() <= 0) return false;
      sum += w.y_exact(i);
    }
    if (sum != Rational(1) || !is_zero(inst.A * w.y_exact)) return false;
    if (is_zero(w.t_exact) || !in_T(inst, w.t_exact)) return false;
    if (!is_zero(inst.H().transpose() * w.dbar_exact)) return false;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (w.t_exact(i) != w.y_exact(i) * w.dbar_exact(i)) return false;
    }
    return true;
  }
  constexpr double tol = 1e-8;
  if (w.y.size() != m || w.t.size() != m || w.dbar.size() != m) return false;
  if ((w.y.array() <= 0).any()) return false;
  const Eigen::MatrixXd A = to_double(inst.A);
  const Eigen::MatrixXd calA = to_double(inst.calA);
  const Eigen::MatrixXd H = to_double(inst.H());
  if (A.rows() > 0 && (A * w.y).lpNorm<Eigen::Infinity>() > tol) return false;
  if (std::abs(w.y.sum() - 1.0) > tol) return false;
  const double tn = w.t.norm();
  if (!(tn > 0)) return false;
  if ((calA * w.t).norm() > tol * tn) return false;
  if ((H.transpose() * w.dbar).norm() > tol * std::max(1.0, w.dbar.norm())) return false;
  return (w.t - w.y.cwiseProduct(w.dbar)).norm() <= tol * tn;
}

namespace {

// Best rational approximation by continued fractions, nullopt if none within tol.
std::optional<Rational> rationalize(double x, double tol, long max_den = 1000000) {
  if (!std::isfinite(x)) return std::nullopt;
  long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double r = x;
  for (int it = 0; it < 64; ++it) {
    const double a = std::floor(r);
    if (std::abs(a) > 1e15) break;
    const long ai = static_cast<long>(a);
    const long h2 = ai * h1 + h0;
    const long k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1; h1 = h2; k0 = k1; k1 = k2;
    if (std::abs(x - static_cast<double>(h1) / static_cast<double>(k1)) <= tol) return Rational(h1, k1);
    const double frac = r - a;
    if (frac == 0) break;
    r = 1.0 / frac;
  }
  return std::nullopt;
}

// Exact singularity check of H^T diag(y^-1) G at a rational y in P.
std::optional<LocalInvWitness> exact_witness_at(const Instance& inst, const RatVector& y) {
  const Eigen::Index m = inst.m();
  Rational sum = 0;
  for (Eigen::Index i = 0; i < m; ++i) {
    if (y(i).sign() <= 0) return std::nullopt;
    sum += y(i);
  }
  if (sum != Rational(1) || !is_zero(inst.A * y)) return std::nullopt;
  RatMatrix scaledG = inst.G();
  for (Eigen::Index i = 0; i < m; ++i) scaledG.row(i) /= y(i);
  const Subspace ker = kernel_basis(inst.H().transpose() * scaledG);
  if (ker.dim() == 0) return std::nullopt;
  LocalInvWitness w;
  w.exact = true;
  w.y_exact = y;
  w.t_exact = primitive_integer(inst.G() * ker.basis().col(0));
  w.dbar_exact = w.t_exact;
  for (Eigen::Index i = 0; i < m; ++i) w.dbar_exact(i) /= y(i);
  w.y = to_double(w.y_exact);
  w.t = to_double(w.t_exact);
  w.dbar = to_double(w.dbar_exact);
  w.relative_error = 0;
  return w;
}

class Falsifier {
 public:
  Falsifier(const Instance& inst, const AnalysisOptions& opts)
      : inst_(inst), opts_(opts), model_(inst), rng_(*opts.seed) {
    // Orthonormal basis of D-perp for projecting dbar.
    const Eigen::MatrixXd dperp = to_double(inst.Dperp().basis());
    if (dperp.cols() > 0) {
      Eigen::HouseholderQR<Eigen::MatrixXd> qr(dperp);
      q_dperp_ = qr.householderQ() * Eigen::MatrixXd::Identity(dperp.rows(), dperp.cols());
    } else {
      q_dperp_ = Eigen::MatrixXd::Zero(dperp.rows(), 0);
    }
  }

  struct Eval {
    double score = 1.0;  // sigma_min / sigma_max of H^T diag(p^-1) G
    int det_sign = 0;
  };

  Eval evaluate(const Eigen::VectorXd& xi) const {
    const Eigen::VectorXd y = moment_map(model_, xi);
    const Eigen::MatrixXd N = model_.H.transpose() * y.cwiseInverse().asDiagonal() * model_.G;
    Eval e;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(N);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return e;
    e.score = sv(0) > 0 ? sv(sv.size() - 1) / sv(0) : 0.0;
    if (!std::isfinite(e.score)) e.score = 1.0;
    if (N.rows() == N.cols()) {
      const double det = N.determinant();
      e.det_sign = det > 0 ? 1 : (det < 0 ? -1 : 0);
    }
    return e;
  }

  LocalInvResult run() {
    LocalInvResult out;
    out.status = LocalInvertibility::Undetermined;
    const Eigen::Index dp = model_.dP();
    std::normal_distribution<double> normal(0.0, 1.0);
    constexpr double scales[] = {0.5, 2.0, 6.0};

    struct Sample {
      Eigen::VectorXd xi;
      Eval eval;
    };
    std::vector<Sample> samples;
    samples.reserve(opts_.falsifier_samples);
    for (std::size_t s = 0; s < opts_.falsifier_samples; ++s) {
      Eigen::VectorXd xi = Eigen::VectorXd::Zero(dp);
      if (s > 0) {
        const double scale = scales[s % 3];
        for (Eigen::Index i = 0; i < dp; ++i) xi(i) = scale * normal(rng_);
      }
      samples.push_back({xi, evaluate(xi)});
    }
    out.samples = samples.size();

    std::vector<Eigen::VectorXd> candidates;
    const Sample* best_pos = nullptr;
    const Sample* best_neg = nullptr;
    for (const auto& s : samples) {
      out.best_score = std::min(out.best_score, s.eval.score);
      if (s.eval.score < opts_.singular_threshold) candidates.push_back(s.xi);
      if (s.eval.det_sign > 0 && (!best_pos || s.eval.score < best_pos->eval.score)) best_pos = &s;
      if (s.eval.det_sign < 0 && (!best_neg || s.eval.score < best_neg->eval.score)) best_neg = &s;
    }
    // A sign change of det along a segment brackets a singular point.
    if (best_pos && best_neg) candidates.push_back(bisect(best_pos->xi, best_neg->xi));

    std::vector<std::size_t> order(samples.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    const std::size_t keep = std::min<std::size_t>(5, order.size());
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(keep), order.end(),
                      [&](std::size_t a, std::size_t b) { return samples[a].eval.score < samples[b].eval.score; });
    for (std::size_t i = 0; i < keep; ++i) candidates.push_back(descend(samples[order[i]].xi));

    for (const auto& xi : candidates) {
      const Eval e = evaluate(xi);
      out.best_score = std::min(out.best_score, e.score);
      if (e.score >= opts_.singular_threshold) continue;
      if (auto w = witness_at(xi)) {
        out.status = LocalInvertibility::Violated;
        out.witness = std::move(w);
        return out;
      }
    }
    return out;
  }

 private:
  Eigen::VectorXd bisect(Eigen::VectorXd a, Eigen::VectorXd b) const {
    const int sa = evaluate(a).det_sign;
    for (int it = 0; it < 200; ++it) {
      const Eigen::VectorXd mid = 0.5 * (a + b);
      if ((mid - a).lpNorm<Eigen::Infinity>() == 0 || (mid - b).lpNorm<Eigen::Infinity>() == 0) break;
      const int sm = evaluate(mid).det_sign;
      if (sm == 0) return mid;
      if (sm == sa) a = mid; else b = mid;
    }
    return evaluate(a).score < evaluate(b).score ? a : b;
  }

  // Pattern search on the score.
  Eigen::VectorXd descend(Eigen::VectorXd xi) const {
    double step = 0.5;
    double best = evaluate(xi).score;
    for (int it = 0; it < opts_.descent_steps && best >= opts_.singular_threshold; ++it) {
      bool moved = false;
      for (Eigen::Index i = 0; i < xi.size(); ++i) {
        for (double dir : {1.0, -1.0}) {
          Eigen::VectorXd trial = xi;
          trial(i) += dir * step;
          const double sc = evaluate(trial).score;
          if (sc < best) {
            best = sc;
            xi = trial;
            moved = true;
          }
        }
      }
      if (!moved) step /= 2;
    }
    return xi;
  }

  std::optional<LocalInvWitness> witness_at(const Eigen::VectorXd& xi) const {
    const Eigen::VectorXd y = moment_map(model_, xi);
    const Eigen::VectorXd lambda = moment_weights(model_, xi);

    // Exact attempts: rational vertex weights (y stays in P by construction), then rational y.
    std::optional<RatVector> lam(RatVector(lambda.size()));
    Rational rest = 1;
    for (Eigen::Index k = 0; k + 1 < lambda.size() && lam; ++k) {
      auto r = rationalize(lambda(k), 1e-9);
      if (!r) lam.reset(); else { (*lam)(k) = *r; rest -= *r; }
    }
    if (lam && lambda.size() > 0) {
      (*lam)(lambda.size() - 1) = rest;
      RatVector yr = RatVector::Zero(inst_.m());
      for (std::size_t k = 0; k < inst_.vertices.size(); ++k) {
        yr += (*lam)(static_cast<Eigen::Index>(k)) * inst_.vertices[k];
      }
      if (auto w = exact_witness_at(inst_, yr); w && verify(inst_, *w)) return w;
    }
    RatVector yr(inst_.m());
    bool ok = true;
    for (Eigen::Index i = 0; i < y.size() && ok; ++i) {
      auto r = rationalize(y(i), 1e-9);
      if (r) yr(i) = *r; else ok = false;
    }
    if (ok) {
      if (auto w = exact_witness_at(inst_, yr); w && verify(inst_, *w)) return w;
    }

    const Eigen::MatrixXd N = model_.H.transpose() * y.cwiseInverse().asDiagonal() * model_.G;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(N, Eigen::ComputeFullV);
    const Eigen::VectorXd beta = svd.matrixV().col(svd.matrixV().cols() - 1);
    Eigen::VectorXd t = model_.G * beta;
    const double tmax = t.lpNorm<Eigen::Infinity>();
    if (!(tmax > 0)) return std::nullopt;
    t /= tmax;
    const Eigen::VectorXd raw = t.cwiseQuotient(y);
    LocalInvWitness w;
    w.y = y;
    w.t = t;
    w.dbar = q_dperp_ * (q_dperp_.transpose() * raw);
    w.relative_error = (t - y.cwiseProduct(w.dbar)).norm() / t.norm();
    if (!verify(inst_, w)) return std::nullopt;
    return w;
  }

  const Instance& inst_;
  const AnalysisOptions& opts_;
  NumericModel<double> model_;
  mutable std::mt19937_64 rng_;
  Eigen::MatrixXd q_dperp_;
};

LocalInvResult local_invertibility_by_signs(const Instance& inst, const AnalysisOptions& opts) {
  LocalInvResult out;
  if (inst.dP() == 0) {
    out.status = LocalInvertibility::CertifiedBySigns;
    return out;
  }
  auto inter = signs_intersect_trivially(inst.T, inst.Dperp(), opts.signs);
  if (inter.trivial()) {
    out.status = LocalInvertibility::CertifiedBySigns;
  } else {
    out.common_sign = std::move(inter.witness);
  }
  return out;
}

}  // namespace

LocalInvResult check_local_invertibility(const Instance& inst, const AnalysisOptions& opts) {
  LocalInvResult out = local_invertibility_by_signs(inst, opts);
  if (out.status == LocalInvertibility::CertifiedBySigns) return out;
  if (!inst.dimension_ok()) throw DimensionMismatch(inst.dP(), inst.d());
  if (!opts.seed) throw InvalidInput("a seed is required to run the local invertibility falsifier");
  LocalInvResult fals = Falsifier(inst, opts).run();
  fals.common_sign = std::move(out.common_sign);
  return fals;
}

Verdict decide_unique_existence(const Instance& inst, const AnalysisOptions& opts) {
  Verdict v;
  v.dimension_ok = inst.dimension_ok();
  if (!v.dimension_ok) {
    v.status = Status::NotUnique;
    v.notes = "dimension mismatch d_P=" + std::to_string(inst.dP()) + ", d=" + std::to_string(inst.d()) +
              ": f cannot be bijective";
    return v;
  }

  v.properness = check_properness_sufficient(inst);
  if (v.properness.status != Properness::ProperBySigns || opts.always_exact_properness) {
    PropernessResult exact = check_properness_exact(inst);
    if (v.properness.status == Properness::ProperBySigns) {
      if (exact.status == Properness::NotProper) {
        throw std::logic_error("sign condition certified properness but the exact check found a witness");
      }
      v.properness.leaves_checked = exact.leaves_checked;
      v.properness.lp_calls = exact.lp_calls;
    } else {
      exact.sign_obstruction = std::move(v.properness.sign_obstruction);
      v.properness = std::move(exact);
    }
  }

  v.local = local_invertibility_by_signs(inst, opts);
  if (v.local.status != LocalInvertibility::CertifiedBySigns) {
    if (opts.seed) {
      LocalInvResult fals = Falsifier(inst, opts).run();
      fals.common_sign = std::move(v.local.common_sign);
      v.local = std::move(fals);
    } else if (v.properness.status == Properness::NotProper) {
      v.local.status = LocalInvertibility::Undetermined;
      v.notes += "local invertibility falsifier skipped (no seed); ";
    } else {
      throw InvalidInput("a seed is required to run the local invertibility falsifier");
    }
  }

  const bool proper = v.properness.status == Properness::Proper || v.properness.status == Properness::ProperBySigns;
  if (v.properness.status == Properness::NotProper || v.local.status == LocalInvertibility::Violated) {
    v.status = Status::NotUnique;
  } else if (v.local.status == LocalInvertibility::CertifiedBySigns && proper) {
    v.status = Status::UniqueForAllC;
  } else {
    v.status = Status::Undetermined;
  }
  v.sign_route = v.local.status == LocalInvertibility::CertifiedBySigns &&
                 v.properness.status == Properness::ProperBySigns;
  if (v.properness.status == Properness::NotProper) v.notes += "f is not proper; ";
  if (v.local.status == LocalInvertibility::Violated) v.notes += "f is not locally invertible; ";
  if (v.local.status == LocalInvertibility::Undetermined) {
    v.notes += "sign(T) meets sign(D-perp) nontrivially and the falsifier found no singular point; ";
  }
  if (v.sign_route) v.notes += "certified by sign conditions alone; ";
  if (!v.notes.empty()) v.notes.erase(v.notes.size() - 2);
  return v;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::UniqueForAllC: return "UNIQUE_FOR_ALL_C";
    case Status::NotUnique: return "NOT_UNIQUE";
    case Status::Undetermined: return "UNDETERMINED";
  }
  return "?";
}

std::string to_string(Properness p) {
  switch (p) {
    case Properness::NotChecked: return "NotChecked";
    case Properness::Proper: return "Proper";
    case Properness::ProperBySigns: return "ProperBySigns";
    case Properness::NotProper: return "NotProper";
    case Properness::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string to_string(LocalInvertibility l) {
  switch (l) {
    case LocalInvertibility::NotChecked: return "NotChecked";
    case LocalInvertibility::CertifiedBySigns: return "CertifiedBySigns";
    case LocalInvertibility::Violated: return "Violated";
    case LocalInvertibility::Undetermined: return "Undetermined";
  }
  return "?";
}

}  // namespace gpuniq
