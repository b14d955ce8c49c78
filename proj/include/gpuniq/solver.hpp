#ifndef GPUNIQ_SOLVER_HPP
#define GPUNIQ_SOLVER_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "gpuniq/errors.hpp"
#include "gpuniq/geometry.hpp"

namespace gpuniq {

// Floating-point view of an Instance. The exact objects are converted once;
// nothing below touches rationals.
template <typename Scalar>
struct NumericModel {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  explicit NumericModel(const Instance& inst)
      : A(convert(inst.A)),
        B(convert(inst.B)),
        G(convert(inst.G())),
        H(convert(inst.H())),
        E(convert(inst.E)),
        Lperp(convert(inst.Lperp.basis())) {
    V.resize(inst.m(), static_cast<Eigen::Index>(inst.vertices.size()));
    for (std::size_t k = 0; k < inst.vertices.size(); ++k) {
      for (Eigen::Index i = 0; i < inst.m(); ++i) {
        V(i, static_cast<Eigen::Index>(k)) = static_cast<Scalar>(inst.vertices[k](i).to_double());
      }
    }
    logV = V.array().log().matrix();  // -inf where a vertex coordinate vanishes
    W = G.transpose() * V;
  }

  Eigen::Index m() const { return V.rows(); }
  Eigen::Index num_vertices() const { return V.cols(); }
  Eigen::Index dP() const { return G.cols(); }
  Eigen::Index d() const { return H.cols(); }

  Matrix A, B, G, H, E, Lperp;
  Matrix V;     // vertices as columns
  Matrix logV;
  Matrix W;     // G^T V: vertex projections onto the parameter space

 private:
  static Matrix convert(const RatMatrix& r) {
    Matrix out(r.rows(), r.cols());
    for (Eigen::Index i = 0; i < r.rows(); ++i) {
      for (Eigen::Index j = 0; j < r.cols(); ++j) out(i, j) = static_cast<Scalar>(r(i, j).to_double());
    }
    return out;
  }
};

namespace detail {

template <typename Scalar>
Scalar log_sum_exp(const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& s) {
  const Scalar mx = s.maxCoeff();
  if (!std::isfinite(static_cast<double>(mx))) return mx;
  return mx + std::log((s.array() - mx).exp().sum());
}

}  // namespace detail

// Softmax vertex weights lambda_k = exp(v^k . G xi) / sum_l exp(v^l . G xi).
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> moment_weights(const NumericModel<Scalar>& model,
                                                        const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& xi) {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> s = model.W.transpose() * xi;
  s.array() -= s.maxCoeff();
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> w = s.array().exp();
  return w / w.sum();
}

// Moment map p(xi): the softmax-weighted vertex average, a point of P.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> moment_map(const NumericModel<Scalar>& model,
                                                    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& xi) {
  return model.V * moment_weights(model, xi);
}

// log v(xi) for the unnormalized sum v = sum_k exp(v^k . G xi) v^k, evaluated
// coordinatewise as a log-sum-exp so no coordinate underflows to zero.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> log_unnormalized(const NumericModel<Scalar>& model,
                                                          const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& xi) {
  const Eigen::Matrix<Scalar, Eigen::Dynamic, 1> s = model.W.transpose() * xi;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> out(model.m());
  for (Eigen::Index j = 0; j < model.m(); ++j) {
    out(j) = detail::log_sum_exp<Scalar>(s + model.logV.row(j).transpose());
  }
  return out;
}

// log p(xi), robust for large |xi|.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> log_moment_map(const NumericModel<Scalar>& model,
                                                        const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& xi) {
  const Eigen::Matrix<Scalar, Eigen::Dynamic, 1> s = model.W.transpose() * xi;
  return log_unnormalized(model, xi).array() - detail::log_sum_exp<Scalar>(s);
}

// f(xi) = v(xi)^H, computed as exp(H^T log v(xi)).
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> eval_f(const NumericModel<Scalar>& model,
                                                const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& xi) {
  if (model.d() != model.dP()) throw DimensionMismatch(model.dP(), model.d());
  return (model.H.transpose() * log_unnormalized(model, xi)).array().exp();
}

// y^H for positive y.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> power_map(const NumericModel<Scalar>& model,
                                                   const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& y) {
  return (model.H.transpose() * y.array().log().matrix()).array().exp();
}

// J_p = dV diag(lambda) dV_p^T G with dV = (v^1 - v^n, ..., v^{n-1} - v^n, 0)
// and dV_p = (v^1 - p, ..., v^n - p).
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> jacobian_p(
    const NumericModel<Scalar>& model, const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& xi) {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const auto lambda = moment_weights(model, xi);
  const auto p = (model.V * lambda).eval();
  const Eigen::Index np = model.num_vertices();
  Matrix dV = Matrix::Zero(model.m(), np);
  for (Eigen::Index k = 0; k + 1 < np; ++k) dV.col(k) = model.V.col(k) - model.V.col(np - 1);
  const Matrix dVp = model.V.colwise() - p;
  return dV * lambda.asDiagonal() * dVp.transpose() * model.G;
}

// d/dxi of H^T log p(xi): H^T diag(p^-1) J_p.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> jacobian_log_f(
    const NumericModel<Scalar>& model, const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& xi) {
  const auto p = moment_map(model, xi);
  return model.H.transpose() * p.cwiseInverse().asDiagonal() * jacobian_p(model, xi);
}

// J_f = J_h(p) J_p with J_h(y) = diag(h(y)) H^T diag(y^-1).
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> jacobian_f(
    const NumericModel<Scalar>& model, const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& xi) {
  if (model.d() != model.dP()) throw DimensionMismatch(model.dP(), model.d());
  const auto p = moment_map(model, xi);
  const auto h = power_map(model, p);
  return h.asDiagonal() * model.H.transpose() * p.cwiseInverse().asDiagonal() * jacobian_p(model, xi);
}

struct SolveOptions {
  int starts = 32;
  int max_iter = 100;
  double tol = 1e-10;  // on ||f(xi) - c^H||_inf, scaled by max(1, ||c^H||_inf)
  std::uint64_t seed = 0;
  double agree_tol = 1e-8;
};

template <typename Scalar>
struct SolveResult {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  Vector xi_star;
  Vector y_star;
  Vector x_star;
  Matrix Lperp_basis;
  Scalar residual = 0;        // ||f(xi*) - c^H||_inf
  Scalar zc_residual = 0;     // ||A (c o x*^B)||_inf
  int starts_agreed = 0;
  int starts_converged = 0;
  int starts_total = 0;
  // One representative y per cluster of converged starts; size > 1 means the
  // starts disagree.
  std::vector<Vector> distinct_y;
  bool ambiguous() const { return distinct_y.size() > 1; }
};

namespace detail {

template <typename Scalar>
struct NewtonRun {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> xi;
  Scalar residual = std::numeric_limits<Scalar>::infinity();
  bool converged = false;
};

// Damped Newton on r(xi) = H^T log p(xi) - H^T log c, backtracking by halving.
template <typename Scalar>
NewtonRun<Scalar> newton_from(const NumericModel<Scalar>& model, const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& target_log,
                              const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& target,
                              Eigen::Matrix<Scalar, Eigen::Dynamic, 1> xi, const SolveOptions& opts) {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  auto log_residual = [&](const Vector& z) -> Vector {
    return model.H.transpose() * log_moment_map(model, z) - target_log;
  };
  Vector r = log_residual(xi);
  Scalar rnorm = r.template lpNorm<Eigen::Infinity>();
  for (int it = 0; it < opts.max_iter && std::isfinite(static_cast<double>(rnorm)); ++it) {
    if (rnorm <= std::numeric_limits<Scalar>::epsilon()) break;
    const auto J = jacobian_log_f(model, xi);
    const Vector step = J.fullPivLu().solve(-r);
    if (!step.allFinite()) break;
    Scalar alpha = 1;
    bool improved = false;
    for (int half = 0; half <= 30; ++half, alpha /= 2) {
      const Vector trial = xi + alpha * step;
      const Vector rt = log_residual(trial);
      const Scalar tn = rt.template lpNorm<Eigen::Infinity>();
      if (std::isfinite(static_cast<double>(tn)) && tn < rnorm) {
        xi = trial;
        r = rt;
        rnorm = tn;
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  NewtonRun<Scalar> run;
  run.xi = xi;
  const Vector f = eval_f(model, xi);
  run.residual = (f - target).template lpNorm<Eigen::Infinity>();
  // Absolute below 1, relative above: entries of c^H far from 1 carry
  // proportionally larger rounding error.
  const Scalar scale = std::max(Scalar(1), target.template lpNorm<Eigen::Infinity>());
  run.converged = xi.allFinite() && run.residual <= static_cast<Scalar>(opts.tol) * scale;
  return run;
}

template <typename Scalar>
bool lex_less(const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& a, const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

}  // namespace detail

// x = (y o c^-1)^E together with a basis of L-perp = ker M^T. Throws
// NotOnVariety unless y^H matches c^H (checked in log space to `tol`).
template <typename Scalar>
std::pair<Eigen::Matrix<Scalar, Eigen::Dynamic, 1>, Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>>
reconstruct_Zc(const NumericModel<Scalar>& model, const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& c,
               const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& y, Scalar tol = Scalar(1e-8)) {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  if (c.size() != model.m() || y.size() != model.m()) throw InvalidInput("reconstruct_Zc: size mismatch");
  if ((c.array() <= 0).any() || (y.array() <= 0).any()) throw InvalidInput("reconstruct_Zc: c and y must be positive");
  const Vector log_ratio = y.array().log() - c.array().log();
  const Scalar mismatch = (model.H.transpose() * log_ratio).template lpNorm<Eigen::Infinity>();
  if (!(mismatch <= tol)) throw NotOnVariety("reconstruct_Zc: y^H differs from c^H");
  Vector x = (model.E.transpose() * log_ratio).array().exp();
  return {std::move(x), model.Lperp};
}

// ||A (c o x^B)||_inf
template <typename Scalar>
Scalar system_residual(const NumericModel<Scalar>& model, const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& c,
                       const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& x) {
  const Eigen::Matrix<Scalar, Eigen::Dynamic, 1> monomials = (model.B.transpose() * x.array().log().matrix()).array().exp();
  if (model.A.rows() == 0) return Scalar(0);
  return (model.A * c.cwiseProduct(monomials)).template lpNorm<Eigen::Infinity>();
}

// Solve y^H = c^H on P by multi-start damped Newton in log space, then
// reconstruct x. Throws NoConvergence if no start converges.
template <typename Scalar>
SolveResult<Scalar> solve_Yc(const NumericModel<Scalar>& model, const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& c,
                             const SolveOptions& opts) {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  if (model.d() != model.dP()) throw DimensionMismatch(model.dP(), model.d());
  if (c.size() != model.m()) throw InvalidInput("c must have one entry per column of A");
  if ((c.array() <= 0).any() || !c.allFinite()) throw InvalidInput("c must be strictly positive");

  const Vector target_log = model.H.transpose() * c.array().log().matrix();
  const Vector target = target_log.array().exp();

  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<detail::NewtonRun<Scalar>> runs;
  for (int s = 0; s < opts.starts; ++s) {
    Vector xi0(model.dP());
    for (Eigen::Index i = 0; i < xi0.size(); ++i) xi0(i) = static_cast<Scalar>(2.0 * normal(rng));
    runs.push_back(detail::newton_from(model, target_log, target, xi0, opts));
  }

  SolveResult<Scalar> result;
  result.starts_total = opts.starts;
  std::vector<const detail::NewtonRun<Scalar>*> converged;
  for (const auto& r : runs) {
    if (r.converged) converged.push_back(&r);
  }
  result.starts_converged = static_cast<int>(converged.size());
  if (converged.empty()) {
    throw NoConvergence("no start converged within " + std::to_string(opts.max_iter) + " iterations");
  }
  std::sort(converged.begin(), converged.end(), [](const auto* a, const auto* b) {
    if (a->residual != b->residual) return a->residual < b->residual;
    return detail::lex_less(a->xi, b->xi);
  });
  const auto* best = converged.front();

  // Cluster converged points in y-space around successive representatives.
  std::vector<Vector> reps;
  std::vector<int> counts;
  for (const auto* r : converged) {
    const Vector y = moment_map(model, r->xi);
    bool placed = false;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      if ((reps[i] - y).template lpNorm<Eigen::Infinity>() <= static_cast<Scalar>(opts.agree_tol)) {
        ++counts[i];
        placed = true;
        break;
      }
    }
    if (!placed) {
      reps.push_back(y);
      counts.push_back(1);
    }
  }
  result.distinct_y = reps;
  result.starts_agreed = counts.front();
  result.xi_star = best->xi;
  result.y_star = moment_map(model, best->xi);
  result.residual = best->residual;
  auto [x, lperp] = reconstruct_Zc(model, c, result.y_star);
  result.x_star = std::move(x);
  result.Lperp_basis = std::move(lperp);
  result.zc_residual = system_residual(model, c, result.x_star);
  return result;
}

}  // namespace gpuniq

#endif  // GPUNIQ_SOLVER_HPP
