#ifndef GPUNIQ_IO_HPP
#define GPUNIQ_IO_HPP

#include <json.hpp>
#include <optional>
#include <string>
#include <string_view>

#include "gpuniq/analysis.hpp"
#include "gpuniq/solver.hpp"

namespace gpuniq {

inline constexpr int kReportSchema = 1;

struct ProblemOptions {
  std::optional<double> tol;
  std::optional<int> starts;
  std::optional<int> max_iter;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> falsifier_samples;
  std::optional<Eigen::Index> sign_dim_limit;
};

// JSON problem: {"A": [[...]], "B": [[...]], "c": [...], "options": {...}}.
// Entries are "p/q" strings, decimal strings, or JSON numbers; decimals are
// read exactly (0.25 -> 1/4, 0.1 -> 1/10).
struct ProblemFile {
  RatMatrix A;
  RatMatrix B;
  std::optional<RatVector> c;
  ProblemOptions options;
};

// Throws InvalidInput with a message naming the offending field.
ProblemFile parse_problem(const nlohmann::json& j);
ProblemFile load_problem(const std::string& path);

Rational rational_from_json(const nlohmann::json& j);
// Comma- or whitespace-separated rationals, e.g. "1, 2/3, 0.5".
RatVector parse_rational_list(std::string_view text);

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const RatVector& v);
nlohmann::json to_json(const RatMatrix& m);   // list of rows
nlohmann::json to_json(const Eigen::VectorXd& v);
nlohmann::json to_json(const Eigen::MatrixXd& m);

nlohmann::json instance_summary(const Instance& inst);
nlohmann::json faces_to_json(const Instance& inst);

// Every witness is re-verified through the analysis API before it is written;
// a failing witness throws std::logic_error.
nlohmann::json verdict_to_json(const Instance& inst, const Verdict& v);

nlohmann::json solve_to_json(const NumericModel<double>& model, const Eigen::VectorXd& c,
                             const SolveResult<double>& r);

// Sign-vector diagnostics: sign(T), sign(D-perp), their intersection, face
// conditions, and the surjectivity condition.
nlohmann::json signs_report(const Instance& inst, const SignOptions& opts);

// Human-readable rendering of a report produced by the CLI.
std::string render_text(const nlohmann::json& report);

}  // namespace gpuniq

#endif  // GPUNIQ_IO_HPP
