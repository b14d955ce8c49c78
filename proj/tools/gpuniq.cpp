#include <CLI11.hpp>
#include <chrono>
#include <iostream>
#include <optional>

#include "gpuniq/errors.hpp"
#include "gpuniq/io.hpp"

using namespace gpuniq;
using nlohmann::json;

namespace {

struct Flags {
  std::string input;
  std::string c;
  std::optional<double> tol;
  std::optional<int> starts;
  std::optional<int> max_iter;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> falsifier_samples;
  std::optional<Eigen::Index> sign_dim_limit;
  std::string format = "text";
};

template <typename T>
T pick(const std::optional<T>& flag, const std::optional<T>& file, T fallback) {
  if (flag) return *flag;
  if (file) return *file;
  return fallback;
}

json report_header(const std::string& command, std::optional<std::uint64_t> seed) {
  json r = {{"schema", kReportSchema}, {"tool", "gpuniq"}, {"version", GPUNIQ_VERSION}, {"command", command}};
  r["seed"] = seed ? json(*seed) : json(nullptr);
  return r;
}

void emit(const json& report, const Flags& f) {
  if (f.format == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << render_text(report);
  }
}

int run(const std::string& command, const Flags& f) {
  const auto t0 = std::chrono::steady_clock::now();
  const ProblemFile prob = load_problem(f.input);
  const std::optional<std::uint64_t> seed = f.seed ? f.seed : prob.options.seed;
  SignOptions sopts;
  sopts.dim_limit = pick(f.sign_dim_limit, prob.options.sign_dim_limit, sopts.dim_limit);

  json report = report_header(command, seed);
  const Instance inst = build_instance(prob.A, prob.B);
  report["instance"] = instance_summary(inst);
  int code = 0;

  if (command == "vertices") {
    report["faces"] = faces_to_json(inst);
  } else if (command == "signs") {
    report["signs"] = signs_report(inst, sopts);
  } else if (command == "analyze") {
    AnalysisOptions opts;
    opts.seed = seed;
    opts.signs = sopts;
    opts.falsifier_samples = pick(f.falsifier_samples, prob.options.falsifier_samples, opts.falsifier_samples);
    const Verdict v = decide_unique_existence(inst, opts);
    report["verdict"] = verdict_to_json(inst, v);
    if (v.status == Status::Undetermined) code = 2;
  } else if (command == "solve") {
    if (!seed) throw InvalidInput("solve requires --seed (or options.seed in the problem file)");
    RatVector c_exact;
    if (!f.c.empty()) {
      c_exact = parse_rational_list(f.c);
    } else if (prob.c) {
      c_exact = *prob.c;
    } else {
      throw InvalidInput("solve requires c (--c or \"c\" in the problem file)");
    }
    if (c_exact.size() != inst.m()) throw InvalidInput("c must have one entry per column of A");
    for (Eigen::Index i = 0; i < c_exact.size(); ++i) {
      if (c_exact(i).sign() <= 0) throw InvalidInput("c must be strictly positive");
    }
    SolveOptions so;
    so.seed = *seed;
    so.tol = pick(f.tol, prob.options.tol, so.tol);
    so.starts = pick(f.starts, prob.options.starts, so.starts);
    so.max_iter = pick(f.max_iter, prob.options.max_iter, so.max_iter);
    if (so.starts <= 0) throw InvalidInput("starts must be positive");
    const NumericModel<double> model(inst);
    const Eigen::VectorXd c = to_double(c_exact);
    const SolveResult<double> r = solve_Yc(model, c, so);
    report["solve"] = json::array({solve_to_json(model, c, r)});
    if (r.ambiguous()) code = 2;
  }

  const auto t1 = std::chrono::steady_clock::now();
  report["timing"] = {{"wall_ms", std::chrono::duration<double, std::milli>(t1 - t0).count()}};
  emit(report, f);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unique positive solutions of generalized polynomial systems A (c o x^B) = 0"};
  app.set_version_flag("--version", std::string(GPUNIQ_VERSION));
  app.require_subcommand(1);
  Flags f;

  auto common = [&](CLI::App* sub) {
    sub->add_option("input,--input", f.input, "Problem file (JSON)")->required();
    sub->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--sign-dim-limit", f.sign_dim_limit, "Largest m for sign vector enumeration");
  };
  CLI::App* analyze = app.add_subcommand("analyze", "Decide unique existence for all positive c");
  common(analyze);
  analyze->add_option("--seed", f.seed, "Seed for the falsifier");
  analyze->add_option("--falsifier-samples", f.falsifier_samples, "Falsifier sample count (default 10000)");

  CLI::App* solve = app.add_subcommand("solve", "Solve for a given positive c");
  common(solve);
  solve->add_option("--c", f.c, "Comma-separated coefficients, e.g. \"1,1/2,0.3\"");
  solve->add_option("--seed", f.seed, "Seed for the multi-start initial points");
  solve->add_option("--tol", f.tol, "Residual tolerance (default 1e-10)");
  solve->add_option("--starts", f.starts, "Number of starts (default 32)");
  solve->add_option("--max-iter", f.max_iter, "Newton iterations per start (default 100)");

  CLI::App* vertices = app.add_subcommand("vertices", "List polytope vertices and faces");
  common(vertices);
  CLI::App* signs = app.add_subcommand("signs", "Sign vector diagnostics");
  common(signs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, f);
  } catch (const NoConvergence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << " (the map f needs as many parameters as monomial dependencies)\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
