#include "gpuniq/io.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "gpuniq/errors.hpp"

namespace gpuniq {

using nlohmann::json;

namespace {

RatMatrix matrix_from_json(const json& j, const char* name) {
  if (!j.is_array()) throw InvalidInput(std::string(name) + ": expected a list of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  Eigen::Index cols = -1;
  for (const auto& row : j) {
    if (!row.is_array()) throw InvalidInput(std::string(name) + ": expected a list of rows");
    if (cols < 0) cols = static_cast<Eigen::Index>(row.size());
    if (static_cast<Eigen::Index>(row.size()) != cols) throw InvalidInput(std::string(name) + ": ragged rows");
  }
  RatMatrix out(rows, cols < 0 ? 0 : cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index k = 0; k < out.cols(); ++k) {
      try {
        out(i, k) = rational_from_json(j[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]);
      } catch (const std::exception& e) {
        throw InvalidInput(std::string(name) + "[" + std::to_string(i) + "][" + std::to_string(k) + "]: " + e.what());
      }
    }
  }
  return out;
}

template <typename T>
std::optional<T> optional_number(const json& opts, const char* key) {
  if (!opts.contains(key) || opts[key].is_null()) return std::nullopt;
  const json& v = opts[key];
  if (!v.is_number()) throw InvalidInput(std::string("options.") + key + ": expected a number");
  if constexpr (std::is_integral_v<T>) {
    if (!v.is_number_integer()) throw InvalidInput(std::string("options.") + key + ": expected an integer");
    if (v.is_number_unsigned()) return static_cast<T>(v.get<std::uint64_t>());
    const auto s = v.get<std::int64_t>();
    if (s < 0) throw InvalidInput(std::string("options.") + key + ": must be nonnegative");
    return static_cast<T>(s);
  } else {
    return v.get<T>();
  }
}

json index_list(const std::vector<std::size_t>& v) {
  json out = json::array();
  for (auto i : v) out.push_back(i);
  return out;
}

json index_set_json(IndexSet s) {
  json out = json::array();
  for (auto i : indices_of(s)) out.push_back(i);
  return out;
}

json sign_intersection_json(const SignIntersection& s) {
  return {{"sigma", s.sigma.str()}, {"x_T", to_json(s.x1)}, {"x_Dperp", to_json(s.x2)}};
}

}  // namespace

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rational::parse(std::to_string(j.get<std::uint64_t>()));
    return Rational(static_cast<long long>(j.get<std::int64_t>()));
  }
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw InvalidInput("non-finite number");
    return Rational::from_double_decimal(v);
  }
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const std::exception&) {
      throw InvalidInput("cannot parse \"" + j.get<std::string>() + "\" as a rational");
    }
  }
  throw InvalidInput("expected a number or a \"p/q\" string");
}

RatVector parse_rational_list(std::string_view text) {
  std::vector<Rational> vals;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    try {
      vals.push_back(Rational::parse(token));
    } catch (const std::exception&) {
      throw InvalidInput("cannot parse \"" + token + "\" as a rational");
    }
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch)) || ch == '[' || ch == ']') {
      flush();
    } else {
      token.push_back(ch);
    }
  }
  flush();
  RatVector out(static_cast<Eigen::Index>(vals.size()));
  for (std::size_t i = 0; i < vals.size(); ++i) out(static_cast<Eigen::Index>(i)) = vals[i];
  return out;
}

ProblemFile parse_problem(const json& j) {
  if (!j.is_object()) throw InvalidInput("problem: expected a JSON object");
  if (!j.contains("A")) throw InvalidInput("problem: missing \"A\"");
  if (!j.contains("B")) throw InvalidInput("problem: missing \"B\"");
  ProblemFile p;
  p.A = matrix_from_json(j["A"], "A");
  p.B = matrix_from_json(j["B"], "B");
  if (p.A.cols() != p.B.cols()) {
    throw InvalidInput("A has " + std::to_string(p.A.cols()) + " columns but B has " + std::to_string(p.B.cols()));
  }
  if (j.contains("c") && !j["c"].is_null()) {
    const json& c = j["c"];
    if (!c.is_array()) throw InvalidInput("c: expected a list");
    RatVector v(static_cast<Eigen::Index>(c.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
      try {
        v(static_cast<Eigen::Index>(i)) = rational_from_json(c[i]);
      } catch (const std::exception& e) {
        throw InvalidInput("c[" + std::to_string(i) + "]: " + e.what());
      }
    }
    if (v.size() != p.A.cols()) throw InvalidInput("c must have one entry per column of A");
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (v(i).sign() <= 0) throw InvalidInput("c must be strictly positive");
    }
    p.c = v;
  }
  if (j.contains("options") && !j["options"].is_null()) {
    const json& o = j["options"];
    if (!o.is_object()) throw InvalidInput("options: expected an object");
    p.options.tol = optional_number<double>(o, "tol");
    p.options.starts = optional_number<int>(o, "starts");
    p.options.max_iter = optional_number<int>(o, "max_iter");
    p.options.seed = optional_number<std::uint64_t>(o, "seed");
    p.options.falsifier_samples = optional_number<std::size_t>(o, "falsifier_samples");
    p.options.sign_dim_limit = optional_number<Eigen::Index>(o, "sign_dim_limit");
  }
  return p;
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput(path + ": malformed JSON: " + e.what());
  }
  return parse_problem(j);
}

json to_json(const Rational& r) { return r.str(); }

json to_json(const RatVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i).str());
  return out;
}

json to_json(const RatMatrix& m) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(to_json(RatVector(m.row(i).transpose())));
  return out;
}

json to_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

json to_json(const Eigen::MatrixXd& m) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(to_json(Eigen::VectorXd(m.row(i).transpose())));
  return out;
}

json instance_summary(const Instance& inst) {
  json verts = json::array();
  for (const auto& v : inst.vertices) verts.push_back(to_json(v));
  return {{"m", inst.m()},
          {"n", inst.n()},
          {"l", inst.l()},
          {"d", inst.d()},
          {"dP", inst.dP()},
          {"L_dim", inst.L_dim},
          {"dimension_ok", inst.dimension_ok()},
          {"vertices", verts},
          {"face_count", inst.faces.size()}};
}

json faces_to_json(const Instance& inst) {
  json out = json::array();
  for (const auto& f : inst.faces) {
    out.push_back({{"vertices", index_list(f.vertices)}, {"zero", index_set_json(f.zero)}});
  }
  return out;
}

json verdict_to_json(const Instance& inst, const Verdict& v) {
  json local = {{"status", to_string(v.local.status)}, {"samples", v.local.samples}};
  if (v.local.samples > 0) local["best_score"] = v.local.best_score;
  if (v.local.common_sign) local["common_sign"] = sign_intersection_json(*v.local.common_sign);
  if (v.local.witness) {
    const LocalInvWitness& w = *v.local.witness;
    if (!verify(inst, w)) throw std::logic_error("local invertibility witness failed re-verification");
    json wj = {{"exact", w.exact}, {"relative_error", w.relative_error}};
    if (w.exact) {
      wj["y"] = to_json(w.y_exact);
      wj["t"] = to_json(w.t_exact);
      wj["dbar"] = to_json(w.dbar_exact);
    } else {
      wj["y"] = to_json(w.y);
      wj["t"] = to_json(w.t);
      wj["dbar"] = to_json(w.dbar);
    }
    local["witness"] = wj;
  }

  json prop = {{"status", to_string(v.properness.status)},
               {"leaves_checked", v.properness.leaves_checked},
               {"lp_calls", v.properness.lp_calls}};
  if (v.properness.witness) {
    const PropernessWitness& w = *v.properness.witness;
    if (!verify(inst, w)) throw std::logic_error("properness witness failed re-verification");
    prop["witness"] = {{"t", to_json(w.t)},
                       {"face", w.face},
                       {"assignment", index_list(w.assignment)},
                       {"mu_max", to_json(w.mu_max)}};
  }
  if (v.properness.sign_obstruction) {
    const FaceSignWitness& s = *v.properness.sign_obstruction;
    prop["sign_obstruction"] = {{"face", s.face_index}, {"tau", s.tau.str()}, {"u", to_json(s.u)}};
  }

  return {{"status", to_string(v.status)},
          {"dimension_ok", v.dimension_ok},
          {"sign_route", v.sign_route},
          {"local_invertibility", local},
          {"properness", prop},
          {"notes", v.notes}};
}

json solve_to_json(const NumericModel<double>& model, const Eigen::VectorXd& c, const SolveResult<double>& r) {
  json distinct = json::array();
  for (const auto& y : r.distinct_y) distinct.push_back(to_json(y));
  return {{"c", to_json(c)},
          {"xi", to_json(r.xi_star)},
          {"y", to_json(r.y_star)},
          {"x", to_json(r.x_star)},
          {"Lperp_basis", to_json(Eigen::MatrixXd(r.Lperp_basis))},
          {"residual", r.residual},
          {"zc_residual", r.zc_residual},
          {"system_residual", system_residual(model, c, r.x_star)},
          {"starts_agreed", r.starts_agreed},
          {"starts_converged", r.starts_converged},
          {"starts_total", r.starts_total},
          {"ambiguous", r.ambiguous()},
          {"distinct_y", distinct}};
}

json signs_report(const Instance& inst, const SignOptions& opts) {
  auto listing = [&](const Subspace& S) {
    json out = json::array();
    for (const auto& s : subspace_sign_vectors(S, opts)) out.push_back(s.str());
    return out;
  };
  json out;
  out["sign_T"] = listing(inst.T);
  out["sign_Dperp"] = listing(inst.Dperp());
  const auto inter = signs_intersect_trivially(inst.T, inst.Dperp(), opts);
  out["intersection_trivial"] = inter.trivial();
  if (inter.witness) out["intersection_witness"] = sign_intersection_json(*inter.witness);

  json faces = json::array();
  const Subspace Dperp = inst.Dperp();
  for (std::size_t i = 0; i + 1 < inst.faces.size(); ++i) {
    const SignVec tau = face_tau(inst.faces[i], inst.m());
    const auto u = sign_realizable_in(tau, Dperp);
    json f = {{"face", i}, {"vertices", index_list(inst.faces[i].vertices)}, {"tau", tau.str()},
              {"tau_in_sign_Dperp", u.has_value()}};
    if (u) f["u"] = to_json(*u);
    faces.push_back(f);
  }
  out["faces"] = faces;
  out["face_condition"] = face_sign_condition(inst.faces, inst.D, inst.m()).holds();

  const auto surj = surjectivity_sign_condition(inst.T, inst.D, opts);
  out["surjectivity_condition"] = surj.holds();
  if (surj.failing) out["surjectivity_failing"] = surj.failing->str();
  return out;
}

namespace {

std::string join(const json& arr) {
  std::string out = "(";
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) out += ", ";
    out += arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
  }
  return out + ")";
}

void render_instance(std::ostringstream& os, const json& inst) {
  os << "instance: m=" << inst["m"] << " n=" << inst["n"] << " l=" << inst["l"] << " d=" << inst["d"]
     << " dP=" << inst["dP"] << " L_dim=" << inst["L_dim"] << " faces=" << inst["face_count"] << "\n";
  os << "vertices:\n";
  for (const auto& v : inst["vertices"]) os << "  " << join(v) << "\n";
}

void render_verdict(std::ostringstream& os, const json& v) {
  os << "verdict: " << v["status"].get<std::string>() << "\n";
  const json& li = v["local_invertibility"];
  os << "local invertibility: " << li["status"].get<std::string>() << "\n";
  if (li.contains("common_sign")) os << "  common sign vector: " << li["common_sign"]["sigma"].get<std::string>() << "\n";
  if (li.contains("witness")) {
    const json& w = li["witness"];
    os << "  witness (" << (w["exact"].get<bool>() ? "exact" : "floating") << ")\n";
    os << "    y    = " << join(w["y"]) << "\n";
    os << "    t    = " << join(w["t"]) << "\n";
    os << "    dbar = " << join(w["dbar"]) << "\n";
  }
  const json& pr = v["properness"];
  os << "properness: " << pr["status"].get<std::string>() << "\n";
  if (pr.contains("witness")) {
    os << "  witness t = " << join(pr["witness"]["t"]) << ", mu_max = " << join(pr["witness"]["mu_max"]) << "\n";
  }
  if (pr.contains("sign_obstruction")) {
    os << "  face " << pr["sign_obstruction"]["face"] << " has tau " << pr["sign_obstruction"]["tau"].get<std::string>()
       << " in sign(D-perp)\n";
  }
  if (!v["notes"].get<std::string>().empty()) os << "note: " << v["notes"].get<std::string>() << "\n";
}

void render_solve(std::ostringstream& os, const json& s) {
  os << "c  = " << join(s["c"]) << "\n";
  os << "y* = " << join(s["y"]) << "\n";
  os << "x* = " << join(s["x"]) << "\n";
  os << "xi* = " << join(s["xi"]) << "\n";
  os << "L-perp basis columns: " << (s["Lperp_basis"].empty() ? 0 : s["Lperp_basis"][0].size()) << "\n";
  os << "residual " << s["residual"] << ", system residual " << s["zc_residual"] << "\n";
  os << "starts: " << s["starts_agreed"] << " agreed, " << s["starts_converged"] << " converged of "
     << s["starts_total"] << "\n";
  if (s["ambiguous"].get<bool>()) os << "warning: starts converged to " << s["distinct_y"].size() << " distinct points\n";
}

void render_signs(std::ostringstream& os, const json& s) {
  os << "sign(T): " << s["sign_T"].size() << " vectors\n";
  for (const auto& v : s["sign_T"]) os << "  " << v.get<std::string>() << "\n";
  os << "sign(D-perp): " << s["sign_Dperp"].size() << " vectors\n";
  for (const auto& v : s["sign_Dperp"]) os << "  " << v.get<std::string>() << "\n";
  os << "sign(T) n sign(D-perp) = {0}: " << (s["intersection_trivial"].get<bool>() ? "yes" : "no") << "\n";
  for (const auto& f : s["faces"]) {
    os << "  face " << f["face"] << " " << join(f["vertices"]) << " tau " << f["tau"].get<std::string>()
       << (f["tau_in_sign_Dperp"].get<bool>() ? " in" : " not in") << " sign(D-perp)\n";
  }
  os << "face condition: " << (s["face_condition"].get<bool>() ? "holds" : "fails") << "\n";
  os << "surjectivity condition: " << (s["surjectivity_condition"].get<bool>() ? "holds" : "fails");
  if (s.contains("surjectivity_failing")) os << " at " << s["surjectivity_failing"].get<std::string>();
  os << "\n";
}

}  // namespace

std::string render_text(const json& report) {
  std::ostringstream os;
  if (report.contains("instance")) render_instance(os, report["instance"]);
  if (report.contains("faces")) {
    os << "faces:\n";
    for (const auto& f : report["faces"]) os << "  vertices " << join(f["vertices"]) << " zero " << join(f["zero"]) << "\n";
  }
  if (report.contains("signs")) render_signs(os, report["signs"]);
  if (report.contains("verdict")) render_verdict(os, report["verdict"]);
  if (report.contains("solve")) {
    for (const auto& s : report["solve"]) render_solve(os, s);
  }
  return os.str();
}

}  // namespace gpuniq
