#include "omfam/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "omfam/expfam.hpp"
#include "omfam/io.hpp"
#include "omfam/linalg.hpp"
#include "omfam/models.hpp"
#include "omfam/oriented_matroid.hpp"
#include "omfam/supports.hpp"

namespace omfam::cli {

namespace {

using Json = nlohmann::ordered_json;

struct CommonOptions {
  std::string format = "text";
  std::string mode = "exact";
  double tol = kDefaultTolerance;
  std::string output;
};

class ExitWith : public std::runtime_error {
 public:
  ExitWith(int code, const std::string& message) : std::runtime_error(message), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

Mode mode_of(const CommonOptions& o) { return o.mode == "float" ? Mode::Float : Mode::Exact; }

Json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Json indices_json(IndexSet s) {
  Json arr = Json::array();
  for (auto i : s.indices()) arr.push_back(i + 1);
  return arr;
}

Json signed_json(const SignedSubset& x) { return Json{{"plus", indices_json(x.plus)}, {"minus", indices_json(x.minus)}}; }

Json circuit_json(const CircuitVector& c) {
  Json arr = Json::array();
  for (const auto& e : c.entries()) arr.push_back(integer_json(e));
  return arr;
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

MatrixFile load_matrix(const std::string& path, const CommonOptions& o) {
  return parse_matrix(read_file(path), mode_of(o));
}

// ---------------------------------------------------------------------------
// Text rendering: every field of the JSON document, one per line.

std::string inline_text(const Json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_float()) {
    std::ostringstream os;
    os.precision(17);
    os << v.get<double>();
    return os.str();
  }
  if (v.is_number()) return v.dump();
  if (v.is_array()) {
    std::string out = "[";
    bool first = true;
    for (const auto& e : v) {
      out += (first ? "" : ", ") + inline_text(e);
      first = false;
    }
    return out + "]";
  }
  if (v.contains("plus") && v.contains("minus") && v.size() == 2) {
    auto set = [](const Json& a) {
      std::string out = "{";
      bool first = true;
      for (const auto& e : a) {
        out += (first ? "" : ",") + e.dump();
        first = false;
      }
      return out + "}";
    };
    return "+" + set(v["plus"]) + " -" + set(v["minus"]);
  }
  std::string out;
  bool first = true;
  for (const auto& [k, e] : v.items()) {
    out += (first ? "" : ", ") + k + "=" + inline_text(e);
    first = false;
  }
  return out;
}

void render_text(const Json& doc, std::ostream& os, const std::string& indent = "") {
  for (const auto& [key, v] : doc.items()) {
    const bool list_of_objects = v.is_array() && !v.empty() && v.front().is_object();
    const bool nested = v.is_object() && !(v.contains("plus") && v.contains("minus"));
    if (list_of_objects) {
      os << indent << key << ":\n";
      for (const auto& e : v) os << indent << "  - " << inline_text(e) << '\n';
    } else if (nested) {
      os << indent << key << ":\n";
      render_text(v, os, indent + "  ");
    } else {
      os << indent << key << ": " << inline_text(v) << '\n';
    }
  }
}

void emit(const Json& doc, const CommonOptions& o, std::ostream& out) {
  std::ostringstream body;
  if (o.format == "json") {
    body << doc.dump(2) << '\n';
  } else {
    render_text(doc, body);
  }
  if (o.output.empty()) {
    out << body.str();
    return;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f) throw InputError("cannot write '" + o.output + "'");
  f << body.str();
}

Json header(const std::string& command) { return Json{{"schema_version", kSchemaVersion}, {"command", command}}; }

// ---------------------------------------------------------------------------
// Commands

int cmd_circuits(const std::string& path, const CommonOptions& o, std::ostream& out) {
  const MatrixFile mf = load_matrix(path, o);
  const Matrix& a = mf.matrix;
  const auto circuits = enumerate_circuits(a);
  const OrientedMatroid om = signed_circuits(a);
  const std::size_t r = rank(a);

  Json doc = header("circuits");
  doc["approximate"] = mf.approximate;
  doc["states"] = a.cols();
  doc["rank"] = r;
  doc["count"] = circuits.size();
  doc["bound"] = integer_json(circuit_count_bound(a));
  Json cs = Json::array();
  for (const auto& c : circuits) cs.push_back(circuit_json(c));
  doc["circuits"] = std::move(cs);
  Json ss = Json::array();
  for (const auto& x : om.circuits) ss.push_back(signed_json(x));
  doc["signed_circuits"] = std::move(ss);
  emit(doc, o, out);
  return kOk;
}

int cmd_supports(const std::string& path, bool brute_force, bool fvector, const CommonOptions& o,
                 std::ostream& out) {
  const MatrixFile mf = load_matrix(path, o);
  const Matrix a = with_constants_row(mf.matrix);
  if (brute_force && a.cols() > kBruteForceLimit)
    throw ExitWith(kGuardExceeded, "--brute-force-check is limited to " + std::to_string(kBruteForceLimit) + " states");
  const SupportFamily family = enumerate_supports(a);

  Json doc = header("supports");
  doc["approximate"] = mf.approximate;
  doc["augmented"] = a.rows() != mf.matrix.rows();
  doc["states"] = a.cols();
  doc["count"] = family.sets.size();
  Json sets = Json::array();
  for (const auto& s : family.sets)
    sets.push_back(Json{{"states", indices_json(s.states)}, {"size", s.states.size()}, {"dimension", s.dimension}});
  doc["supports"] = std::move(sets);

  if (fvector) {
    const FVector f = f_vector(family);
    doc["s_vector"] = s_vector(family);
    doc["f_vector"] = Json{{"dimension", f.dimension}, {"counts", f.counts}};
    doc["neighborliness"] = neighborliness(family);
  }
  int code = kOk;
  if (brute_force) {
    const SupportFamily reference = brute_force_supports(a);
    const bool agrees = reference.members() == family.members();
    doc["brute_force_check"] = Json{{"agrees", agrees}, {"count", reference.sets.size()}};
    if (!agrees) code = kNotMember;
  }
  emit(doc, o, out);
  return code;
}

int cmd_member(const std::string& matrix_path, const std::string& dist_path, const std::string& q_path,
               const CommonOptions& o, std::ostream& out) {
  const MatrixFile mf = load_matrix(matrix_path, o);
  const std::size_t m = mf.matrix.cols();
  const Distribution p = parse_distribution(read_file(dist_path), mode_of(o), o.tol);
  if (p.size() != m)
    throw ExitWith(kDimensionMismatch, "distribution has " + std::to_string(p.size()) + " entries, matrix has " +
                                           std::to_string(m) + " columns");
  Vector q(m);
  if (q_path.empty()) {
    for (auto& v : q) v = 1;
  } else {
    q = parse_measure(read_file(q_path));
    if (q.size() != m)
      throw ExitWith(kDimensionMismatch, "reference measure has " + std::to_string(q.size()) + " entries, matrix has " +
                                             std::to_string(m) + " columns");
  }
  const ExponentialFamily family(mf.matrix, q);
  const ClosureVerdict verdict = in_closure(family, p, o.tol);

  Json doc = header("member");
  doc["approximate"] = mf.approximate;
  doc["mode"] = o.mode;
  doc["augmented"] = family.augmented();
  doc["member"] = verdict.member;
  doc["support"] = indices_json(p.support());
  doc["support_facial"] = is_facial(signed_circuits(family.matrix()), p.support());
  Json equations = Json::array();
  for (const auto& e : family.equations()) {
    Json lhs = Json::array(), rhs = Json::array();
    for (const auto& v : e.lhs_exponents) lhs.push_back(integer_json(v));
    for (const auto& v : e.rhs_exponents) rhs.push_back(integer_json(v));
    equations.push_back(Json{{"lhs_exponents", std::move(lhs)}, {"rhs_exponents", std::move(rhs)}});
  }
  doc["equations"] = std::move(equations);
  if (p.support() == IndexSet::full(m)) {
    doc["full_support_test"] = in_family_full_support(family, p, o.tol);
  } else {
    doc["full_support_test"] = nullptr;
  }
  Json violated = Json::array();
  for (const auto& r : verdict.violated) {
    Json v{{"circuit", circuit_json(r.circuit)}};
    if (p.is_exact()) {
      v["lhs"] = r.lhs.to_string();
      v["rhs"] = r.rhs.to_string();
    }
    v["lhs_value"] = r.lhs_value;
    v["rhs_value"] = r.rhs_value;
    v["relative_residual"] = r.relative_residual;
    violated.push_back(std::move(v));
  }
  doc["violated"] = std::move(violated);
  emit(doc, o, out);
  return verdict.member ? kOk : kNotMember;
}

struct GenerateOptions {
  std::string model;
  std::string alpha = "2";
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t m = 0;
  std::string t;
};

int cmd_generate(const GenerateOptions& g, const CommonOptions& o, std::ostream& out) {
  Matrix a;
  try {
    if (g.model == "example1") {
      a = example1_matrix(Rational::parse(g.alpha));
    } else if (g.model == "parity") {
      a = parity_model_matrix(g.n);
    } else if (g.model == "cyclic") {
      CyclicPolytopeSpec spec = CyclicPolytopeSpec::standard(g.d, g.n);
      if (!g.t.empty()) {
        spec.t.clear();
        std::stringstream ss(g.t);
        std::string item;
        while (std::getline(ss, item, ',')) spec.t.push_back(Rational::parse(item));
      }
      a = cyclic_matrix(spec);
    } else if (g.model == "moment") {
      a = moment_matrix(g.m);
    } else {
      throw ExitWith(kBadInput, "unknown model '" + g.model + "'");
    }
  } catch (const ParseError& e) {
    throw ExitWith(kBadInput, e.what());
  } catch (const std::invalid_argument& e) {
    throw ExitWith(kBadInput, e.what());
  }
  const std::string text = format_matrix(a);
  if (o.output.empty()) {
    out << text;
  } else {
    std::ofstream f(o.output, std::ios::binary);
    if (!f) throw InputError("cannot write '" + o.output + "'");
    f << text;
  }
  return kOk;
}

int cmd_dual(const std::string& path, const CommonOptions& o, std::ostream& out) {
  const MatrixFile mf = load_matrix(path, o);
  const Matrix& a = mf.matrix;
  const Matrix dual = orthogonal_complement_basis(a);
  const OrientedMatroid co = cocircuits(a);
  const bool matches = signed_circuits(dual) == co;

  Json doc = header("dual");
  doc["approximate"] = mf.approximate;
  doc["dual"] = matrix_json(dual);
  doc["cocircuit_count"] = co.circuits.size();
  Json cs = Json::array();
  for (const auto& x : co.circuits) cs.push_back(signed_json(x));
  doc["cocircuits"] = std::move(cs);
  doc["circuits_of_dual_match"] = matches;
  emit(doc, o, out);
  return matches ? kOk : kNotMember;
}

void add_common(CLI::App* sub, CommonOptions& o) {
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--mode", o.mode, "Arithmetic mode")->check(CLI::IsMember({"exact", "float"}));
  sub->add_option("--tol", o.tol, "Relative tolerance for float mode")->check(CLI::PositiveNumber);
  sub->add_option("--output", o.output, "Write the report to this path");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Oriented matroids, implicit equations and support sets of discrete exponential families", "omfam"};
  app.require_subcommand(1);
  CommonOptions common;

  std::string matrix_path, dist_path, q_path;
  bool brute_force = false, fvector = false;
  GenerateOptions gen;

  auto* circuits = app.add_subcommand("circuits", "Circuits and signed circuits of a matrix");
  circuits->add_option("matrix", matrix_path, "Matrix file")->required();
  add_common(circuits, common);

  auto* supports = app.add_subcommand("supports", "All possible support sets");
  supports->add_option("matrix", matrix_path, "Matrix file")->required();
  supports->add_flag("--brute-force-check", brute_force, "Cross-check against a scan of all subsets");
  supports->add_flag("--fvector", fvector, "Add s-vector, f-vector and neighborliness");
  add_common(supports, common);

  auto* member = app.add_subcommand("member", "Closure membership of a distribution");
  member->add_option("matrix", matrix_path, "Matrix file")->required();
  member->add_option("distribution", dist_path, "Distribution file")->required();
  member->add_option("--q", q_path, "Reference measure file");
  add_common(member, common);

  auto* generate = app.add_subcommand("generate", "Emit a model matrix file");
  generate->add_option("model", gen.model, "example1 | parity | cyclic | moment")->required();
  generate->add_option("--alpha", gen.alpha, "example1 parameter");
  generate->add_option("--n", gen.n, "parity: variables; cyclic: vertices");
  generate->add_option("--d", gen.d, "cyclic: dimension");
  generate->add_option("--m", gen.m, "moment: states");
  generate->add_option("--t", gen.t, "cyclic: comma-separated curve parameters");
  add_common(generate, common);

  auto* dual = app.add_subcommand("dual", "Gale dual and cocircuits");
  dual->add_option("matrix", matrix_path, "Matrix file")->required();
  add_common(dual, common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }

  try {
    if (circuits->parsed()) return cmd_circuits(matrix_path, common, out);
    if (supports->parsed()) return cmd_supports(matrix_path, brute_force, fvector, common, out);
    if (member->parsed()) return cmd_member(matrix_path, dist_path, q_path, common, out);
    if (generate->parsed()) return cmd_generate(gen, common, out);
    if (dual->parsed()) return cmd_dual(matrix_path, common, out);
  } catch (const ExitWith& e) {
    err << "error: " << e.what() << '\n';
    return e.code();
  } catch (const IrrationalInput& e) {
    err << "error: " << e.what() << '\n';
    return kIrrationalInExactMode;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace omfam::cli
