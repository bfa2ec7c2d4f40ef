#include "kvlab/algebra_io.hpp"
#include "kvlab/catalog.hpp"
#include "kvlab/cochain_complex.hpp"
#include "kvlab/cohomology.hpp"
#include "kvlab/deformation.hpp"
#include "kvlab/errors.hpp"
#include "kvlab/verifier.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace kvlab;

constexpr int kExitInput = 2;
constexpr int kExitInvariant = 4;

struct Options {
  std::string format = "text";
  std::string input;
  std::size_t max_degree = 2;
  std::size_t order = 0;
  std::vector<std::string> directions;
  std::string a = "1";
  std::string b = "2";
  bool strict = false;
  std::string json_out;
};

std::string vec_text(const RatVector& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << to_string(v[i]);
  os << ")";
  return os.str();
}

void emit(const Options& opt, const Json& doc, const std::string& text) {
  if (opt.format == "json") std::cout << doc.dump(2) << "\n";
  else std::cout << text;
}

Json nonzero_anomalies(const KvAlgebra& alg) {
  const Cochain a = kv_anomaly_tensor(alg);
  Json out = Json::array();
  for (const auto& t : index_tuples(alg.dim(), 3))
    for (std::size_t k = 0; k < alg.dim(); ++k)
      if (a.at(t, k) != 0)
        out.push_back(Json{{"arguments", Json::array({count_json(t[0] + 1), count_json(t[1] + 1), count_json(t[2] + 1)})},
                           {"component", count_json(k + 1)},
                           {"value", to_string(a.at(t, k))}});
  return out;
}

int cmd_check(const Options& opt) {
  const KvAlgebra alg = parse_algebra_file(opt.input);
  const bool kv = is_kv(alg);
  Json doc{{"kv", kv}, {"anomalies", nonzero_anomalies(alg)}};
  std::ostringstream os;
  os << "KV: " << (kv ? "true" : "false") << "\n";
  if (alg.dim() == 2) {
    const auto r = kv_condition_residual(alg);
    const RatVector v(r.begin(), r.end());
    doc["condition_residual"] = to_json(v);
    os << "condition residual: " << vec_text(v) << "\n";
  }
  for (const auto& w : doc["anomalies"]) {
    os << "anomaly at (e" << w["arguments"][0].get<std::string>() << ", e" << w["arguments"][1].get<std::string>()
       << ", e" << w["arguments"][2].get<std::string>() << ") component " << w["component"].get<std::string>()
       << ": " << w["value"].get<std::string>() << "\n";
  }
  emit(opt, doc, os.str());
  return 0;
}

int cmd_classify(const Options& opt) {
  const KvAlgebra alg = parse_algebra_file(opt.input);
  const auto cls = classify(alg);
  const std::string label = cls ? std::to_string(*cls) : "not-KV";
  Json doc{{"class", label},
           {"kv", cls.has_value()},
           {"symmetric", is_symmetric(alg)},
           {"nondegenerate", is_nondegenerate(alg)},
           {"hessian", is_hessian(alg)}};
  std::ostringstream os;
  os << "class: " << label;
  if (cls) os << " (" << class_description(*cls) << ")";
  os << "\nsymmetric: " << (is_symmetric(alg) ? "true" : "false")
     << "\nnondegenerate: " << (is_nondegenerate(alg) ? "true" : "false")
     << "\nhessian: " << (is_hessian(alg) ? "true" : "false") << "\n";
  emit(opt, doc, os.str());
  return 0;
}

int cmd_jspace(const Options& opt) {
  const KvAlgebra alg = parse_algebra_file(opt.input);
  const LinearSubspace j = jspace(alg);
  std::ostringstream os;
  os << "dim J: " << j.dim() << "\n";
  for (const auto& v : j.basis_vectors()) os << "  " << vec_text(v) << "\n";
  emit(opt, to_json(j), os.str());
  return 0;
}

int cmd_cohomology(const Options& opt) {
  const KvAlgebra alg = parse_algebra_file(opt.input);
  Json doc = Json::array();
  std::ostringstream os;
  for (std::size_t q = 0; q <= opt.max_degree; ++q) {
    const CohomologyResult h = cohomology(alg, q);
    Json reps = Json::array();
    for (const auto& c : h.representatives) reps.push_back(to_json(c));
    doc.push_back(Json{{"q", count_json(q)},
                       {"dim_ker", count_json(h.dim_ker)},
                       {"dim_im_prev", count_json(h.dim_im_prev)},
                       {"inclusion_holds", h.inclusion_holds},
                       {"dim_intersection", count_json(h.dim_intersection)},
                       {"dim_h", count_json(h.dim_h)},
                       {"representatives", reps}});
    os << "H^" << q << ": dim " << h.dim_h << "  (ker " << h.dim_ker << ", im_prev " << h.dim_im_prev
       << ", intersection " << h.dim_intersection << ", inclusion " << (h.inclusion_holds ? "holds" : "fails")
       << ")\n";
    for (const auto& c : h.representatives) os << "  representative " << vec_text(c.coeffs()) << "\n";
  }
  emit(opt, doc, os.str());
  return 0;
}

int cmd_deform(const Options& opt) {
  const KvAlgebra base = parse_algebra_file(opt.input);
  std::vector<Cochain> dirs;
  for (const auto& path : opt.directions) {
    const KvAlgebra d = parse_algebra_file(path);
    if (d.dim() != base.dim()) throw DimensionError("direction " + path + " has the wrong dimension");
    dirs.push_back(d.as_cochain());
  }
  const std::size_t order = opt.order == 0 ? dirs.size() : opt.order;
  if (dirs.size() == 1 && order > 1) dirs.assign(order, dirs.front());
  if (dirs.size() != order) throw DimensionError("--order must match the number of --direction files (or give one)");
  const TruncatedDeformation def(base, dirs);
  const AnomalyExpansion e = anomaly_expansion(def);

  Json coeffs = Json::array();
  std::ostringstream os;
  for (std::size_t p = 0; p <= e.max_power(); ++p) {
    coeffs.push_back(Json{{"power", count_json(p)}, {"zero", e.at(p).is_zero()}, {"coefficient", to_json(e.at(p))}});
    os << "t^" << p << ": " << (e.at(p).is_zero() ? "zero" : "nonzero " + vec_text(e.at(p).coeffs())) << "\n";
  }
  Json doc{{"order", count_json(order)}, {"coefficients", coeffs}};
  if (order >= 1 && is_kv(base)) {
    const bool cocycle = deformation_space(base).contains(dirs.front().coeffs());
    doc["first_order_kv"] = cocycle;
    os << "first order: " << (cocycle ? "KV (direction is a 2-cocycle)" : "not KV") << "\n";
  }
  emit(opt, doc, os.str());
  return 0;
}

int cmd_catalog(const Options& opt) {
  Json doc = Json::array();
  std::ostringstream os;
  for (const auto& e : catalog()) {
    Json params = Json::object();
    for (const auto& [name, value] : e.parameters) params[name] = to_string(value);
    const auto cls = classify(e.algebra);
    doc.push_back(Json{{"class", count_json(static_cast<std::size_t>(e.class_id))},
                       {"family", count_json(static_cast<std::size_t>(e.family_index))},
                       {"parameters", params},
                       {"algebra", algebra_to_json(e.algebra)},
                       {"kv", cls.has_value()},
                       {"computed_class", cls ? std::to_string(*cls) : "not-KV"}});
    os << e.class_id << "." << e.family_index << "  G1=" << vec_text({e.algebra.gamma(0, 0, 0), e.algebra.gamma(0, 1, 0), e.algebra.gamma(1, 0, 0), e.algebra.gamma(1, 1, 0)})
       << " G2=" << vec_text({e.algebra.gamma(0, 0, 1), e.algebra.gamma(0, 1, 1), e.algebra.gamma(1, 0, 1), e.algebra.gamma(1, 1, 1)})
       << "  computed class " << (cls ? std::to_string(*cls) : "not-KV") << "\n";
  }
  emit(opt, doc, os.str());
  return 0;
}

int cmd_verify(const Options& opt) {
  VerifierConfig config;
  config.a = parse_rational(opt.a);
  config.b = parse_rational(opt.b);
  const VerificationRun run = run_all(config);
  if (!opt.json_out.empty()) {
    std::ofstream out(opt.json_out, std::ios::binary);
    if (!out) throw ParseError("cannot write " + opt.json_out);
    out << render_json(run.claims);
  }
  if (opt.format == "json" && opt.json_out.empty()) std::cout << render_json(run.claims);
  else std::cout << render_text(run.claims);
  for (const auto& f : run.invariant_failures) std::cerr << "invariant violation: " << f << "\n";
  if (opt.strict && !run.invariant_failures.empty()) return kExitInvariant;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact KV-algebra cohomology and deformation toolkit"};
  app.require_subcommand(1, 1);
  Options opt;
  app.add_option("--format", opt.format, "Output format for standard output")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  auto* check = app.add_subcommand("check", "Test the KV identity and print anomaly witnesses");
  check->add_option("file", opt.input, "Algebra JSON file")->required();
  auto* classify_cmd = app.add_subcommand("classify", "Class label and predicate flags (dimension 2)");
  classify_cmd->add_option("file", opt.input, "Algebra JSON file")->required();
  auto* jspace_cmd = app.add_subcommand("jspace", "Basis of J(A)");
  jspace_cmd->add_option("file", opt.input, "Algebra JSON file")->required();
  auto* coh = app.add_subcommand("cohomology", "KV cohomology in degrees 0..max-degree");
  coh->add_option("file", opt.input, "Algebra JSON file")->required();
  coh->add_option("--max-degree", opt.max_degree, "Highest degree q")->capture_default_str();
  auto* deform = app.add_subcommand("deform", "Anomaly expansion of a truncated deformation");
  deform->add_option("file", opt.input, "Base algebra JSON file")->required();
  deform->add_option("--order", opt.order, "Truncation order (defaults to the number of directions)");
  deform->add_option("--direction", opt.directions, "Direction files in algebra format, one per order")->required();
  auto* cat = app.add_subcommand("catalog", "All printed families at default parameters");
  auto* verify = app.add_subcommand("verify-paper", "Audit every published claim");
  verify->add_option("--a", opt.a, "Parameter a of the Hessian fixture (p/q)")->capture_default_str();
  verify->add_option("--b", opt.b, "Parameter b of the Hessian fixture (p/q)")->capture_default_str();
  verify->add_flag("--strict", opt.strict, "Exit 4 if an internal invariant fails");
  verify->add_option("--json", opt.json_out, "Write the JSON report to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*check) return cmd_check(opt);
    if (*classify_cmd) return cmd_classify(opt);
    if (*jspace_cmd) return cmd_jspace(opt);
    if (*coh) return cmd_cohomology(opt);
    if (*deform) return cmd_deform(opt);
    if (*cat) return cmd_catalog(opt);
    if (*verify) return cmd_verify(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
