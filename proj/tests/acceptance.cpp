/**
 * Acceptance harness: one PASS/FAIL line per criterion, nonzero exit on any
 * failure. Expected dimensions were fixed beforehand by an independent
 * symbolic computation and are frozen here.
 */
#include "kvlab/algebra_io.hpp"
#include "kvlab/catalog.hpp"
#include "kvlab/cochain_complex.hpp"
#include "kvlab/cohomology.hpp"
#include "kvlab/deformation.hpp"
#include "kvlab/printed_systems.hpp"
#include "kvlab/random.hpp"
#include "kvlab/verifier.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace kvlab;
namespace fs = std::filesystem;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::string str(std::size_t n) { return std::to_string(n); }

/** Plain Gaussian elimination, deliberately not shared with the library. */
std::size_t oracle_rank(std::vector<RatVector> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

/** Rows of the operator f -> coboundary_explicit(f) evaluated on basis tuples. */
std::vector<RatVector> explicit_rows(const KvAlgebra& alg, std::size_t q) {
  const std::size_t n = alg.dim();
  const std::size_t cols = int_pow(n, q + 1);
  const std::size_t out = int_pow(n, q + 2);
  std::vector<RatVector> rows(out, RatVector(cols));
  for (std::size_t c = 0; c < cols; ++c) {
    const Cochain image = coboundary_explicit(alg, Cochain::basis(q, n, c));
    for (const auto& t : index_tuples(n, q + 1))
      for (std::size_t k = 0; k < n; ++k) rows[image.flat_index(t, k)][c] = image.value_on_basis(t)[k];
  }
  return rows;
}

std::vector<RatVector> transpose_rows(const std::vector<RatVector>& rows) {
  std::vector<RatVector> out(rows.front().size(), RatVector(rows.size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) out[c][r] = rows[r][c];
  return out;
}

const ClaimReport* find_claim(const std::vector<ClaimReport>& claims, const std::string& id) {
  for (const auto& c : claims)
    if (c.claim == id) return &c;
  return nullptr;
}

RatVector random_member(RationalSampler& s, const LinearSubspace& space) {
  RatVector v(space.ambient_dim());
  for (const auto& b : space.basis_vectors()) {
    const Rational c = s.rational();
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * b[i];
  }
  return v;
}

/** One verifier run shared by the criteria that inspect its reports. */
const VerificationRun& shared_run() {
  static const VerificationRun run = [] {
    VerifierConfig cfg;
    cfg.random_algebras = 10;
    return run_all(cfg);
  }();
  return run;
}

const std::vector<std::pair<Rational, Rational>> kFixtureParams = {
    {1, 2}, {1, -1}, {2, 1}, {Rational(1, 2), 3}, {-3, 5}};

Outcome criterion1() {
  Outcome o;
  for (const auto& [a, b] : std::vector<std::pair<Rational, Rational>>{{1, 2}, {1, -1}}) {
    const KvAlgebra f = hessian_fixture(a, b);
    o.require(is_kv(f), "fixture not KV at a=" + to_string(a) + ", b=" + to_string(b));
    const Cochain anomaly = kv_anomaly_tensor(f);
    std::size_t checked = 0;
    for (const auto& t : index_tuples(2, 3)) {
      ++checked;
      o.require(is_zero(anomaly.value_on_basis(t)), "nonzero anomaly on a basis triple");
    }
    o.require(checked == 8, "expected 8 basis triples");
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  const CohomologyResult h = cohomology(hessian_fixture(1, 2), 0);
  o.require(h.dim_h == 2, "dim H0 = " + str(h.dim_h));
  return o;
}

Outcome criterion3() {
  Outcome o;
  const KvAlgebra f = hessian_fixture(1, 2);
  const CohomologyResult h = cohomology(f, 1);
  o.require(h.dim_h == 0, "dim H1 = " + str(h.dim_h));
  o.require(kernel(f, 1).dim() == 0, "Ker delta1 is not zero");
  return o;
}

Outcome criterion4() {
  Outcome o;
  const KvAlgebra f = hessian_fixture(1, 2);
  // Independent elimination on the 16 x 8 system of delta2 on basis triples.
  const auto d2 = explicit_rows(f, 2);
  const auto d1 = explicit_rows(f, 1);
  const std::size_t oracle_ker = 8 - oracle_rank(d2);
  const std::size_t oracle_im = oracle_rank(d1);
  // Im delta1 lies in Ker delta2 iff d2 * d1 = 0: rank of the stacked image
  // columns together with the kernel test.
  std::size_t oracle_inter = 0;
  {
    std::vector<RatVector> cols = transpose_rows(d1);  // images of basis 1-cochains
    std::vector<RatVector> in_kernel;
    for (const auto& c : cols) {
      RatVector img(16);
      for (std::size_t r = 0; r < 16; ++r)
        for (std::size_t k = 0; k < 8; ++k) img[r] += d2[r][k] * c[k];
      if (is_zero(img)) in_kernel.push_back(c);
    }
    oracle_inter = oracle_rank(in_kernel);
  }
  o.require(oracle_ker == 4 && oracle_im == 4 && oracle_inter == 4, "oracle dims differ from the frozen values");

  const CohomologyResult h = cohomology(f, 2);
  o.require(h.dim_ker == oracle_ker, "dim_ker " + str(h.dim_ker) + " vs oracle " + str(oracle_ker));
  o.require(h.dim_im_prev == oracle_im, "dim_im_prev " + str(h.dim_im_prev) + " vs oracle " + str(oracle_im));
  o.require(h.inclusion_holds == (oracle_inter == oracle_im), "inclusion flag disagrees with oracle");
  o.require(h.dim_h == h.dim_ker - h.dim_intersection, "dim_h bookkeeping");
  o.require(h.dim_h == oracle_ker - oracle_inter, "dim_h disagrees with oracle");
  for (const auto& rep : h.representatives) o.require(coboundary(f, rep).is_zero(), "representative not a cocycle");

  const auto& run = shared_run();
  const ClaimReport* r = find_claim(run.claims, "C11");
  o.require(r != nullptr, "no H2 report");
  if (r) {
    o.require(r->computed["dim_h"] == str(h.dim_h), "report does not record the computed dim_h");
    o.require(r->printed["dim_h"] == "3", "report does not record the claimed dim_h");
    const bool agree = h.dim_h == 3;
    o.require((r->status == ClaimStatus::Confirmed) == agree, "status does not follow the exact comparison");
    if (!agree) o.require(r->witness.is_object(), "refuted H2 report without witness");
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::vector<KvAlgebra> algebras;
  for (const auto& e : catalog()) algebras.push_back(e.algebra);
  RationalSampler s(505);
  for (int i = 0; i < 100; ++i) algebras.push_back(s.algebra(2));
  std::size_t mismatches = 0, checks = 0;
  for (const auto& alg : algebras) {
    for (const auto& xi : jspace(alg).basis_vectors()) {
      const Cochain c(0, 2, xi);
      ++checks;
      if (coboundary(alg, c) != coboundary_explicit(alg, c)) ++mismatches;
    }
    for (std::size_t q = 1; q <= 2; ++q)
      for (std::size_t flat = 0; flat < int_pow(2, q + 1); ++flat) {
        const Cochain c = Cochain::basis(q, 2, flat);
        ++checks;
        if (coboundary(alg, c) != coboundary_explicit(alg, c)) ++mismatches;
      }
  }
  o.require(mismatches == 0, str(mismatches) + " mismatches in " + str(checks) + " checks");
  o.detail = o.pass ? str(checks) + " checks" : o.detail;
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::string failures;
  for (const auto& e : catalog()) {
    if (e.class_id != 4) continue;
    const RatMatrix d0 = coboundary_matrix(e.algebra, 0);
    const RatMatrix d1 = coboundary_matrix(e.algebra, 1);
    const RatMatrix d2 = coboundary_matrix(e.algebra, 2);
    const bool ok10 = (d1 * d0).is_zero();
    const bool ok21 = (d2 * d1).is_zero();
    if (!ok10 || !ok21) {
      failures += " 4." + std::to_string(e.family_index) + (ok10 ? "" : " d1*d0!=0") + (ok21 ? "" : " d2*d1!=0") +
                  (is_kv(e.algebra) ? "" : " (not KV)");
    }
  }
  o.require(failures.empty(), "nonzero products:" + failures);
  return o;
}

Outcome criterion7() {
  Outcome o;
  RationalSampler s(707);
  std::vector<KvAlgebra> bases;
  for (const auto& [a, b] : kFixtureParams) bases.push_back(hessian_fixture(a, b));
  for (int i = 0; i < 20; ++i) {
    const auto kv = s.kv_algebra(2);
    o.require(kv.has_value(), "rejection sampling found no KV algebra");
    if (kv) bases.push_back(*kv);
  }
  std::size_t checks = 0;
  for (const auto& mu : bases)
    for (int i = 0; i < 100; ++i) {
      const Cochain nu = s.cochain(2, mu.dim());
      ++checks;
      o.require(linear_obstruction(mu, nu) == coboundary(mu, nu), "d_mu nu differs from delta2 nu");
    }
  if (o.pass) o.detail = str(checks) + " checks";
  return o;
}

Outcome criterion8() {
  Outcome o;
  RationalSampler s(808);
  const KvAlgebra f = hessian_fixture(1, 2);
  const LinearSubspace space = deformation_space(f);
  for (int i = 0; i < 50; ++i) {
    const Cochain nu(2, 2, random_member(s, space));
    o.require(anomaly_expansion(TruncatedDeformation(f, {nu})).at(1).is_zero(), "cocycle with nonzero t^1 term");
  }
  int outside = 0;
  while (outside < 50) {
    const Cochain nu = s.cochain(2, 2);
    if (space.contains(nu.coeffs())) continue;
    ++outside;
    o.require(!anomaly_expansion(TruncatedDeformation(f, {nu})).at(1).is_zero(), "non-cocycle with zero t^1 term");
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  RationalSampler s(909);
  const KvAlgebra f = hessian_fixture(1, 2);
  const std::size_t m = 5;  // powers 0..4
  for (int rep = 0; rep < 20; ++rep) {
    const TruncatedDeformation def(f, {s.cochain(2, 2), s.cochain(2, 2)});
    const AnomalyExpansion e = anomaly_expansion(def);
    o.require(e.coefficients.size() == m, "expansion of an order-2 deformation must have 5 coefficients");
    if (!o.pass) break;
    std::vector<Cochain> samples;
    for (std::size_t t = 1; t <= m; ++t) samples.push_back(kv_anomaly_tensor(evaluate_at(def, Rational(t))));
    const std::size_t len = samples.front().coeffs().size();
    // Solve V c = y for every coordinate at once by Gauss-Jordan on [V | Y].
    std::vector<RatVector> aug(m, RatVector(m + len));
    for (std::size_t r = 0; r < m; ++r) {
      Rational p = 1;
      for (std::size_t c = 0; c < m; ++c, p *= Rational(r + 1)) aug[r][c] = p;
      for (std::size_t k = 0; k < len; ++k) aug[r][m + k] = samples[r].coeffs()[k];
    }
    for (std::size_t c = 0; c < m; ++c) {
      const Rational piv = aug[c][c];
      for (auto& x : aug[c]) x /= piv;
      for (std::size_t r = 0; r < m; ++r) {
        if (r == c || aug[r][c] == 0) continue;
        const Rational factor = aug[r][c];
        for (std::size_t k = 0; k < m + len; ++k) aug[r][k] -= factor * aug[c][k];
      }
    }
    for (std::size_t p = 0; p < m; ++p) {
      const RatVector recovered(aug[p].begin() + m, aug[p].end());
      o.require(recovered == e.at(p).coeffs(), "coefficient t^" + str(p) + " differs from interpolation");
    }
  }
  return o;
}

Outcome criterion10() {
  Outcome o;
  const ClaimReport r = verify_family(1, 2);
  o.require(r.computed["dim_deformation_space"] == "4", "deformation space dimension differs from the oracle (4)");
  o.require(r.printed["dim_family"] == "5", "family span dimension differs from the oracle (5)");
  const bool equal = r.computed["family_within_space"] == true && r.computed["space_within_family"] == true;
  o.require((r.status == ClaimStatus::Confirmed) == equal, "status does not follow the subspace comparison");
  if (r.status != ClaimStatus::Confirmed) {
    o.require(r.witness.is_object(), "no witness");
    if (r.witness.is_object()) {
      const RatVector nu = rat_vector_from_json(r.witness["nu"]["coeffs"]);
      const RatVector res = coboundary_matrix(hessian_fixture(1, 2), 2).apply(nu);
      o.require(!is_zero(res) && to_json(res) == r.witness["delta2_residual"], "witness residual does not re-verify");
    }
  }
  o.detail = std::string("status ") + std::string(to_string(r.status));
  return o;
}

Outcome criterion11() {
  Outcome o;
  const auto entries = catalog();
  o.require(entries.size() == 36, "catalog has " + str(entries.size()) + " entries");
  for (const auto& e : entries) {
    (void)is_kv(e.algebra);
    (void)classify(e.algebra);
    (void)is_hessian(e.algebra);
  }
  const auto& run = shared_run();
  std::size_t refuted = 0;
  for (const auto& e : entries) {
    const std::string id = "C1." + std::to_string(e.class_id) + "." + std::to_string(e.family_index);
    const ClaimReport* r = find_claim(run.claims, id);
    o.require(r != nullptr, "no report for " + id);
    if (!r) continue;
    if (is_kv(e.algebra)) continue;
    ++refuted;
    o.require(r->status == ClaimStatus::Refuted, id + " is not KV but not refuted");
    const Json& w = r->witness;
    o.require(w.is_object() && w.contains("anomaly"), id + " has no anomaly witness");
    if (!w.is_object() || !w.contains("anomaly")) continue;
    const Cochain a = kv_anomaly_tensor(e.algebra);
    const std::size_t i = std::stoul(w["arguments"][0].get<std::string>()) - 1;
    const std::size_t j = std::stoul(w["arguments"][1].get<std::string>()) - 1;
    const std::size_t l = std::stoul(w["arguments"][2].get<std::string>()) - 1;
    const std::size_t k = std::stoul(w["component"].get<std::string>()) - 1;
    const Rational value = parse_rational(w["anomaly"].get<std::string>());
    o.require(value != 0 && a.at({i, j, l}, k) == value, id + " witness component does not match");
  }
  o.detail = str(refuted) + " families refuted with witnesses";
  if (!o.pass) o.detail = "see failure";
  return o;
}

/** Re-evaluates both residuals of a system witness without the verifier's code path. */
bool reverify(const KvAlgebra& alg, const PrintedSystem& sys, const Json& w) {
  const RatMatrix p = instantiate(sys, alg);
  RatVector printed, structural;
  if (sys.kind == PrintedSystem::Kind::Condition) {
    printed = p.column(0);
    const Cochain a = kv_anomaly_tensor(alg);
    for (auto c : sys.row_coords) structural.push_back(a.coeffs()[c]);
  } else {
    const RatVector x = rat_vector_from_json(w["x"]);
    printed = p.apply(x);
    const RatMatrix full = sys.degree == 0 ? unrestricted_delta0_matrix(alg)
                                           : RatMatrix::from_columns(
                                                 [&] {
                                                   std::vector<RatVector> cols;
                                                   for (std::size_t c = 0; c < x.size(); ++c)
                                                     cols.push_back(coboundary_explicit(
                                                                        alg, Cochain::basis(sys.degree, 2, c))
                                                                        .coeffs());
                                                   return cols;
                                                 }(),
                                                 int_pow(2, sys.degree + 2));
    const RatVector img = full.apply(x);
    for (auto c : sys.row_coords) structural.push_back(img[c]);
  }
  return printed != structural && to_json(printed) == w["printed_residual"] &&
         to_json(structural) == w["structural_residual"];
}

Outcome criterion12() {
  Outcome o;
  const KvAlgebra f = hessian_fixture(1, 2);
  std::size_t witnesses = 0;
  for (const auto& sys : printed_systems()) {
    const ClaimReport r = audit_system(f, sys);
    if (sys.kind == PrintedSystem::Kind::Condition) {
      o.require(r.computed.contains("values") && r.printed.contains("values"), sys.id + " lacks condition values");
    } else {
      o.require(r.computed.contains("rank") && r.printed.contains("rank"), sys.id + " lacks ranks");
      const bool compared = r.printed.contains("solution_sets_equal") || r.printed.contains("images_equal");
      o.require(compared, sys.id + " lacks a solution-space comparison");
    }
    if (r.status == ClaimStatus::Confirmed) continue;
    ++witnesses;
    o.require(r.witness.is_object(), sys.id + " has no witness");
    if (!r.witness.is_object()) continue;
    o.require(r.witness["gamma"] == gamma_json(f), sys.id + " witness names another algebra");
    o.require(reverify(f, sys, r.witness), sys.id + " witness does not re-verify");
    o.require(witness_reverifies(r), sys.id + " witness rejected by the library check");
  }
  if (o.pass) o.detail = str(witnesses) + " discrepancies with re-verified witnesses";
  return o;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Outcome criterion13() {
  Outcome o;
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(KVLAB_FIXTURE_DIR)) {
    if (entry.path().extension() != ".json") continue;
    ++files;
    const KvAlgebra a = parse_algebra_file(entry.path());
    const KvAlgebra b = parse_algebra(serialize_algebra(a));
    o.require(a == b, "round trip changed " + entry.path().filename().string());
    o.require(serialize_algebra(b) == serialize_algebra(a), "serialization unstable for " + entry.path().string());
  }
  o.require(files >= 20, "only " + str(files) + " fixture files");

  const fs::path dir = fs::temp_directory_path() / "kvlab_acceptance";
  fs::create_directories(dir);
  std::vector<std::string> outputs;
  for (int run = 0; run < 2; ++run) {
    const fs::path out = dir / ("report" + std::to_string(run) + ".json");
    fs::remove(out);
    const std::string cmd = std::string("\"") + KVLAB_CLI_PATH + "\" verify-paper --json \"" + out.string() +
                            "\" > \"" + (dir / "stdout.txt").string() + "\"";
    const int rc = std::system(cmd.c_str());
    o.require(rc == 0, "verify-paper exited with " + std::to_string(rc));
    outputs.push_back(read_file(out));
  }
  o.require(!outputs[0].empty() && outputs[0] == outputs[1], "verify-paper --json output differs between runs");
  if (o.pass) o.detail = str(files) + " fixtures; " + str(outputs[0].size()) + " identical bytes";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Hessian fixture validity", criterion1},
      {"H0 of the Hessian fixture", criterion2},
      {"H1 of the Hessian fixture", criterion3},
      {"H2 audit against elimination oracle", criterion4},
      {"general vs explicit coboundary", criterion5},
      {"nilpotency on class-4 catalog entries", criterion6},
      {"linearized anomaly equals delta2", criterion7},
      {"first-order deformation condition", criterion8},
      {"expansion vs interpolation", criterion9},
      {"deformation family audit", criterion10},
      {"catalog sweep", criterion11},
      {"printed-system audits", criterion12},
      {"CLI round trip and determinism", criterion13},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << (i + 1) << ": " << criteria[i].first;
    if (!o.detail.empty()) std::cout << " -- " << o.detail;
    std::cout << " [" << ms << " ms]\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
