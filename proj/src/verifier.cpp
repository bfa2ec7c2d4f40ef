#include "kvlab/verifier.hpp"

#include "kvlab/algebra_io.hpp"
#include "kvlab/catalog.hpp"
#include "kvlab/cochain_complex.hpp"
#include "kvlab/cohomology.hpp"
#include "kvlab/deformation.hpp"
#include "kvlab/errors.hpp"
#include "kvlab/random.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

namespace kvlab {

namespace {

using Kind = PrintedSystem::Kind;

RatMatrix select_rows(const RatMatrix& m, const std::vector<std::size_t>& rows) {
  RatMatrix out(rows.size(), m.cols());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(rows[r], c);
  return out;
}

// Full structural matrix of the operator a Kernel/Image system transcribes.
RatMatrix structural_operator(const KvAlgebra& alg, const PrintedSystem& sys) {
  return sys.degree == 0 ? unrestricted_delta0_matrix(alg)
                         : coboundary_matrix(alg, static_cast<std::size_t>(sys.degree));
}

RatVector structural_condition(const KvAlgebra& alg, const PrintedSystem& sys) {
  const Cochain anomaly = kv_anomaly_tensor(alg);
  RatVector out;
  for (auto c : sys.row_coords) out.push_back(anomaly.coeffs()[c]);
  return out;
}

// Domain of the operator as columns: J(A) for degree 0, everything otherwise.
LinearSubspace domain_space(const KvAlgebra& alg, const PrintedSystem& sys) {
  return sys.degree == 0 ? jspace(alg) : LinearSubspace::full(sys.unknowns.size());
}

Json assignment_json(const PrintedSystem& sys, const RatVector& x) {
  Json out = Json::object();
  for (std::size_t u = 0; u < sys.unknowns.size(); ++u) out[sys.unknowns[u]] = to_string(x[sys.unknown_coords[u]]);
  return out;
}

std::vector<std::size_t> mismatched_rows(const RatMatrix& p, const RatMatrix& s) {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < p.rows(); ++r)
    if (p.row(r) != s.row(r)) out.push_back(r);
  return out;
}

Json one_based(const std::vector<std::size_t>& rows) {
  Json out = Json::array();
  for (auto r : rows) out.push_back(count_json(r + 1));
  return out;
}

Json system_witness(const KvAlgebra& alg, const PrintedSystem& sys, const RatVector& x, const RatMatrix& p,
                    const RatMatrix& s, const std::string& kind) {
  return Json{{"system", sys.id},
              {"kind", kind},
              {"gamma", gamma_json(alg)},
              {"x", to_json(x)},
              {"assignment", assignment_json(sys, x)},
              {"printed_residual", to_json(p.apply(x))},
              {"structural_residual", to_json(s.apply(x))}};
}

ClaimReport audit_condition(const KvAlgebra& alg, const PrintedSystem& sys, ClaimReport r) {
  const RatMatrix p = instantiate(sys, alg);
  const RatVector printed = p.column(0);
  const RatVector structural = structural_condition(alg, sys);
  const bool printed_zero = is_zero(printed);
  const bool structural_zero = is_zero(structural);
  r.computed = Json{{"values", to_json(structural)}, {"kv", structural_zero}};
  r.printed = Json{{"values", to_json(printed)}, {"kv", printed_zero}};
  if (printed == structural) {
    r.status = ClaimStatus::Confirmed;
    return r;
  }
  r.status = printed_zero == structural_zero ? ClaimStatus::Partial : ClaimStatus::Refuted;
  r.witness = Json{{"system", sys.id},
                   {"kind", "condition values differ"},
                   {"gamma", gamma_json(alg)},
                   {"printed_residual", to_json(printed)},
                   {"structural_residual", to_json(structural)}};
  return r;
}

ClaimReport audit_kernel(const KvAlgebra& alg, const PrintedSystem& sys, ClaimReport r) {
  const RatMatrix p = instantiate(sys, alg);
  const RatMatrix full = structural_operator(alg, sys);
  const RatMatrix s = select_rows(full, sys.row_coords);
  const LinearSubspace domain = domain_space(alg, sys);
  const LinearSubspace printed_sol = intersect(nullspace(p), domain);
  const LinearSubspace structural_sol = intersect(nullspace(full), domain);
  const auto mismatches = mismatched_rows(p, s);
  r.computed = Json{{"rank", count_json(rank(s))},
                    {"solution_dim", count_json(structural_sol.dim())},
                    {"solutions", to_json(structural_sol)},
                    {"rows", to_json(s)}};
  r.printed = Json{{"rank", count_json(rank(p))},
                   {"solution_dim", count_json(printed_sol.dim())},
                   {"solutions", to_json(printed_sol)},
                   {"rows", to_json(p)},
                   {"mismatched_rows", one_based(mismatches)},
                   {"solution_sets_equal", printed_sol == structural_sol}};
  if (printed_sol == structural_sol && mismatches.empty()) {
    r.status = ClaimStatus::Confirmed;
    return r;
  }
  if (printed_sol == structural_sol) {
    r.status = ClaimStatus::Partial;
    const std::size_t row = mismatches.front();
    for (std::size_t c = 0; c < p.cols(); ++c) {
      if (p(row, c) == s(row, c)) continue;
      RatVector x(p.cols());
      x[c] = 1;
      r.witness = system_witness(alg, sys, x, p, s, "row coefficients differ; solution sets agree on this algebra");
      r.witness["row"] = count_json(row + 1);
      break;
    }
    return r;
  }
  r.status = ClaimStatus::Refuted;
  for (const auto& x : printed_sol.basis_vectors()) {
    if (structural_sol.contains(x)) continue;
    r.witness = system_witness(alg, sys, x, p, s, "solves the printed system only");
    return r;
  }
  for (const auto& x : structural_sol.basis_vectors()) {
    if (printed_sol.contains(x)) continue;
    r.witness = system_witness(alg, sys, x, p, s, "solves the structural system only");
    return r;
  }
  return r;
}

ClaimReport audit_image(const KvAlgebra& alg, const PrintedSystem& sys, ClaimReport r) {
  const RatMatrix p = instantiate(sys, alg);
  const RatMatrix s = select_rows(structural_operator(alg, sys), sys.row_coords);
  const auto domain = domain_space(alg, sys).basis_vectors();
  const RatMatrix d = RatMatrix::from_columns(domain, sys.unknowns.size());
  const LinearSubspace printed_im = column_space(p * d);
  const LinearSubspace structural_im = column_space(s * d);
  const auto mismatches = mismatched_rows(p, s);
  Json names = Json::array();
  for (const auto& v : sys.value_names) names.push_back(v);
  r.computed = Json{{"rank", count_json(structural_im.dim())},
                    {"image_dim", count_json(structural_im.dim())},
                    {"image", to_json(structural_im)},
                    {"coordinates", names},
                    {"rows", to_json(s)}};
  r.printed = Json{{"rank", count_json(printed_im.dim())},
                   {"image_dim", count_json(printed_im.dim())},
                   {"image", to_json(printed_im)},
                   {"rows", to_json(p)},
                   {"mismatched_rows", one_based(mismatches)},
                   {"images_equal", printed_im == structural_im}};
  if (printed_im == structural_im && mismatches.empty()) {
    r.status = ClaimStatus::Confirmed;
    return r;
  }
  if (printed_im == structural_im) {
    r.status = ClaimStatus::Partial;
    for (const auto& x : domain) {
      if (p.apply(x) == s.apply(x)) continue;
      r.witness = system_witness(alg, sys, x, p, s, "values differ; images agree on this algebra");
      return r;
    }
    // Rows differ only outside the domain; fall back to a coordinate witness.
    const std::size_t row = mismatches.front();
    for (std::size_t c = 0; c < p.cols(); ++c) {
      if (p(row, c) == s(row, c)) continue;
      RatVector x(p.cols());
      x[c] = 1;
      r.witness = system_witness(alg, sys, x, p, s, "row coefficients differ outside the domain");
      return r;
    }
    return r;
  }
  r.status = ClaimStatus::Refuted;
  for (const auto& x : domain) {
    if (structural_im.contains(p.apply(x))) continue;
    r.witness = system_witness(alg, sys, x, p, s, "printed value outside the structural image");
    return r;
  }
  for (const auto& x : domain) {
    if (printed_im.contains(s.apply(x))) continue;
    r.witness = system_witness(alg, sys, x, p, s, "structural value outside the printed image");
    return r;
  }
  return r;
}

std::string family_label(int c, int f) { return std::to_string(c) + "." + std::to_string(f); }

// First nonzero anomaly component as exact witness data (1-based indices).
Json anomaly_witness(const KvAlgebra& alg) {
  const Cochain a = kv_anomaly_tensor(alg);
  const std::size_t n = alg.dim();
  for (const auto& t : index_tuples(n, 3))
    for (std::size_t k = 0; k < n; ++k) {
      if (a.at(t, k) == 0) continue;
      return Json{{"gamma", gamma_json(alg)},
                  {"arguments", Json::array({count_json(t[0] + 1), count_json(t[1] + 1), count_json(t[2] + 1)})},
                  {"component", count_json(k + 1)},
                  {"anomaly", to_string(a.at(t, k))}};
    }
  return nullptr;
}

std::string class_json(const std::optional<int>& c) { return c ? std::to_string(*c) : std::string("not-KV"); }

ClaimReport make(std::string id, std::string location) {
  ClaimReport r;
  r.claim = std::move(id);
  r.location = std::move(location);
  return r;
}

void catalog_claims(std::vector<ClaimReport>& out) {
  const auto entries = catalog();
  ClaimReport aggregate = make("C1", "classification lists: every listed structure is KV");
  std::vector<ClaimReport> per_family;
  Json failures = Json::array();
  std::size_t kv_count = 0;
  for (const auto& e : entries) {
    const std::string label = family_label(e.class_id, e.family_index);
    ClaimReport r = make("C1." + label, "classification list, class " + std::to_string(e.class_id) + " (" +
                                            class_description(e.class_id) + "), family " +
                                            std::to_string(e.family_index));
    const bool kv = is_kv(e.algebra);
    const auto cls = classify(e.algebra);
    Json params = Json::object();
    for (const auto& [name, value] : e.parameters) params[name] = to_string(value);
    r.computed = Json{{"parameters", params},
                      {"gamma", gamma_json(e.algebra)},
                      {"kv", kv},
                      {"class", class_json(cls)},
                      {"symmetric", is_symmetric(e.algebra)},
                      {"nondegenerate", is_nondegenerate(e.algebra)},
                      {"hessian", is_hessian(e.algebra)}};
    r.printed = Json{{"kv", true}, {"class", std::to_string(e.class_id)}};
    if (kv) ++kv_count;
    if (kv && cls == e.class_id) {
      r.status = ClaimStatus::Confirmed;
    } else if (!kv) {
      r.status = ClaimStatus::Refuted;
      r.witness = anomaly_witness(e.algebra);
      Json w = r.witness;
      w["family"] = label;
      failures.push_back(std::move(w));
    } else {
      r.status = ClaimStatus::Refuted;
      r.witness = Json{{"gamma", gamma_json(e.algebra)}, {"computed_class", class_json(cls)}};
      failures.push_back(Json{{"family", label}, {"computed_class", class_json(cls)}});
    }
    per_family.push_back(std::move(r));
  }
  aggregate.computed = Json{{"entries", count_json(entries.size())}, {"kv_entries", count_json(kv_count)}};
  aggregate.printed = Json{{"entries", count_json(entries.size())}, {"kv_entries", count_json(entries.size())}};
  if (failures.empty()) {
    aggregate.status = ClaimStatus::Confirmed;
  } else {
    aggregate.status = ClaimStatus::Refuted;
    aggregate.witness = Json{{"failures", failures}};
  }
  out.push_back(std::move(aggregate));
  for (auto& r : per_family) out.push_back(std::move(r));

  ClaimReport hess = make("C2", "Hessian structures proposition: class 4 entries are KV and Hessian");
  Json rows = Json::array();
  Json bad = Json::array();
  for (const auto& e : entries) {
    if (e.class_id != 4) continue;
    const std::string label = family_label(e.class_id, e.family_index);
    const bool kv = is_kv(e.algebra);
    const bool h = is_hessian(e.algebra);
    rows.push_back(Json{{"family", label}, {"kv", kv}, {"hessian", h}});
    if (!kv || !h) {
      Json w = kv ? Json{{"gamma", gamma_json(e.algebra)}} : anomaly_witness(e.algebra);
      w["family"] = label;
      w["kv"] = kv;
      w["hessian"] = h;
      bad.push_back(std::move(w));
    }
  }
  hess.computed = Json{{"families", rows}};
  hess.printed = Json{{"kv", true}, {"hessian", true}};
  if (bad.empty()) {
    hess.status = ClaimStatus::Confirmed;
  } else {
    hess.status = ClaimStatus::Refuted;
    hess.witness = Json{{"failures", bad}};
  }
  out.push_back(std::move(hess));
}

ClaimReport kv_condition_claim(const VerifierConfig& config) {
  ClaimReport r = make("C3", "KV-structure characterization: polynomial conditions versus the anomaly");
  const PrintedSystem& sys = printed_system("kv_condition");
  RationalSampler sampler(config.seed);
  std::vector<KvAlgebra> samples;
  for (const auto& e : catalog()) samples.push_back(e.algebra);
  // Catalog families at random parameters supply many KV samples.
  for (const auto& fam : catalog_families()) {
    for (int rep = 0; rep < 5; ++rep) {
      std::map<std::string, Rational> values;
      for (const auto& name : fam.parameters) values[name] = sampler.rational();
      try {
        samples.push_back(catalog_entry(fam.class_id, fam.family_index, values).algebra);
      } catch (const DomainError&) {
        // side condition violated by the draw; skip it
      }
    }
  }
  for (std::size_t i = 0; i < config.random_algebras; ++i) samples.push_back(sampler.algebra(2));

  std::size_t kv_samples = 0;
  std::size_t agreements = 0;
  std::size_t componentwise = 0;
  Json first_disagreement;
  for (const auto& alg : samples) {
    const auto residual = kv_condition_residual(alg);
    const RatVector structural = structural_condition(alg, sys);
    const bool printed_zero = is_zero(RatVector(residual.begin(), residual.end()));
    const bool kv = is_kv(alg);
    if (kv) ++kv_samples;
    if (printed_zero == kv) {
      ++agreements;
    } else if (first_disagreement.is_null()) {
      first_disagreement = Json{{"gamma", gamma_json(alg)},
                                {"printed_residual", to_json(RatVector(residual.begin(), residual.end()))},
                                {"kv", kv}};
    }
    if (RatVector(residual.begin(), residual.end()) == structural) ++componentwise;
  }
  r.computed = Json{{"samples", count_json(samples.size())},
                    {"kv_samples", count_json(kv_samples)},
                    {"agreements", count_json(agreements)},
                    {"componentwise_matches", count_json(componentwise)}};
  r.printed = Json{{"equivalent", true}};
  if (agreements == samples.size()) {
    r.status = ClaimStatus::Confirmed;
  } else {
    r.status = ClaimStatus::Refuted;
    r.witness = first_disagreement;
  }
  return r;
}

ClaimReport audit_claim(const KvAlgebra& f, const std::string& system, const std::string& id) {
  ClaimReport r = audit_system(f, printed_system(system));
  r.claim = id;
  return r;
}

Json cohomology_json(const CohomologyResult& h) {
  Json reps = Json::array();
  for (const auto& c : h.representatives) reps.push_back(to_json(c));
  return Json{{"q", count_json(h.q)},
              {"dim_ker", count_json(h.dim_ker)},
              {"dim_im_prev", count_json(h.dim_im_prev)},
              {"inclusion_holds", h.inclusion_holds},
              {"dim_intersection", count_json(h.dim_intersection)},
              {"dim_h", count_json(h.dim_h)},
              {"representatives", reps}};
}

std::vector<ClaimReport> cohomology_claims(const KvAlgebra& f) {
  std::vector<ClaimReport> out;
  {
    const CohomologyResult h = cohomology(f, 0);
    ClaimReport r = make("C9", "Hessian cohomology theorem, degree 0");
    r.computed = cohomology_json(h);
    r.printed = Json{{"dim_h", "2"}};
    if (h.dim_h == 2) {
      r.status = ClaimStatus::Confirmed;
    } else {
      r.status = ClaimStatus::Refuted;
      r.witness = Json{{"gamma", gamma_json(f)}, {"dim_h", count_json(h.dim_h)}};
    }
    out.push_back(std::move(r));
  }
  {
    const CohomologyResult h = cohomology(f, 1);
    ClaimReport r = make("C10", "Hessian cohomology theorem, degree 1 (only the zero 1-cocycle)");
    r.computed = cohomology_json(h);
    r.printed = Json{{"dim_h", "0"}, {"dim_ker", "0"}};
    if (h.dim_h == 0 && h.dim_ker == 0) {
      r.status = ClaimStatus::Confirmed;
    } else {
      r.status = ClaimStatus::Refuted;
      r.witness = Json{{"gamma", gamma_json(f)}, {"kernel", to_json(h.kernel)}};
    }
    out.push_back(std::move(r));
  }
  {
    const CohomologyResult h = cohomology(f, 2);
    ClaimReport r = make("C11", "Hessian cohomology theorem, degree 2");
    r.computed = cohomology_json(h);
    // Claimed classes (E12, 0), (E21, 0), (0, E22): coefficient slots of
    // f(e1,e2)_1, f(e2,e1)_1 and f(e2,e2)_2.
    const std::vector<std::pair<std::string, std::size_t>> claimed = {
        {"(E12,0)", 2}, {"(E21,0)", 4}, {"(0,E22)", 7}};
    const RatMatrix delta2 = coboundary_matrix(f, 2);
    Json reps = Json::array();
    Json checks = Json::array();
    RatMatrix claimed_span(0, 8);
    std::vector<RatVector> vectors;
    for (const auto& [name, slot] : claimed) {
      const Cochain c = Cochain::basis(2, 2, slot);
      vectors.push_back(c.coeffs());
      reps.push_back(Json{{"name", name}, {"cochain", to_json(c)}});
      const RatVector residual = delta2.apply(c.coeffs());
      checks.push_back(Json{{"name", name}, {"is_cocycle", is_zero(residual)}, {"delta2_residual", to_json(residual)}});
    }
    r.printed = Json{{"dim_h", "3"}, {"representatives", reps}};
    if (h.dim_h == 3 && h.inclusion_holds) {
      r.status = ClaimStatus::Confirmed;
    } else {
      r.status = ClaimStatus::Refuted;
      r.witness = Json{{"gamma", gamma_json(f)},
                       {"computed_dim_h", count_json(h.dim_h)},
                       {"claimed_dim_h", "3"},
                       {"claimed_representatives", checks}};
    }
    out.push_back(std::move(r));
  }
  return out;
}

ClaimReport operator_identity_claim(const KvAlgebra& f, RationalSampler& sampler) {
  ClaimReport r = make("C12", "first-order deformation operator equals the degree-2 coboundary");
  std::vector<KvAlgebra> bases{f};
  for (const auto& e : catalog())
    if (is_kv(e.algebra)) bases.push_back(e.algebra);
  std::size_t checks = 0;
  std::size_t mismatches = 0;
  Json witness;
  for (const auto& mu : bases) {
    for (int rep = 0; rep < 10; ++rep) {
      const Cochain nu = sampler.cochain(2, 2);
      const Cochain d = linear_obstruction(mu, nu);
      const Cochain delta = coboundary(mu, nu);
      ++checks;
      if (d != delta) {
        ++mismatches;
        if (witness.is_null())
          witness = Json{{"gamma", gamma_json(mu)}, {"nu", to_json(nu)}, {"d_mu", to_json(d)}, {"delta2", to_json(delta)}};
      }
    }
  }
  r.computed = Json{{"checks", count_json(checks)}, {"mismatches", count_json(mismatches)}};
  r.printed = Json{{"identity", true}};
  r.status = mismatches == 0 ? ClaimStatus::Confirmed : ClaimStatus::Refuted;
  if (mismatches != 0) r.witness = witness;
  return r;
}

// Kernel basis vector of delta^2 on f whose own anomaly is nonzero, if any.
std::optional<Cochain> obstructed_direction(const KvAlgebra& f) {
  const auto basis = deformation_space(f).basis_vectors();
  for (const auto& v : basis) {
    const Cochain nu(2, f.dim(), v);
    if (!is_kv(KvAlgebra::from_cochain(nu))) return nu;
  }
  // Pairwise sums cover the case where every basis vector is KV by itself.
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      RatVector v = basis[i];
      for (std::size_t k = 0; k < v.size(); ++k) v[k] += basis[j][k];
      const Cochain nu(2, f.dim(), v);
      if (!is_kv(KvAlgebra::from_cochain(nu))) return nu;
    }
  return std::nullopt;
}

Json first_nonzero_coefficient(const AnomalyExpansion& e) {
  for (std::size_t p = 0; p <= e.max_power(); ++p) {
    if (e.at(p).is_zero()) continue;
    return Json{{"power", count_json(p)}, {"coefficient", to_json(e.at(p))}};
  }
  return nullptr;
}

ClaimReport series_reading_claim(const KvAlgebra& f) {
  ClaimReport r = make("C16", "Hessian deformation family with the same direction at every order");
  r.printed = Json{{"kv_for_all_t", true}};
  const auto nu = obstructed_direction(f);
  if (!nu) {
    r.status = ClaimStatus::Confirmed;
    r.computed = Json{{"obstructed_direction_found", false}};
    return r;
  }
  const TruncatedDeformation def(f, {*nu, *nu, *nu});
  const AnomalyExpansion e = anomaly_expansion(def);
  Json zero_powers = Json::array();
  for (std::size_t p = 0; p <= e.max_power(); ++p)
    if (e.at(p).is_zero()) zero_powers.push_back(count_json(p));
  r.computed = Json{{"order", count_json(def.order())}, {"vanishing_powers", zero_powers}};
  const Json first = first_nonzero_coefficient(e);
  if (first.is_null()) {
    r.status = ClaimStatus::Confirmed;
    return r;
  }
  r.status = ClaimStatus::Refuted;
  r.witness = Json{{"gamma", gamma_json(f)}, {"nu", to_json(*nu)}, {"first_nonzero", first}};
  return r;
}

ClaimReport equivalence_claim(const KvAlgebra& f, RationalSampler& sampler) {
  ClaimReport r = make("C17", "deformation proposition: mu_t is KV exactly when each direction is a 2-cocycle");
  r.printed = Json{{"equivalence", true}};
  // First-order half: t^1 coefficient vanishes iff the direction is a cocycle.
  const LinearSubspace space = deformation_space(f);
  std::size_t first_order_checks = 0;
  std::size_t first_order_failures = 0;
  for (int rep = 0; rep < 20; ++rep) {
    const Cochain nu = sampler.cochain(2, 2);
    const AnomalyExpansion e = anomaly_expansion(TruncatedDeformation(f, {nu}));
    ++first_order_checks;
    if (e.at(1).is_zero() != space.contains(nu.coeffs())) ++first_order_failures;
  }
  const auto nu = obstructed_direction(f);
  r.computed = Json{{"first_order_checks", count_json(first_order_checks)},
                    {"first_order_failures", count_json(first_order_failures)},
                    {"obstructed_cocycle_found", nu.has_value()}};
  if (!nu && first_order_failures == 0) {
    r.status = ClaimStatus::Confirmed;
    return r;
  }
  r.status = first_order_failures == 0 ? ClaimStatus::Partial : ClaimStatus::Refuted;
  if (nu) {
    const AnomalyExpansion e = anomaly_expansion(TruncatedDeformation(f, {*nu}));
    r.witness = Json{{"gamma", gamma_json(f)},
                     {"nu", to_json(*nu)},
                     {"t1_coefficient_zero", e.at(1).is_zero()},
                     {"t2_coefficient", to_json(e.at(2))}};
  } else {
    r.witness = Json{{"gamma", gamma_json(f)}, {"first_order_failures", count_json(first_order_failures)}};
  }
  return r;
}

ClaimReport nilpotency_claim(RationalSampler& sampler) {
  ClaimReport r = make("C18", "KV complex: consecutive coboundaries compose to zero");
  r.printed = Json{{"nilpotent", true}};
  std::vector<KvAlgebra> algebras;
  for (const auto& e : catalog())
    if (is_kv(e.algebra)) algebras.push_back(e.algebra);
  for (int i = 0; i < 20; ++i)
    if (auto a = sampler.kv_algebra(2)) algebras.push_back(*a);
  std::size_t failures = 0;
  Json witness;
  for (const auto& alg : algebras) {
    for (std::size_t q = 0; q < 2; ++q) {
      const RatMatrix product = coboundary_matrix(alg, q + 1) * coboundary_matrix(alg, q);
      if (product.is_zero()) continue;
      ++failures;
      if (witness.is_null()) witness = Json{{"gamma", gamma_json(alg)}, {"q", count_json(q)}, {"product", to_json(product)}};
    }
  }
  r.computed = Json{{"algebras", count_json(algebras.size())}, {"failures", count_json(failures)}};
  r.status = failures == 0 ? ClaimStatus::Confirmed : ClaimStatus::Refuted;
  if (failures != 0) r.witness = witness;
  return r;
}

void check_invariants(const KvAlgebra& f, const std::vector<ClaimReport>& claims, std::vector<std::string>& failures) {
  for (const auto& c : claims) {
    if (c.status != ClaimStatus::Confirmed && c.witness.is_null()) failures.push_back(c.claim + ": missing witness");
    if (c.witness.is_object() && c.witness.contains("system") && !witness_reverifies(c))
      failures.push_back(c.claim + ": witness does not re-verify");
  }
  for (std::size_t q = 0; q <= 2; ++q) {
    const CohomologyResult h = cohomology(f, q);
    if (h.dim_h != h.dim_ker - h.dim_intersection || h.representatives.size() != h.dim_h)
      failures.push_back("cohomology bookkeeping inconsistent in degree " + std::to_string(q));
    for (const auto& rep : h.representatives)
      if (!coboundary(f, rep).is_zero()) failures.push_back("representative is not a cocycle in degree " + std::to_string(q));
  }
  for (std::size_t q = 1; q <= 2; ++q)
    for (std::size_t c = 0; c < int_pow(2, q + 1); ++c) {
      const Cochain basis = Cochain::basis(q, 2, c);
      if (coboundary(f, basis) != coboundary_explicit(f, basis))
        failures.push_back("general and explicit coboundaries differ in degree " + std::to_string(q));
    }
}

}  // namespace

ClaimReport audit_system(const KvAlgebra& alg, const PrintedSystem& sys) {
  if (alg.dim() != 2) throw UnsupportedError("printed systems are audited on two-dimensional algebras only");
  ClaimReport r = make(sys.id, sys.title);
  switch (sys.kind) {
    case Kind::Condition: return audit_condition(alg, sys, std::move(r));
    case Kind::Kernel: return audit_kernel(alg, sys, std::move(r));
    case Kind::Image: return audit_image(alg, sys, std::move(r));
  }
  return r;
}

bool witness_reverifies(const ClaimReport& report) {
  const Json& w = report.witness;
  if (!w.is_object() || !w.contains("system")) return false;
  const PrintedSystem& sys = printed_system(w.at("system").get<std::string>());
  const KvAlgebra alg = algebra_from_json(Json{{"dim", 2}, {"gamma", w.at("gamma")}});
  const RatVector printed = rat_vector_from_json(w.at("printed_residual"));
  const RatVector structural = rat_vector_from_json(w.at("structural_residual"));
  if (printed == structural) return false;
  if (sys.kind == Kind::Condition)
    return instantiate(sys, alg).column(0) == printed && structural_condition(alg, sys) == structural;
  const RatVector x = rat_vector_from_json(w.at("x"));
  const RatMatrix s = select_rows(structural_operator(alg, sys), sys.row_coords);
  return instantiate(sys, alg).apply(x) == printed && s.apply(x) == structural;
}

VerificationRun run_all(const VerifierConfig& config) {
  VerificationRun run;
  auto& claims = run.claims;
  const KvAlgebra f = hessian_fixture(config.a, config.b);
  RationalSampler sampler(config.seed ^ 0x9e3779b97f4a7c15ULL);

  catalog_claims(claims);
  claims.push_back(kv_condition_claim(config));
  claims.push_back(audit_claim(f, "ker_delta0", "C4"));
  claims.push_back(audit_claim(f, "ker_delta1", "C5"));
  claims.push_back(audit_claim(f, "ker_delta2", "C6"));
  claims.push_back(audit_claim(f, "im_delta0", "C7"));
  claims.push_back(audit_claim(f, "im_delta1", "C8"));
  for (auto& c : cohomology_claims(f)) claims.push_back(std::move(c));
  claims.push_back(operator_identity_claim(f, sampler));
  claims.push_back(audit_claim(f, "deformation_cocycle", "C13"));
  {
    ClaimReport r = verify_family(config.a, config.b);
    r.claim = "C14.1";
    claims.push_back(std::move(r));
    r = verify_family(1, -1);
    r.claim = "C14.2";
    claims.push_back(std::move(r));
  }
  claims.push_back(audit_claim(f, "kv_condition", "C15"));
  claims.push_back(series_reading_claim(f));
  claims.push_back(equivalence_claim(f, sampler));
  claims.push_back(nilpotency_claim(sampler));

  check_invariants(f, claims, run.invariant_failures);
  return run;
}

Json reports_to_json(const std::vector<ClaimReport>& reports) {
  Json out = Json::array();
  for (const auto& r : reports) {
    Json item{{"claim", r.claim},
              {"location", r.location},
              {"status", std::string(to_string(r.status))},
              {"computed", r.computed},
              {"printed", r.printed}};
    if (r.status != ClaimStatus::Confirmed || !r.witness.is_null()) item["witness"] = r.witness;
    out.push_back(std::move(item));
  }
  return out;
}

std::string render_json(const std::vector<ClaimReport>& reports) { return reports_to_json(reports).dump(2) + "\n"; }

std::string render_text(const std::vector<ClaimReport>& reports) {
  if (reports.empty()) return {};
  std::ostringstream os;
  std::size_t width = 5;
  for (const auto& r : reports) width = std::max(width, r.claim.size());
  const auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); };
  os << pad("claim", width) << "  " << pad("status", 9) << "  location\n";
  for (const auto& r : reports) {
    os << pad(r.claim, width) << "  " << pad(std::string(to_string(r.status)), 9) << "  " << r.location << "\n";
    if (!r.witness.is_null()) os << pad("", width) << "  witness: " << r.witness.dump() << "\n";
  }
  return os.str();
}

}  // namespace kvlab
