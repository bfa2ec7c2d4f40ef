#include "kvlab/catalog.hpp"
#include "kvlab/cochain_complex.hpp"
#include "kvlab/printed_systems.hpp"
#include "kvlab/verifier.hpp"

#include <catch_amalgamated.hpp>

#include <set>

using namespace kvlab;

namespace {

ClaimStatus audit(const char* id, const KvAlgebra& alg) { return audit_system(alg, printed_system(id)).status; }

}  // namespace

TEST_CASE("printed systems are registered") {
  std::set<std::string> ids;
  for (const auto& s : printed_systems()) {
    ids.insert(s.id);
    CHECK(s.rows.size() == s.row_coords.size());
    CHECK(s.unknowns.size() == s.unknown_coords.size());
  }
  CHECK(ids == std::set<std::string>{"kv_condition", "ker_delta0", "ker_delta1", "ker_delta2", "im_delta0", "im_delta1",
                                     "deformation_cocycle"});
  CHECK_THROWS(printed_system("no_such_system"));
}

TEST_CASE("audit statuses on the Hessian fixture") {
  const KvAlgebra f = hessian_fixture(1, 2);
  CHECK(audit("kv_condition", f) == ClaimStatus::Confirmed);
  CHECK(audit("ker_delta0", f) == ClaimStatus::Confirmed);
  CHECK(audit("ker_delta1", f) == ClaimStatus::Partial);
  CHECK(audit("ker_delta2", f) == ClaimStatus::Refuted);
  CHECK(audit("im_delta0", f) == ClaimStatus::Confirmed);
  CHECK(audit("im_delta1", f) == ClaimStatus::Refuted);
  CHECK(audit("deformation_cocycle", f) == ClaimStatus::Refuted);
}

TEST_CASE("condition audit on the zero algebra") {
  CHECK(audit("kv_condition", KvAlgebra(2)) == ClaimStatus::Confirmed);
  const ClaimReport r = audit_system(KvAlgebra(2), printed_system("kv_condition"));
  CHECK(r.witness.is_null());
}

TEST_CASE("non-confirmed audits carry re-verifiable witnesses") {
  const KvAlgebra f = hessian_fixture(1, 2);
  for (const auto& sys : printed_systems()) {
    const ClaimReport r = audit_system(f, sys);
    INFO(sys.id);
    if (r.status == ClaimStatus::Confirmed) {
      CHECK(r.witness.is_null());
      continue;
    }
    REQUIRE(r.witness.is_object());
    CHECK(r.witness["system"] == sys.id);
    CHECK(r.witness["printed_residual"] != r.witness["structural_residual"]);
    CHECK(witness_reverifies(r));
    ClaimReport tampered = r;
    tampered.witness["printed_residual"] = tampered.witness["structural_residual"];
    CHECK_FALSE(witness_reverifies(tampered));
  }
}

TEST_CASE("ker_delta1 witness") {
  const ClaimReport r = audit_system(hessian_fixture(1, 2), printed_system("ker_delta1"));
  REQUIRE(r.status == ClaimStatus::Partial);
  CHECK(r.witness["assignment"]["beta"] == "1");
}

TEST_CASE("rendering") {
  CHECK(render_text({}).empty());
  CHECK(render_json({}) == "[]\n");

  ClaimReport ok;
  ok.claim = "X1";
  ok.location = "somewhere";
  ok.computed = Json{{"dim", "2"}};
  ok.printed = Json{{"dim", "2"}};
  ClaimReport bad = ok;
  bad.claim = "X2";
  bad.status = ClaimStatus::Refuted;
  bad.printed = Json{{"dim", "3"}};
  bad.witness = Json{{"x", Json::array({"1/2"})}};

  const Json j = reports_to_json({ok, bad});
  REQUIRE(j.size() == 2);
  CHECK(j[0]["status"] == "CONFIRMED");
  CHECK_FALSE(j[0].contains("witness"));
  CHECK(j[1]["status"] == "REFUTED");
  CHECK(j[1]["witness"]["x"][0] == "1/2");
  CHECK(render_json({ok, bad}) == j.dump(2) + "\n");

  const std::string text = render_text({ok, bad});
  CHECK(text.find("X1") != std::string::npos);
  CHECK(text.find("CONFIRMED") != std::string::npos);
  CHECK(text.find("REFUTED") != std::string::npos);
  CHECK(text.find("1/2") != std::string::npos);
}

TEST_CASE("full run is deterministic and consistent") {
  VerifierConfig cfg;
  cfg.random_algebras = 100;
  const VerificationRun run1 = run_all(cfg);
  const VerificationRun run2 = run_all(cfg);
  CHECK(render_json(run1.claims) == render_json(run2.claims));
  CHECK(run1.invariant_failures.empty());
  CHECK(run1.claims.size() >= 14);
  std::set<std::string> ids;
  for (const auto& c : run1.claims) {
    ids.insert(c.claim);
    if (c.status != ClaimStatus::Confirmed) CHECK_FALSE(c.witness.is_null());
  }
  for (int i = 2; i <= 18; ++i) {
    if (i == 14) continue;
    CHECK(ids.count("C" + std::to_string(i)) == 1);
  }
  CHECK(ids.count("C14.1") == 1);
  CHECK(ids.count("C14.2") == 1);
}
