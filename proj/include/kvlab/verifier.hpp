#pragma once

#include "kvlab/kv_algebra.hpp"
#include "kvlab/printed_systems.hpp"
#include "kvlab/report.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace kvlab {

/**
 * Compares a printed system, instantiated on alg, with the structural
 * object it transcribes (the KV anomaly or a coboundary matrix).
 *
 * CONFIRMED: same solution set (kernel systems), same attained values
 * (image systems) or same values (conditions), and every printed row equals
 * its structural row. PARTIAL: the solution sets agree on alg but some row
 * coefficients differ. REFUTED: the solution sets differ. Non-confirmed
 * reports carry a witness assignment whose printed and structural residuals
 * differ.
 */
ClaimReport audit_system(const KvAlgebra& alg, const PrintedSystem& sys);

/** Recomputes both residuals of a system-audit witness and compares them with the recorded ones. */
bool witness_reverifies(const ClaimReport& report);

struct VerifierConfig {
  Rational a = 1;
  Rational b = 2;
  std::size_t random_algebras = 1000;
  std::uint64_t seed = 20240229;
};

struct VerificationRun {
  std::vector<ClaimReport> claims;
  // Violations of the library's own invariants (not of published claims).
  std::vector<std::string> invariant_failures;
};

VerificationRun run_all(const VerifierConfig& config = {});

std::string render_text(const std::vector<ClaimReport>& reports);
/** JSON list of reports; byte-stable for fixed input. */
std::string render_json(const std::vector<ClaimReport>& reports);
Json reports_to_json(const std::vector<ClaimReport>& reports);

}  // namespace kvlab
