#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pbl/report.hpp"

namespace pbl {

constexpr std::uint64_t kDefaultSeed = 0xD8B5;

struct RunConfig {
  std::uint64_t seed = kDefaultSeed;
  int samples = 500;          // random points / vectors for the equivalence checks
  int small_samples = 100;    // square-slot vectors for the d = 3 elimination check
  int conjugates = 100;       // conjugates per (t, s) in the round trip
  int regular_pencils = 1000;
  int a_max = 4;
  long radius = 3;            // integer scan box
  OutputFormat format = OutputFormat::Table;

  void validate() const;  // throws BadInput
};

// PBL_SEED if set and parseable (decimal or 0x-hex), otherwise fallback.
std::uint64_t seed_from_env(std::uint64_t fallback = kDefaultSeed);
std::uint64_t parse_seed(const std::string& s);  // throws BadInput

// "module/name" of the acceptance checks, in criterion order.
std::vector<std::string> criterion_names();

Check check_pencil_round_trip(const RunConfig& cfg);
Check check_pencil_range(const RunConfig& cfg);
Check check_image_equivalence(const RunConfig& cfg);
Check check_fiber_table(const RunConfig& cfg);
Check check_singular_locus(const RunConfig& cfg);
Check check_cohomology_anchors(const RunConfig& cfg);
Check check_cone_slopes(const RunConfig& cfg);
Check check_sym_additivity(const RunConfig& cfg);
Check check_nowhere_vanishing(const RunConfig& cfg);
Check check_drum_ledger(const RunConfig& cfg);

// Statements recorded as ambiguous; always FLAGGED.
std::vector<Check> flagged_checks();

// The ten computational checks plus flagged entries.
VerificationReport run_checks(const RunConfig& cfg);
// run_checks, then a second run compared byte for byte.
VerificationReport verify_all(const RunConfig& cfg);

}  // namespace pbl
