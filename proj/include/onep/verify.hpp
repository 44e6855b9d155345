#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "onep/families.hpp"

namespace onep {

// One evaluated claim. Node counts are deterministic for a fixed profile, so
// identical runs produce identical records; seconds are measured but kept out
// of serialized reports unless explicitly requested.
struct ClaimRecord {
  std::string id;
  std::string group;      // thm-equiv, lemma, boundary, cr, construction, bound
  std::string statement;  // the mathematical claim being checked
  std::string expected;
  std::string computed;
  CheckStatus status = CheckStatus::inconclusive;
  bool stretch = false;  // generous-budget extras; inconclusive never gates
  std::uint64_t nodes = 0;
  std::uint64_t node_cap = 0;  // per-run cap in force; 0 = no search involved
  double seconds = 0.0;
};

struct VerifyOptions {
  bool quick = false;              // tight node caps; inconclusive never gates
  std::vector<std::string> only;   // claim ids or group names; empty = all
};

struct VerificationReport {
  std::string profile;  // "quick" or "full"
  std::vector<ClaimRecord> records;
  int passed = 0;
  int failed = 0;
  int inconclusive = 0;
  bool ok = false;  // no failures; under full, open non-stretch claims also gate
};

// Registry order; groups are contiguous. Unknown --only entries throw
// std::invalid_argument from run_claims.
std::vector<std::string> claim_ids();

// Evaluates the selected claims sequentially in registry order. The progress
// callback (may be empty) sees each record as it completes.
VerificationReport run_claims(const VerifyOptions& opt,
                              const std::function<void(const ClaimRecord&)>& progress = {});

// Same record stream in both formats; byte-identical across runs for a fixed
// profile unless with_timing adds wall-clock fields.
std::string report_to_json(const VerificationReport& r, bool with_timing = false);
std::string report_to_markdown(const VerificationReport& r, bool with_timing = false);

}  // namespace onep
