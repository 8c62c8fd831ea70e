#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cubiccount {

struct VerifyOptions {
  uint64_t max_q = 64;
  int n_max = 3;
  int triples = 50;
  uint64_t seed = 0;
  // Offset added to every solved c before it enters a counting formula.
  // Any nonzero value must make the sweep fail; exists so the harness
  // can prove it detects mismatches.
  long long inject_c = 0;
};

struct VerifyIssue {
  std::string check;   // which identity failed
  std::string detail;  // reproduction record: inputs and both values
};

struct VerifyFieldResult {
  uint64_t p = 0;
  unsigned k = 1;
  uint64_t q = 0;
  std::string modulus;
  int checks = 0;
  int skipped = 0;  // oracle comparisons past the enumeration budget
  std::vector<VerifyIssue> issues;
  double elapsed_ms = 0.0;
};

struct VerifyReport {
  std::vector<VerifyFieldResult> fields;
  int total_checks = 0;
  int total_skipped = 0;
  int total_issues = 0;
  bool ok = true;
};

// All prime powers q = p^k <= max_q with q ≡ 1 (mod 3), sorted by q.
std::vector<std::pair<uint64_t, unsigned>> prime_powers_1mod3(uint64_t max_q);

// Sweeps every applicable field: closed forms vs. brute force for one z
// per cube class (A also at z = 0) and n <= n_max, M/N on seeded random
// triples, plus the character-sum identities where p ≡ 1 (mod 3).
// Fields run in parallel (capped by CUBICCOUNT_THREADS); the report is
// in field order regardless of scheduling.
VerifyReport run_verify(const VerifyOptions& options);

}  // namespace cubiccount
