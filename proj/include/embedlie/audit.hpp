#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "embedlie/group_expr.hpp"

namespace embedlie {

struct AuditResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Random normalised target: up to three distinct simple types of rank
/// <= max_rank with multiplicity 1..3, and an affine part 0..max_affine.
GroupExpr random_group_expr(std::mt19937_64& rng, int max_rank, std::int64_t max_affine);

AuditResult audit_dimensions(int max_rank = 12);
AuditResult audit_parabolic_identities(int max_rank = 8);
AuditResult audit_good_nodes(int max_rank = 12);
AuditResult audit_margins(int max_rank = 50);
AuditResult audit_homotopy(int max_rank = 12);
/// Exclusivity, monotonicity in k, anti-monotonicity in d.
AuditResult audit_verdicts(int samples = 10000, std::uint64_t seed = 20240601);
AuditResult audit_round_trip(int samples = 1000, std::uint64_t seed = 7);

/// Everything `verify` runs, in order.
std::vector<AuditResult> run_all_audits();

}  // namespace embedlie
