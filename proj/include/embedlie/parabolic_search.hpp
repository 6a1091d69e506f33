#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "embedlie/parabolic.hpp"

namespace embedlie {

/// A maximal parabolic P obtained by deleting one node, together with the
/// two quantities that make it usable: the 3 dim R_u(P) >= dim P^u test and
/// the slack dim G - 2 dim L^u - 1.
struct ParabolicCertificate {
  SimpleType type;
  int deleted_node = 0;
  ParabolicData profile;
  bool satisfies_3ru = false;
  std::int64_t margin = 0;
};

ParabolicCertificate certify(const RootSystem& system, int deleted_node);
ParabolicCertificate certify(const SimpleType& type, int deleted_node);

/// The deleted node s used for the embedding bound.
///
/// Classical types: A_n -> floor((n+1)/2), B_n and C_n -> floor((4n+1)/6),
/// D_n -> floor((4n-1)/6); nodes counted along the Bourbaki chain, which is
/// the same as counting from the left since s <= n-2 in type D.
/// Exceptional types: node 4 for E_6, E_7, E_8 and F_4, node 2 for G_2.
int paper_choice(const SimpleType& type);

/// Tabulated dim L^u for the exceptional choice (E6 19, E7 26, E8 35, F4 21,
/// G2 3) with its Levi factor, e.g. "a1 + a2 + a2". Empty for classical types.
struct ExceptionalLeviEntry {
  std::int64_t dim_levi_ss;
  std::vector<SimpleType> components;
};
std::optional<ExceptionalLeviEntry> exceptional_levi_entry(const SimpleType& type);

/// Every node s whose maximal parabolic has 3 dim R_u(P) >= dim P^u, found by
/// exhaustive search. Throws ConsistencyError if none qualifies.
std::vector<int> good_nodes(const SimpleType& type);
std::vector<int> good_nodes(const RootSystem& system);

/// Closed-form dim L^u after deleting node s from a classical diagram:
///   A: 2s^2 - (2n+2)s + n^2 + 2n - 1
///   B, C: 3s^2 - (4n+1)s + 2n^2 + n - 1
///   D: 3(s+1)^2 - (4n+5)(s+1) + 2n^2 + 3n + 1   (s <= n-2)
/// No cross-check; see levi_closed_form.
std::int64_t levi_polynomial(const SimpleType& type, int s);

/// levi_polynomial, cross-checked against the root count. Throws
/// InvalidInput for exceptional types or s out of range and
/// ConsistencyError on disagreement.
std::int64_t levi_closed_form(const SimpleType& type, int s);
std::int64_t levi_closed_form(const RootSystem& system, int s);

/// Margin from the parity/residue formulas for classical types, written with
/// the floor eliminated:
///   A: 2 if n odd, 1 if n even
///   B, C: (2n^2+n)/3 + 1 + (2x - x^2)/6 with x in {0,-2,-4}, 6 | 4n+x
///   D: (2n^2-n)/3 + (10x - x^2)/6 - 3 with x in {0,2,4}, 6 | 4n+x
std::int64_t margin_formula(const SimpleType& type);

/// dim G - 2 dim L^u - 1 at paper_choice, computed from roots. For classical
/// types it must equal margin_formula; it must be >= 0 for all types.
/// Throws ConsistencyError otherwise.
std::int64_t margin_audit(const SimpleType& type);
std::int64_t margin_audit(const RootSystem& system);

}  // namespace embedlie
