#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "embedlie/group_expr.hpp"

namespace embedlie {

struct EmbedQuery {
  GroupExpr target;
  std::int64_t d = 0;  // dim Z
};

/// Embedding rules in witness order, followed by the non-embeddability bound.
enum class RuleId { LowDim, Simple, Semisimple, ProductAffine, Sl2Products, NonEmbed };

std::string_view rule_name(RuleId rule) noexcept;

/// Embed rules in the fixed order used to pick a witness.
inline constexpr RuleId kEmbedRules[] = {RuleId::LowDim, RuleId::Simple, RuleId::Semisimple,
                                         RuleId::ProductAffine, RuleId::Sl2Products};

/// Whether the rule's hypotheses on the shape of the target are met.
bool rule_applies(RuleId rule, const GroupExpr& target) noexcept;

/// Each rule returns false when it does not apply to the target's shape.

/// Simple G: dim G + k > 2d + 1.
bool rule_simple(const EmbedQuery& q);
/// Semisimple G with r simple factors: dim G + k > 2d + r.
bool rule_semisimple(const EmbedQuery& q);
/// A^m x H, H semisimple (possibly trivial), m = k: 2d + 1 <= m + dim H and d <= m.
bool rule_product_affine(const EmbedQuery& q);
/// A^m x SL_2^s: 2d + 1 <= m + 3s and one of d <= m + s,
/// (m + 3s odd and s - 1 <= m), (m + 3s even and s - 2 <= m).
bool rule_sl2_products(const EmbedQuery& q);
/// dim <= 10 and 2d + 1 <= dim, excluding sl2^3 and sl3 x k.
bool rule_lowdim(const EmbedQuery& q);
/// 2d >= dim: some smooth irreducible affine d-fold does not embed.
bool rule_nonembed(const EmbedQuery& q);

bool evaluate_rule(RuleId rule, const EmbedQuery& q);

/// The rule's inequality with the query's numbers substituted, e.g.
/// "dim G + k > 2d + 1: 14 + 0 > 2*6 + 1".
std::string instantiate(RuleId rule, const EmbedQuery& q);

enum class VerdictKind { Embeds, ExistsNonEmbeddable, Unknown };

std::string_view verdict_name(VerdictKind kind) noexcept;
/// Quantifier the verdict asserts, spelled out.
std::string_view verdict_semantics(VerdictKind kind) noexcept;

struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  std::optional<RuleId> rule;  // set iff kind == Embeds
  std::string inequality;      // witness, bound, or the failed nonembed bound
};

/// Embeds by the first firing embed rule, else ExistsNonEmbeddable if 2d >=
/// dim, else Unknown. Throws ConsistencyError if an embed rule and the
/// non-embeddability bound fire together.
Verdict verdict(const EmbedQuery& q);

/// A standard parabolic of the semisimple part, described per simple factor
/// (multiplicities expanded) by its deleted nodes.
struct ParabolicWitness {
  std::vector<std::vector<int>> deleted_per_factor;
  std::int64_t dim_P_minus_dim_Pu = 0;  // total number of deleted nodes
  std::int64_t dim_Pu = 0;
  std::int64_t dim_unip_rad = 0;
};

/// Diagnostic only, not part of verdict(): searches all standard parabolics
/// P of the semisimple part with dim P^u - 1 <= 3 dim R_u(P) and
/// 2d + dim P - dim P^u < dim G + k, minimising dim P - dim P^u. Each
/// factor's rank must be <= 16 (exhaustive subset search).
std::optional<ParabolicWitness> general_parabolic_witness(const EmbedQuery& q);

}  // namespace embedlie
