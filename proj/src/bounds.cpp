#include "embedlie/bounds.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "embedlie/parabolic.hpp"

namespace embedlie {

std::string_view rule_name(RuleId rule) noexcept {
  switch (rule) {
    case RuleId::LowDim: return "lowdim";
    case RuleId::Simple: return "simple";
    case RuleId::Semisimple: return "semisimple";
    case RuleId::ProductAffine: return "product_affine";
    case RuleId::Sl2Products: return "sl2_products";
    case RuleId::NonEmbed: return "nonembed";
  }
  return "?";
}

bool rule_applies(RuleId rule, const GroupExpr& target) noexcept {
  switch (rule) {
    case RuleId::Simple: return target.is_simple_times_affine();
    case RuleId::Semisimple: return target.has_simple_factor();
    case RuleId::Sl2Products: return target.is_sl2_power_times_affine();
    case RuleId::LowDim:
    case RuleId::ProductAffine:
    case RuleId::NonEmbed: return true;
  }
  return false;
}

namespace {

bool is_excluded_lowdim(const GroupExpr& g) {
  const auto& f = g.factors();
  if (f.size() != 1) return false;
  if (f[0].type == SimpleType{Family::A, 1} && f[0].multiplicity == 3 && g.affine_dim() == 0) {
    return true;
  }
  return f[0].type == SimpleType{Family::A, 2} && f[0].multiplicity == 1 && g.affine_dim() == 1;
}

std::string str(std::int64_t v) { return std::to_string(v); }

}  // namespace

bool rule_simple(const EmbedQuery& q) {
  const auto& g = q.target;
  if (!rule_applies(RuleId::Simple, g)) return false;
  return g.semisimple_dim() + g.affine_dim() > 2 * q.d + 1;
}

bool rule_semisimple(const EmbedQuery& q) {
  const auto& g = q.target;
  if (!rule_applies(RuleId::Semisimple, g)) return false;
  return g.semisimple_dim() + g.affine_dim() > 2 * q.d + g.simple_count();
}

bool rule_product_affine(const EmbedQuery& q) {
  const auto& g = q.target;
  const auto m = g.affine_dim();
  return 2 * q.d + 1 <= m + g.semisimple_dim() && q.d <= m;
}

bool rule_sl2_products(const EmbedQuery& q) {
  const auto& g = q.target;
  if (!rule_applies(RuleId::Sl2Products, g)) return false;
  const auto m = g.affine_dim();
  const auto s = g.simple_count();
  if (2 * q.d + 1 > m + 3 * s) return false;
  const bool odd = (m + 3 * s) % 2 != 0;
  return q.d <= m + s || (odd && s - 1 <= m) || (!odd && s - 2 <= m);
}

bool rule_lowdim(const EmbedQuery& q) {
  const auto& g = q.target;
  return g.total_dim() <= 10 && 2 * q.d + 1 <= g.total_dim() && !is_excluded_lowdim(g);
}

bool rule_nonembed(const EmbedQuery& q) { return 2 * q.d >= q.target.total_dim(); }

bool evaluate_rule(RuleId rule, const EmbedQuery& q) {
  switch (rule) {
    case RuleId::LowDim: return rule_lowdim(q);
    case RuleId::Simple: return rule_simple(q);
    case RuleId::Semisimple: return rule_semisimple(q);
    case RuleId::ProductAffine: return rule_product_affine(q);
    case RuleId::Sl2Products: return rule_sl2_products(q);
    case RuleId::NonEmbed: return rule_nonembed(q);
  }
  return false;
}

std::string instantiate(RuleId rule, const EmbedQuery& q) {
  const auto& g = q.target;
  const auto G = str(g.semisimple_dim());
  const auto k = str(g.affine_dim());
  const auto d = str(q.d);
  switch (rule) {
    case RuleId::LowDim:
      return "dim G <= 10 and 2d + 1 <= dim G: " + str(g.total_dim()) + " <= 10 and 2*" + d +
             " + 1 <= " + str(g.total_dim());
    case RuleId::Simple:
      return "dim G + k > 2d + 1: " + G + " + " + k + " > 2*" + d + " + 1";
    case RuleId::Semisimple:
      return "dim G + k > 2d + r: " + G + " + " + k + " > 2*" + d + " + " +
             str(g.simple_count());
    case RuleId::ProductAffine:
      return "2d + 1 <= m + dim H and d <= m: 2*" + d + " + 1 <= " + k + " + " + G + " and " +
             d + " <= " + k;
    case RuleId::Sl2Products: {
      const auto s = g.simple_count();
      const auto m = g.affine_dim();
      std::string out = "2d + 1 <= m + 3s: 2*" + d + " + 1 <= " + k + " + 3*" + str(s);
      if (q.d <= m + s) return out + " and d <= m + s: " + d + " <= " + k + " + " + str(s);
      if ((m + 3 * s) % 2 != 0) {
        return out + " and m + 3s odd with s - 1 <= m: " + str(s) + " - 1 <= " + k;
      }
      return out + " and m + 3s even with s - 2 <= m: " + str(s) + " - 2 <= " + k;
    }
    case RuleId::NonEmbed:
      return "2d >= dim G: 2*" + d + " >= " + str(g.total_dim());
  }
  return {};
}

std::string_view verdict_name(VerdictKind kind) noexcept {
  switch (kind) {
    case VerdictKind::Embeds: return "Embeds";
    case VerdictKind::ExistsNonEmbeddable: return "ExistsNonEmbeddable";
    case VerdictKind::Unknown: return "Unknown";
  }
  return "?";
}

std::string_view verdict_semantics(VerdictKind kind) noexcept {
  switch (kind) {
    case VerdictKind::Embeds:
      return "every smooth affine variety of dimension d admits an embedding into the target";
    case VerdictKind::ExistsNonEmbeddable:
      return "there exists a smooth irreducible affine variety of dimension d that does not "
             "admit an embedding into the target";
    case VerdictKind::Unknown:
      return "no available rule decides whether every smooth affine variety of dimension d "
             "embeds into the target";
  }
  return {};
}

Verdict verdict(const EmbedQuery& q) {
  if (q.d < 0) throw InvalidInput("dimension d must be non-negative");
  std::optional<RuleId> witness;
  for (RuleId rule : kEmbedRules) {
    if (evaluate_rule(rule, q)) {
      witness = rule;
      break;
    }
  }
  const bool nonembed = rule_nonembed(q);
  if (witness && nonembed) {
    throw ConsistencyError("embed rule " + std::string(rule_name(*witness)) +
                           " and the non-embeddability bound both fire for " +
                           format_expr(q.target) + ", d=" + std::to_string(q.d));
  }
  if (witness) return {VerdictKind::Embeds, witness, instantiate(*witness, q)};
  if (nonembed) return {VerdictKind::ExistsNonEmbeddable, std::nullopt,
                        instantiate(RuleId::NonEmbed, q)};
  // Unknown: report the bound that just missed.
  return {VerdictKind::Unknown, std::nullopt, "not (" + instantiate(RuleId::NonEmbed, q) + ")"};
}

namespace {

// Per factor: for each number c of deleted nodes, the smallest value of
// dim P^u - 3 dim R_u(P) over all parabolics with c deleted nodes, and the
// deleted set achieving it.
struct FactorTable {
  std::map<int, std::pair<std::int64_t, std::vector<int>>> best;
};

FactorTable factor_table(const SimpleType& type) {
  const RootSystem system(type);
  FactorTable table;
  const std::uint64_t full = (std::uint64_t{1} << type.rank()) - 1;
  for (std::uint64_t mask = 0; mask <= full; ++mask) {
    const auto kept = NodeSet::from_mask(type, mask);
    const auto p = parabolic_profile(system, kept);
    const int c = static_cast<int>(p.codim_count);
    const std::int64_t excess = p.dim_Pu - 3 * p.dim_unip_rad;
    auto it = table.best.find(c);
    if (it == table.best.end() || excess < it->second.first) {
      table.best[c] = {excess, kept.deleted_labels()};
    }
  }
  return table;
}

}  // namespace

std::optional<ParabolicWitness> general_parabolic_witness(const EmbedQuery& q) {
  const auto& g = q.target;
  if (!g.has_simple_factor()) return std::nullopt;

  // Min-plus convolution over factors: c -> (min excess, choice per factor).
  struct State {
    std::int64_t excess;
    std::vector<std::vector<int>> choice;
  };
  std::map<int, State> acc{{0, State{0, {}}}};
  for (const auto& f : g.factors()) {
    if (f.type.rank() > 16) throw InvalidInput("parabolic search limited to rank <= 16");
    const auto table = factor_table(f.type);
    for (int copy = 0; copy < f.multiplicity; ++copy) {
      std::map<int, State> next;
      for (const auto& [c0, st] : acc) {
        for (const auto& [c1, entry] : table.best) {
          const int c = c0 + c1;
          const std::int64_t e = st.excess + entry.first;
          auto it = next.find(c);
          if (it == next.end() || e < it->second.excess) {
            auto choice = st.choice;
            choice.push_back(entry.second);
            next[c] = State{e, std::move(choice)};
          }
        }
      }
      acc = std::move(next);
    }
  }

  for (const auto& [c, st] : acc) {
    if (st.excess > 1) continue;  // dim P^u - 1 <= 3 dim R_u(P)
    if (2 * q.d + c >= g.semisimple_dim() + g.affine_dim()) return std::nullopt;
    ParabolicWitness w;
    w.deleted_per_factor = st.choice;
    w.dim_P_minus_dim_Pu = c;
    // Recompute the totals for the chosen parabolic.
    std::size_t idx = 0;
    for (const auto& f : g.factors()) {
      for (int copy = 0; copy < f.multiplicity; ++copy, ++idx) {
        const auto p = parabolic_profile(f.type, NodeSet::deleted(f.type, st.choice[idx]));
        w.dim_Pu += p.dim_Pu;
        w.dim_unip_rad += p.dim_unip_rad;
      }
    }
    return w;
  }
  return std::nullopt;
}

}  // namespace embedlie
