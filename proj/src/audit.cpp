#include "embedlie/audit.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "embedlie/bounds.hpp"
#include "embedlie/error.hpp"
#include "embedlie/homotopy.hpp"
#include "embedlie/parabolic_search.hpp"

namespace embedlie {

namespace {

// Runs body; any exception or a false return is a failure.
AuditResult timed(std::string name, const std::function<std::string()>& body) {
  AuditResult r;
  r.name = std::move(name);
  const auto start = std::chrono::steady_clock::now();
  try {
    r.detail = body();
    r.passed = true;
  } catch (const std::exception& e) {
    r.detail = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ConsistencyError(what);
}

}  // namespace

GroupExpr random_group_expr(std::mt19937_64& rng, int max_rank, std::int64_t max_affine) {
  const auto types = all_types(max_rank);
  std::uniform_int_distribution<int> n_factors(0, 3);
  std::uniform_int_distribution<std::size_t> pick(0, types.size() - 1);
  std::uniform_int_distribution<int> mult(1, 3);
  std::uniform_int_distribution<std::int64_t> affine(0, max_affine);
  while (true) {
    std::vector<Factor> factors;
    const int count = n_factors(rng);
    for (int i = 0; i < count; ++i) factors.push_back({types[pick(rng)], mult(rng)});
    const auto k = affine(rng);
    if (factors.empty() && k == 0) continue;
    return GroupExpr(std::move(factors), k);
  }
}

AuditResult audit_dimensions(int max_rank) {
  return timed("dimensions", [&] {
    int n = 0;
    for (const auto& t : all_types(max_rank)) {
      dimension(t);
      ++n;
    }
    return std::to_string(n) + " types: closed form = rank + 2|R+|";
  });
}

AuditResult audit_parabolic_identities(int max_rank) {
  return timed("parabolic-identities", [&] {
    std::int64_t checked = 0;
    for (const auto& t : all_types(max_rank)) {
      if (t.rank() > max_rank) continue;
      const RootSystem sys(t);
      const std::uint64_t full = (std::uint64_t{1} << t.rank()) - 1;
      for (std::uint64_t mask = 0; mask <= full; ++mask) {
        const auto kept = NodeSet::from_mask(t, mask);
        const auto p = parabolic_profile(sys, kept);
        require(p.dim_levi_ss == levi_dim_by_classification(t, kept),
                "Levi classification disagrees with root count for " + t.name());
        if (kept.size() + 1 == static_cast<std::size_t>(t.rank())) {
          require(p.dim_P - p.dim_Pu == 1, "dim P - dim P^u != 1 for " + t.name());
        }
        ++checked;
      }
    }
    return std::to_string(checked) + " parabolics";
  });
}

AuditResult audit_good_nodes(int max_rank) {
  return timed("good-nodes", [&] {
    int n = 0;
    for (const auto& t : all_types(max_rank)) {
      const RootSystem sys(t);
      const auto good = good_nodes(sys);
      const int s = paper_choice(t);
      require(std::find(good.begin(), good.end(), s) != good.end(),
              "chosen node " + std::to_string(s) + " of " + t.name() + " is not good");
      if (const auto entry = exceptional_levi_entry(t)) {
        require(certify(sys, s).profile.dim_levi_ss == entry->dim_levi_ss,
                "exceptional Levi dimension mismatch for " + t.name());
      }
      ++n;
    }
    return std::to_string(n) + " types: chosen node is good";
  });
}

AuditResult audit_margins(int max_rank) {
  return timed("margins", [&] {
    int n = 0;
    for (const auto& t : all_types(max_rank)) {
      const RootSystem sys(t);
      margin_audit(sys);
      if (t.classical()) levi_closed_form(sys, paper_choice(t));
      ++n;
    }
    return std::to_string(n) + " types: margin >= 0, closed forms agree";
  });
}

AuditResult audit_homotopy(int max_rank) {
  return timed("homotopy", [&] {
    for (const auto& t : all_types(max_rank)) {
      rational_homotopy_type(t);
      require(pi3_audit(t), "pi_3 is not rank one for " + t.name());
    }
    const auto pairs = coincidence_audit(max_rank);
    require(static_cast<int>(pairs.size()) == max_rank - 2,
            "unexpected number of homotopy coincidences");
    for (const auto& [a, b] : pairs) {
      require(a.family() == Family::B && b.family() == Family::C && a.rank() == b.rank(),
              "unexpected coincidence " + a.name() + " ~ " + b.name());
    }
    return std::to_string(pairs.size()) + " coincidences, all B_m ~ C_m";
  });
}

AuditResult audit_verdicts(int samples, std::uint64_t seed) {
  return timed("verdicts", [&] {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> dim(0, 40);
    for (int i = 0; i < samples; ++i) {
      const auto g = random_group_expr(rng, 8, 20);
      const EmbedQuery q{g, dim(rng)};
      const auto v = verdict(q);  // throws on exclusivity violation
      if (v.kind == VerdictKind::Embeds) {
        const EmbedQuery more{GroupExpr(g.factors(), g.affine_dim() + 1), q.d};
        require(verdict(more).kind == VerdictKind::Embeds,
                "Embeds not monotone in k at " + format_expr(g) + ", d=" + std::to_string(q.d));
      }
      if (v.kind == VerdictKind::ExistsNonEmbeddable) {
        require(verdict({g, q.d + 1}).kind == VerdictKind::ExistsNonEmbeddable,
                "ExistsNonEmbeddable not monotone in d at " + format_expr(g));
      }
    }
    return std::to_string(samples) + " random queries";
  });
}

AuditResult audit_round_trip(int samples, std::uint64_t seed) {
  return timed("round-trip", [&] {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < samples; ++i) {
      const auto g = random_group_expr(rng, 12, 20);
      require(parse_expr(format_expr(g)) == g, "round trip failed for " + format_expr(g));
    }
    return std::to_string(samples) + " expressions";
  });
}

std::vector<AuditResult> run_all_audits() {
  return {audit_dimensions(),  audit_parabolic_identities(), audit_good_nodes(),
          audit_margins(),     audit_homotopy(),             audit_verdicts(),
          audit_round_trip()};
}

}  // namespace embedlie
