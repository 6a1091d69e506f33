// Acceptance suite: one PASS/FAIL line per criterion; exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "embedlie/audit.hpp"
#include "embedlie/bounds.hpp"
#include "embedlie/homotopy.hpp"
#include "embedlie/parabolic_search.hpp"
#include "embedlie/tables.hpp"

using namespace embedlie;

namespace {

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int failures = 0;

void criterion(int id, const std::string& title, const std::function<void()>& body) {
  std::string detail;
  bool ok = false;
  const auto start = std::chrono::steady_clock::now();
  try {
    body();
    ok = true;
  } catch (const Failure& f) {
    detail = f.what;
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  std::printf("%s  [%d] %s  (%.3f s)%s%s\n", ok ? "PASS" : "FAIL", id, title.c_str(),
              seconds_since(start), detail.empty() ? "" : "  -- ", detail.c_str());
  if (!ok) ++failures;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  expect(static_cast<bool>(f), "cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Verdict v(const char* expr, std::int64_t d) { return verdict({parse_expr(expr), d}); }

}  // namespace

int main() {
  criterion(1, "dimension cross-check, classical rank <= 12 and exceptional, < 1 s", [] {
    const auto start = std::chrono::steady_clock::now();
    for (const auto& t : all_types(12)) {
      const auto roots = positive_roots(t);
      expect(closed_form_dimension(t) == t.rank() + 2 * static_cast<std::int64_t>(roots.size()),
             "mismatch for " + t.name());
      expect(dimension(t).dim == closed_form_dimension(t), "dimension() disagrees for " + t.name());
    }
    expect(seconds_since(start) < 1.0, "took longer than 1 s");
  });

  criterion(2, "B4 delete node 2: L^u = 13, profile {36, 13, 11, 25, 24}", [] {
    const SimpleType b4{Family::B, 4};
    const auto kept = NodeSet::deleted(b4, {2});
    expect(levi_ss_dim(b4, kept) == 13, "levi_ss_dim != 13");
    const auto p = parabolic_profile(b4, kept);
    expect(p.dim_G == 36 && p.dim_levi_ss == 13 && p.dim_unip_rad == 11 && p.dim_P == 25 &&
               p.dim_Pu == 24,
           "profile mismatch");
  });

  criterion(3, "exceptional Levi dimensions (19, 26, 35, 21, 3); chosen node is good", [] {
    const std::int64_t expected[] = {19, 26, 35, 21, 3};
    const auto types = exceptional_types();
    for (std::size_t i = 0; i < types.size(); ++i) {
      const auto p = certify(types[i], paper_choice(types[i])).profile;
      expect(p.dim_levi_ss == expected[i], "Levi dimension for " + types[i].name());
    }
    for (const auto& t : all_types(12)) {
      const auto good = good_nodes(t);
      expect(std::find(good.begin(), good.end(), paper_choice(t)) != good.end(),
             "chosen node not good for " + t.name());
    }
  });

  criterion(4, "maximal parabolics rank <= 8: dim P - dim P^u = 1, dim G = dim R_u(P) + dim P, < 5 s",
            [] {
              const auto start = std::chrono::steady_clock::now();
              int checked = 0;
              for (const auto& t : all_types(8)) {
                const RootSystem sys(t);
                for (int s = 1; s <= t.rank(); ++s) {
                  const auto p = parabolic_profile(sys, NodeSet::deleted(t, {s}));
                  expect(p.dim_P - p.dim_Pu == 1, t.name() + " node " + std::to_string(s));
                  expect(p.dim_G == p.dim_unip_rad + p.dim_P, t.name() + " node " + std::to_string(s));
                  ++checked;
                }
              }
              expect(checked > 0, "nothing checked");
              expect(seconds_since(start) < 5.0, "took longer than 5 s");
            });

  criterion(5, "margins: A_n (n <= 50) = 2 odd / 1 even; B, C, D (rank <= 50) >= 0", [] {
    for (const auto& t : all_types(50, false)) {
      const auto m = margin_audit(t);
      if (t.family() == Family::A) {
        expect(m == (t.rank() % 2 == 1 ? 2 : 1), "A margin for " + t.name());
      } else {
        expect(m >= 0, "negative margin for " + t.name());
      }
    }
  });

  criterion(6, "rational homotopy table: golden file, sums, coincidences = {(B_m, C_m) : 3 <= m <= 12}",
            [] {
              const std::string table1 =
                  "lie_type\tcomplex_dimension\trational_homotopy_type\n"
                  "A_m, m >= 1\tm^2 + 2m\t{3, 5, ..., 2m+1}\n"
                  "B_m, m >= 2\t2m^2 + m\t{3, 7, ..., 4m-1}\n"
                  "C_m, m >= 3\t2m^2 + m\t{3, 7, ..., 4m-1}\n"
                  "D_m, m >= 4\t2m^2 - m\t{3, 7, ..., 4m-5} u {2m-1}\n"
                  "E_6\t78\t{3, 9, 11, 15, 17, 23}\n"
                  "E_7\t133\t{3, 11, 15, 19, 23, 27, 35}\n"
                  "E_8\t248\t{3, 15, 23, 27, 35, 39, 47, 59}\n"
                  "F_4\t52\t{3, 11, 15, 23}\n"
                  "G_2\t14\t{3, 11}\n";
              const auto emitted = render(emit_table("homotopy"), ReportFormat::Tsv);
              expect(emitted == read_file(std::string(EMBEDLIE_GOLDEN_DIR) + "/homotopy.tsv"),
                     "differs from golden file");
              expect(emitted == table1, "differs from the transcribed table");
              for (const auto& t : all_types(12)) {
                const auto h = rational_homotopy_type(t).entries;
                expect(std::accumulate(h.begin(), h.end(), std::int64_t{0}) ==
                           closed_form_dimension(t),
                       "sum != dim for " + t.name());
              }
              std::vector<std::pair<SimpleType, SimpleType>> expected;
              for (int m = 3; m <= 12; ++m) expected.emplace_back(SimpleType{Family::B, m}, SimpleType{Family::C, m});
              expect(coincidence_audit(12) == expected, "coincidence set mismatch");
            });

  criterion(7, "verdict fixtures", [] {
    expect(v("G2", 6).kind == VerdictKind::Embeds, "G2 d=6");
    expect(v("G2", 7).kind == VerdictKind::ExistsNonEmbeddable, "G2 d=7");
    expect(v("A3", 7).kind == VerdictKind::Unknown, "A3 d=7");
    expect(v("A1^3", 4).kind == VerdictKind::Unknown, "A1^3 d=4");
    expect(v("A2 x Aff1", 4).kind == VerdictKind::Unknown, "A2 x Aff1 d=4");
    expect(v("B2", 4).kind == VerdictKind::Embeds, "B2 d=4");
    expect(v("B2", 5).kind == VerdictKind::ExistsNonEmbeddable, "B2 d=5");
  });

  criterion(8, "fuzz: 10000 verdicts, 1000 round trips, zero violations; verify < 10 s", [] {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<std::int64_t> dim(0, 40);
    for (int i = 0; i < 10000; ++i) {
      const auto g = random_group_expr(rng, 8, 20);
      const EmbedQuery q{g, dim(rng)};
      bool embed = false;
      for (RuleId r : kEmbedRules) embed = embed || evaluate_rule(r, q);
      expect(!(embed && rule_nonembed(q)), "exclusivity violated at " + format_expr(g));
      const auto kind = verdict(q).kind;
      if (kind == VerdictKind::Embeds) {
        expect(verdict({GroupExpr(g.factors(), g.affine_dim() + 1), q.d}).kind == VerdictKind::Embeds,
               "not monotone in k at " + format_expr(g));
      }
      if (kind == VerdictKind::ExistsNonEmbeddable) {
        expect(verdict({g, q.d + 1}).kind == VerdictKind::ExistsNonEmbeddable,
               "not anti-monotone in d at " + format_expr(g));
      }
    }
    for (int i = 0; i < 1000; ++i) {
      const auto g = random_group_expr(rng, 12, 20);
      expect(parse_expr(format_expr(g)) == g, "round trip failed for " + format_expr(g));
    }
    const auto start = std::chrono::steady_clock::now();
    for (const auto& r : run_all_audits()) expect(r.passed, "verify audit " + r.name + ": " + r.detail);
    expect(seconds_since(start) < 10.0, "verify took longer than 10 s");
  });

  std::printf("%d criteria failed\n", failures);
  return failures;
}
