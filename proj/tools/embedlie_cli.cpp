// embedlie: embedding-dimension verdicts and Lie-theoretic tables.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "embedlie/audit.hpp"
#include "embedlie/homotopy.hpp"
#include "embedlie/parabolic_search.hpp"
#include "embedlie/query.hpp"
#include "embedlie/tables.hpp"

namespace {

using namespace embedlie;

// Writes to --out if given, else stdout.
void emit(const std::string& body, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw InvalidInput("cannot open '" + out_path + "' for writing");
  f << body;
}

std::string parabolic_rows(const SimpleType& type, const std::vector<int>& nodes) {
  const RootSystem sys(type);
  const int chosen = paper_choice(type);
  std::string out =
      "type\tdeleted_node\tlevi\tdim_G\tdim_levi_ss\tdim_unip_rad\tdim_P\tdim_Pu\tsatisfies_3ru\t"
      "margin\tchosen\n";
  for (int s : nodes) {
    const auto c = certify(sys, s);
    const auto& p = c.profile;
    out += type.name() + "\t" + std::to_string(s) + "\t" +
           format_components(levi_components(type, p.kept)) + "\t" + std::to_string(p.dim_G) +
           "\t" + std::to_string(p.dim_levi_ss) + "\t" + std::to_string(p.dim_unip_rad) + "\t" +
           std::to_string(p.dim_P) + "\t" + std::to_string(p.dim_Pu) + "\t" +
           (c.satisfies_3ru ? "yes" : "no") + "\t" + std::to_string(c.margin) + "\t" +
           (s == chosen ? "yes" : "no") + "\n";
  }
  return out;
}

std::string witness_text(const EmbedQuery& q) {
  const auto w = general_parabolic_witness(q);
  if (!w) return "parabolic diagnostic: no standard parabolic certifies this query\n";
  std::string out = "parabolic diagnostic: deleted nodes per factor";
  for (const auto& nodes : w->deleted_per_factor) {
    out += " {";
    for (std::size_t i = 0; i < nodes.size(); ++i) out += (i ? "," : "") + std::to_string(nodes[i]);
    out += "}";
  }
  out += "; dim P - dim P^u = " + std::to_string(w->dim_P_minus_dim_Pu) +
         ", dim P^u = " + std::to_string(w->dim_Pu) +
         ", dim R_u(P) = " + std::to_string(w->dim_unip_rad) + "\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Embedding-dimension verdicts for algebraic groups and Lie-type tables"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  app.add_option("--out", out_path, "Write the report to this file instead of stdout");

  std::string expr;
  std::int64_t d = -1;
  bool json = false;
  bool diagnose = false;
  auto* verdict_cmd = app.add_subcommand(
      "verdict",
      "Decide whether every smooth affine variety of dimension d embeds into the target. "
      "Exit 0 Embeds, 1 ExistsNonEmbeddable, 2 Unknown. Enter non-reductive groups in "
      "Levi-decomposed form, e.g. 'A2 x Aff3'");
  verdict_cmd->add_option("expr", expr, "Target, e.g. 'B4 x C3', 'A1^3', 'A2 x Aff1'")->required();
  verdict_cmd->add_option("--dim,-d", d, "Dimension of the variety")->required()->check(
      CLI::NonNegativeNumber);
  verdict_cmd->add_flag("--json", json, "Emit a JSON object");
  verdict_cmd->add_flag("--diagnose", diagnose,
                        "Also search general standard parabolics (text output only)");

  std::string table_id;
  std::string format = "tsv";
  auto* tables_cmd = app.add_subcommand("tables", "Regenerate a table");
  tables_cmd->add_option("id", table_id, "dims | parabolic-classical | parabolic-exceptional | "
                                         "homotopy | margins")
      ->required();
  tables_cmd->add_option("--format", format, "tsv or json")
      ->check(CLI::IsMember({"tsv", "json"}));

  std::string type_text;
  int node = 0;
  bool all_nodes = false;
  auto* parabolic_cmd = app.add_subcommand(
      "parabolic", "Dimensions of maximal parabolics (default: the chosen node)");
  parabolic_cmd->add_option("type", type_text, "Lie type, e.g. B4")->required();
  auto* node_opt = parabolic_cmd->add_option("--node", node, "Delete this Bourbaki node");
  parabolic_cmd->add_flag("--all", all_nodes, "Every maximal parabolic")->excludes(node_opt);

  auto* homotopy_cmd = app.add_subcommand("homotopy", "Rational homotopy type of a simple type");
  homotopy_cmd->add_option("type", type_text, "Lie type, e.g. E6")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run every audit; nonzero exit on failure");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (verdict_cmd->parsed()) {
      const auto spec = QuerySpec::parse(expr, d);
      auto result = run_query(spec, json);
      if (diagnose && !json) result.body += witness_text(spec.parsed);
      emit(result.body, out_path);
      return result.exit_code;
    }
    if (tables_cmd->parsed()) {
      const auto report = emit_table(table_id);
      emit(render(report, format == "json" ? ReportFormat::Json : ReportFormat::Tsv), out_path);
      return 0;
    }
    if (parabolic_cmd->parsed()) {
      const auto type = SimpleType::parse(type_text);
      std::vector<int> nodes;
      if (all_nodes) {
        for (int s = 1; s <= type.rank(); ++s) nodes.push_back(s);
      } else if (node_opt->count() > 0) {
        if (node < 1 || node > type.rank()) {
          throw InvalidInput("node " + std::to_string(node) + " out of range 1.." +
                             std::to_string(type.rank()));
        }
        nodes.push_back(node);
      } else {
        nodes.push_back(paper_choice(type));
      }
      emit(parabolic_rows(type, nodes), out_path);
      return 0;
    }
    if (homotopy_cmd->parsed()) {
      const auto type = SimpleType::parse(type_text);
      emit(type.name() + "\t" + format_homotopy(rational_homotopy_type(type)) + "\n", out_path);
      return 0;
    }
    if (verify_cmd->parsed()) {
      bool ok = true;
      std::string body;
      for (const auto& r : run_all_audits()) {
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.3f", r.seconds);
        body += std::string(r.passed ? "PASS" : "FAIL") + "  " + r.name + "  (" + secs +
                " s)  " + r.detail + "\n";
        ok = ok && r.passed;
      }
      emit(body, out_path);
      return ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
