#include "embedlie/tables.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "embedlie/error.hpp"
#include "embedlie/homotopy.hpp"
#include "embedlie/parabolic_search.hpp"
#include "embedlie/root_system.hpp"
#include "json.hpp"

namespace embedlie {

namespace {

std::string subscripted(const SimpleType& t) {
  return std::string(1, static_cast<char>(t.family())) + "_" + std::to_string(t.rank());
}

Report dims_table() {
  Report r{"dims", {"type", "rank", "positive_roots", "dim_closed_form", "dim_root_count"}, {}};
  for (const auto& t : all_types(kTableMaxRank)) {
    const RootSystem sys(t);
    const auto dims = dimension(sys);
    const auto n_roots = static_cast<std::int64_t>(sys.positive_roots().size());
    r.rows.push_back({t.name(), dims.rank, n_roots, dims.dim, t.rank() + 2 * n_roots});
  }
  return r;
}

Report parabolic_classical_table() {
  Report r{"parabolic-classical",
           {"type", "s", "levi", "dim_levi_ss", "dim_levi_closed_form", "dim_unip_rad", "dim_P",
            "dim_Pu", "satisfies_3ru"},
           {}};
  for (const auto& t : all_types(kTableMaxRank, false)) {
    const RootSystem sys(t);
    const int s = paper_choice(t);
    const auto cert = certify(sys, s);
    const auto& p = cert.profile;
    r.rows.push_back({t.name(), std::int64_t{s}, format_components(levi_components(t, p.kept)),
                      p.dim_levi_ss, levi_closed_form(sys, s), p.dim_unip_rad, p.dim_P, p.dim_Pu,
                      std::string(cert.satisfies_3ru ? "yes" : "no")});
  }
  return r;
}

Report parabolic_exceptional_table() {
  Report r{"parabolic-exceptional",
           {"type", "dim_G", "deleted_node", "levi", "levi_sum", "dim_levi_ss"},
           {}};
  for (const auto& t : exceptional_types()) {
    const RootSystem sys(t);
    const int s = paper_choice(t);
    const auto cert = certify(sys, s);
    const auto comps = levi_components(t, cert.profile.kept);
    const auto entry = exceptional_levi_entry(t);
    if (comps != entry->components || cert.profile.dim_levi_ss != entry->dim_levi_ss) {
      throw ConsistencyError("exceptional Levi factor for " + t.name() + " does not match table");
    }
    std::string sum;
    for (const auto& c : comps) {
      if (!sum.empty()) sum += " + ";
      sum += std::string(1, static_cast<char>(std::tolower(static_cast<char>(c.family())))) +
             "_" + std::to_string(c.rank());
    }
    r.rows.push_back({subscripted(t), cert.profile.dim_G, std::int64_t{s},
                      format_components(comps), sum, cert.profile.dim_levi_ss});
  }
  return r;
}

// A family row of the homotopy table: symbolic text plus a generator that the
// text is checked against for every rank in range.
struct FamilyRow {
  Family family;
  int min_rank;
  std::string label;
  std::string dimension;
  std::string homotopy;
  std::function<std::vector<int>(int)> pattern;
  std::function<std::int64_t(std::int64_t)> dim;
};

std::vector<int> progression(int first, int step, int last) {
  std::vector<int> out;
  for (int v = first; v <= last; v += step) out.push_back(v);
  return out;
}

Report homotopy_table() {
  Report r{"homotopy", {"lie_type", "complex_dimension", "rational_homotopy_type"}, {}};
  const std::vector<FamilyRow> families = {
      {Family::A, 1, "A_m, m >= 1", "m^2 + 2m", "{3, 5, ..., 2m+1}",
       [](int m) { return progression(3, 2, 2 * m + 1); },
       [](std::int64_t m) { return m * m + 2 * m; }},
      {Family::B, 2, "B_m, m >= 2", "2m^2 + m", "{3, 7, ..., 4m-1}",
       [](int m) { return progression(3, 4, 4 * m - 1); },
       [](std::int64_t m) { return 2 * m * m + m; }},
      {Family::C, 3, "C_m, m >= 3", "2m^2 + m", "{3, 7, ..., 4m-1}",
       [](int m) { return progression(3, 4, 4 * m - 1); },
       [](std::int64_t m) { return 2 * m * m + m; }},
      {Family::D, 4, "D_m, m >= 4", "2m^2 - m", "{3, 7, ..., 4m-5} u {2m-1}",
       [](int m) {
         auto v = progression(3, 4, 4 * m - 5);
         v.push_back(2 * m - 1);
         std::sort(v.begin(), v.end());
         return v;
       },
       [](std::int64_t m) { return 2 * m * m - m; }},
  };
  for (const auto& row : families) {
    for (int m = row.min_rank; m <= kTableMaxRank; ++m) {
      const SimpleType t(row.family, m);
      if (rational_homotopy_type(t).entries != row.pattern(m) ||
          closed_form_dimension(t) != row.dim(m)) {
        throw ConsistencyError("homotopy table row '" + row.label + "' fails at m=" +
                               std::to_string(m));
      }
    }
    r.rows.push_back({row.label, row.dimension, row.homotopy});
  }
  for (const auto& t : exceptional_types()) {
    r.rows.push_back({subscripted(t), closed_form_dimension(t),
                      format_homotopy(rational_homotopy_type(t))});
  }
  return r;
}

Report margins_table() {
  Report r{"margins", {"type", "s", "dim_G", "dim_levi_ss", "margin", "margin_formula"}, {}};
  for (const auto& t : all_types(kTableMaxRank)) {
    const RootSystem sys(t);
    const int s = paper_choice(t);
    const auto cert = certify(sys, s);
    const auto audited = margin_audit(sys);
    Cell formula = std::string("-");
    if (t.classical()) formula = margin_formula(t);
    r.rows.push_back({t.name(), std::int64_t{s}, cert.profile.dim_G, cert.profile.dim_levi_ss,
                      audited, formula});
  }
  return r;
}

std::string cell_text(const Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  return std::get<std::string>(c);
}

}  // namespace

const std::vector<std::string>& table_ids() {
  static const std::vector<std::string> ids = {"dims", "parabolic-classical",
                                               "parabolic-exceptional", "homotopy", "margins"};
  return ids;
}

Report emit_table(std::string_view id) {
  if (id == "dims") return dims_table();
  if (id == "parabolic-classical") return parabolic_classical_table();
  if (id == "parabolic-exceptional") return parabolic_exceptional_table();
  if (id == "homotopy") return homotopy_table();
  if (id == "margins") return margins_table();
  throw InvalidInput("unknown table '" + std::string(id) + "'");
}

std::string render(const Report& report, ReportFormat format) {
  if (format == ReportFormat::Tsv) {
    std::string out;
    for (std::size_t i = 0; i < report.columns.size(); ++i) {
      out += (i ? "\t" : "") + report.columns[i];
    }
    out += '\n';
    for (const auto& row : report.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "\t" : "") + cell_text(row[i]);
      out += '\n';
    }
    return out;
  }
  nlohmann::ordered_json doc;
  doc["table"] = report.id;
  doc["columns"] = report.columns;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::visit([&](const auto& v) { obj[report.columns[i]] = v; }, row[i]);
    }
    doc["rows"].push_back(std::move(obj));
  }
  return doc.dump(2) + "\n";
}

}  // namespace embedlie
