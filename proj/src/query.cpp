#include "embedlie/query.hpp"

#include "json.hpp"

namespace embedlie {

QuerySpec QuerySpec::parse(const std::string& expr, std::int64_t d) {
  if (d < 0) throw InvalidInput("dimension d must be non-negative");
  return QuerySpec{expr, EmbedQuery{parse_expr(expr), d}};
}

int exit_code(VerdictKind kind) noexcept {
  switch (kind) {
    case VerdictKind::Embeds: return kExitEmbeds;
    case VerdictKind::ExistsNonEmbeddable: return kExitNonEmbeddable;
    case VerdictKind::Unknown: return kExitUnknown;
  }
  return kExitError;
}

QueryOutput run_query(const QuerySpec& spec, bool json) {
  const auto& q = spec.parsed;
  QueryOutput out;
  out.verdict = verdict(q);
  out.exit_code = exit_code(out.verdict.kind);
  const auto& v = out.verdict;
  if (json) {
    nlohmann::ordered_json doc;
    doc["verdict"] = std::string(verdict_name(v.kind));
    doc["rule"] = v.rule ? nlohmann::ordered_json(std::string(rule_name(*v.rule))) : nullptr;
    doc["inequality"] = v.inequality;
    doc["total_dim"] = q.target.total_dim();
    doc["d"] = q.d;
    doc["semantics"] = std::string(verdict_semantics(v.kind));
    out.body = doc.dump() + "\n";
    return out;
  }
  out.body = "target:     " + format_expr(q.target) + "\n";
  out.body += "total_dim:  " + std::to_string(q.target.total_dim()) + "\n";
  out.body += "d:          " + std::to_string(q.d) + "\n";
  out.body += "verdict:    " + std::string(verdict_name(v.kind));
  if (v.rule) out.body += " (" + std::string(rule_name(*v.rule)) + ")";
  out.body += "\ninequality: " + v.inequality + "\n";
  out.body += "semantics:  " + std::string(verdict_semantics(v.kind)) + "\n";
  return out;
}

}  // namespace embedlie
