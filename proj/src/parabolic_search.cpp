#include "embedlie/parabolic_search.hpp"

#include "embedlie/error.hpp"

namespace embedlie {

ParabolicCertificate certify(const RootSystem& system, int deleted_node) {
  const auto& type = system.type();
  auto profile = parabolic_profile(system, NodeSet::deleted(type, {deleted_node}));
  ParabolicCertificate cert{type, deleted_node, profile};
  cert.satisfies_3ru = 3 * profile.dim_unip_rad >= profile.dim_Pu;
  cert.margin = profile.dim_G - 2 * profile.dim_levi_ss - 1;
  return cert;
}

ParabolicCertificate certify(const SimpleType& type, int deleted_node) {
  return certify(RootSystem(type), deleted_node);
}

int paper_choice(const SimpleType& type) {
  const int n = type.rank();
  switch (type.family()) {
    case Family::A: return (n + 1) / 2;
    case Family::B:
    case Family::C: return (4 * n + 1) / 6;
    case Family::D: return (4 * n - 1) / 6;
    // Crossed node in the exceptional table, Bourbaki labels.
    case Family::E:
    case Family::F: return 4;
    case Family::G: return 2;
  }
  return 0;
}

std::optional<ExceptionalLeviEntry> exceptional_levi_entry(const SimpleType& type) {
  const SimpleType a1{Family::A, 1};
  const SimpleType a2{Family::A, 2};
  switch (type.family()) {
    case Family::E:
      if (type.rank() == 6) return ExceptionalLeviEntry{19, {a1, a2, a2}};
      if (type.rank() == 7) return ExceptionalLeviEntry{26, {a1, a2, {Family::A, 3}}};
      return ExceptionalLeviEntry{35, {a1, a2, {Family::A, 4}}};
    case Family::F: return ExceptionalLeviEntry{21, {{Family::B, 3}}};
    case Family::G: return ExceptionalLeviEntry{3, {a1}};
    default: return std::nullopt;
  }
}

std::vector<int> good_nodes(const RootSystem& system) {
  std::vector<int> out;
  for (int s = 1; s <= system.rank(); ++s) {
    if (certify(system, s).satisfies_3ru) out.push_back(s);
  }
  if (out.empty()) {
    throw ConsistencyError("no maximal parabolic of " + system.type().name() +
                           " satisfies dim P^u <= 3 dim R_u(P)");
  }
  return out;
}

std::vector<int> good_nodes(const SimpleType& type) { return good_nodes(RootSystem(type)); }

std::int64_t levi_polynomial(const SimpleType& type, int s_in) {
  const std::int64_t n = type.rank();
  const std::int64_t s = s_in;
  const bool in_range = s >= 1 && (type.family() == Family::D ? s <= n - 2 : s <= n);
  if (type.exceptional() || !in_range) {
    throw InvalidInput("no closed form for deleting node " + std::to_string(s_in) + " of " +
                       type.name());
  }
  switch (type.family()) {
    case Family::A: return 2 * s * s - (2 * n + 2) * s + n * n + 2 * n - 1;
    case Family::B:
    case Family::C: return 3 * s * s - (4 * n + 1) * s + 2 * n * n + n - 1;
    case Family::D: {
      const std::int64_t t = s + 1;
      return 3 * t * t - (4 * n + 5) * t + 2 * n * n + 3 * n + 1;
    }
    default: return 0;
  }
}

std::int64_t levi_closed_form(const RootSystem& system, int s) {
  const auto& type = system.type();
  const std::int64_t poly = levi_polynomial(type, s);
  const std::int64_t counted = levi_ss_dim(system, NodeSet::deleted(type, {s}));
  if (poly != counted) {
    throw ConsistencyError("closed-form Levi dimension " + std::to_string(poly) +
                           " disagrees with root count " + std::to_string(counted) + " for " +
                           type.name() + " at s=" + std::to_string(s));
  }
  return poly;
}

std::int64_t levi_closed_form(const SimpleType& type, int s) {
  return levi_closed_form(RootSystem(type), s);
}

std::int64_t margin_formula(const SimpleType& type) {
  const std::int64_t n = type.rank();
  switch (type.family()) {
    case Family::A: return n % 2 == 1 ? 2 : 1;
    case Family::B:
    case Family::C: {
      const std::int64_t x = -((4 * n) % 6);
      // 6 * value = 2(2n^2+n) + 6 + 2x - x^2
      const std::int64_t six = 2 * (2 * n * n + n) + 6 + 2 * x - x * x;
      if (six % 6 != 0) throw ConsistencyError("non-integral margin for " + type.name());
      return six / 6;
    }
    case Family::D: {
      const std::int64_t x = (6 - (4 * n) % 6) % 6;
      const std::int64_t six = 2 * (2 * n * n - n) + 10 * x - x * x - 18;
      if (six % 6 != 0) throw ConsistencyError("non-integral margin for " + type.name());
      return six / 6;
    }
    default:
      throw InvalidInput("no margin formula for exceptional type " + type.name());
  }
}

std::int64_t margin_audit(const RootSystem& system) {
  const auto& type = system.type();
  const auto cert = certify(system, paper_choice(type));
  if (type.classical()) {
    const std::int64_t expected = margin_formula(type);
    if (cert.margin != expected) {
      throw ConsistencyError("margin " + std::to_string(cert.margin) + " for " + type.name() +
                             " disagrees with formula value " + std::to_string(expected));
    }
  } else {
    const auto entry = exceptional_levi_entry(type);
    if (cert.profile.dim_levi_ss != entry->dim_levi_ss) {
      throw ConsistencyError("Levi dimension for " + type.name() + " is " +
                             std::to_string(cert.profile.dim_levi_ss) + ", table says " +
                             std::to_string(entry->dim_levi_ss));
    }
  }
  if (cert.margin < 0) {
    throw ConsistencyError("negative margin " + std::to_string(cert.margin) + " for " +
                           type.name());
  }
  return cert.margin;
}

std::int64_t margin_audit(const SimpleType& type) { return margin_audit(RootSystem(type)); }

}  // namespace embedlie
