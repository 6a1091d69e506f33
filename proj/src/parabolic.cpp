#include "embedlie/parabolic.hpp"

#include <algorithm>
#include <map>

#include "embedlie/error.hpp"

namespace embedlie {

NodeSet::NodeSet(int rank, std::vector<int> kept)
    : rank_(rank), kept_(std::move(kept)), member_(static_cast<std::size_t>(rank), false) {
  std::sort(kept_.begin(), kept_.end());
  if (std::adjacent_find(kept_.begin(), kept_.end()) != kept_.end()) {
    throw InvalidInput("duplicate node in node set");
  }
  for (int label : kept_) {
    if (label < 1 || label > rank_) {
      throw InvalidInput("node " + std::to_string(label) + " out of range 1.." +
                         std::to_string(rank_));
    }
    member_[static_cast<std::size_t>(label - 1)] = true;
  }
}

NodeSet NodeSet::kept(const SimpleType& type, std::vector<int> labels) {
  return NodeSet(type.rank(), std::move(labels));
}

NodeSet NodeSet::deleted(const SimpleType& type, std::vector<int> labels) {
  const NodeSet removed(type.rank(), std::move(labels));
  std::vector<int> keep;
  for (int i = 1; i <= type.rank(); ++i) {
    if (!removed.contains_index(i - 1)) keep.push_back(i);
  }
  return NodeSet(type.rank(), std::move(keep));
}

NodeSet NodeSet::all(const SimpleType& type) { return deleted(type, {}); }
NodeSet NodeSet::none(const SimpleType& type) { return kept(type, {}); }

NodeSet NodeSet::from_mask(const SimpleType& type, std::uint64_t mask) {
  if (type.rank() >= 64) throw InvalidInput("node mask needs rank < 64");
  std::vector<int> keep;
  for (int i = 0; i < type.rank(); ++i) {
    if (mask >> i & 1U) keep.push_back(i + 1);
  }
  return NodeSet(type.rank(), std::move(keep));
}

std::vector<int> NodeSet::deleted_labels() const {
  std::vector<int> out;
  for (int i = 0; i < rank_; ++i) {
    if (!member_[static_cast<std::size_t>(i)]) out.push_back(i + 1);
  }
  return out;
}

bool NodeSet::subset_of(const NodeSet& other) const noexcept {
  if (rank_ != other.rank_) return false;
  return std::all_of(kept_.begin(), kept_.end(),
                     [&](int label) { return other.contains_index(label - 1); });
}

namespace {

void require_matching(const SimpleType& type, const NodeSet& kept) {
  if (kept.rank() != type.rank()) {
    throw InvalidInput("node set of rank " + std::to_string(kept.rank()) +
                       " used with " + type.name());
  }
}

bool supported_in(const Root& root, const NodeSet& kept) {
  for (std::size_t i = 0; i < root.coeffs.size(); ++i) {
    if (root.coeffs[i] != 0 && !kept.contains_index(static_cast<int>(i))) return false;
  }
  return true;
}

std::int64_t roots_inside(const RootSystem& system, const NodeSet& kept) {
  const auto roots = system.positive_roots();
  return std::count_if(roots.begin(), roots.end(),
                       [&](const Root& r) { return supported_in(r, kept); });
}

}  // namespace

std::int64_t levi_ss_dim(const RootSystem& system, const NodeSet& kept) {
  require_matching(system.type(), kept);
  return static_cast<std::int64_t>(kept.size()) + 2 * roots_inside(system, kept);
}

std::int64_t levi_ss_dim(const SimpleType& type, const NodeSet& kept) {
  return levi_ss_dim(RootSystem(type), kept);
}

std::int64_t unipotent_radical_dim(const RootSystem& system, const NodeSet& kept) {
  require_matching(system.type(), kept);
  return static_cast<std::int64_t>(system.positive_roots().size()) - roots_inside(system, kept);
}

std::int64_t unipotent_radical_dim(const SimpleType& type, const NodeSet& kept) {
  return unipotent_radical_dim(RootSystem(type), kept);
}

ParabolicData parabolic_profile(const RootSystem& system, const NodeSet& kept) {
  require_matching(system.type(), kept);
  const std::int64_t inside = roots_inside(system, kept);
  ParabolicData p{system.type(), kept};
  p.dim_G = dimension(system).dim;
  p.dim_levi_ss = static_cast<std::int64_t>(kept.size()) + 2 * inside;
  p.dim_unip_rad = static_cast<std::int64_t>(system.positive_roots().size()) - inside;
  p.dim_P = p.dim_G - p.dim_unip_rad;
  p.dim_Pu = p.dim_levi_ss + p.dim_unip_rad;
  p.codim_count = system.rank() - static_cast<std::int64_t>(kept.size());

  // dim P^u = dim L^u + dim R_u(P) holds by construction; the other two are
  // the real content.
  if (p.dim_P - p.dim_Pu != p.codim_count) {
    throw ConsistencyError("dim P - dim P^u != rank - |I| for " + p.type.name());
  }
  if (p.dim_G != system.rank() + 2 * inside + 2 * p.dim_unip_rad) {
    throw ConsistencyError("root decomposition of dim G fails for " + p.type.name());
  }
  if (p.dim_G != p.dim_unip_rad + p.dim_P) {
    throw ConsistencyError("dim G != dim R_u(P) + dim P for " + p.type.name());
  }
  return p;
}

ParabolicData parabolic_profile(const SimpleType& type, const NodeSet& kept) {
  return parabolic_profile(RootSystem(type), kept);
}

namespace {

// Classifies one connected component (0-based node list) of a subdiagram.
SimpleType classify(const SimpleType& ambient, const std::vector<int>& nodes) {
  const int k = static_cast<int>(nodes.size());
  if (k == 1) return {Family::A, 1};
  const auto cartan = cartan_matrix(ambient);
  const auto len = simple_root_lengths(ambient);

  int max_bond = 1;
  std::map<int, int> degree;
  for (int a : nodes) {
    for (int b : nodes) {
      if (a == b || cartan(a, b) == 0) continue;
      max_bond = std::max(max_bond, cartan(a, b) * cartan(b, a));
      ++degree[a];
    }
  }
  if (max_bond == 3) return {Family::G, 2};
  if (max_bond == 2) {
    if (ambient.family() == Family::F && k == 4) return {Family::F, 4};
    if (k == 2) return {Family::B, 2};
    const int longest = *std::max_element(len.begin(), len.end());
    const auto n_long = std::count_if(nodes.begin(), nodes.end(), [&](int i) {
      return len[static_cast<std::size_t>(i)] == longest;
    });
    // B_k: one short root; C_k: one long root.
    return {n_long == k - 1 ? Family::B : Family::C, k};
  }

  int branch = -1;
  for (auto [node, deg] : degree) {
    if (deg == 3) branch = node;
  }
  if (branch < 0) return {Family::A, k};

  // Arm lengths from the branch node.
  std::vector<int> arms;
  for (int start : nodes) {
    if (start == branch || cartan(start, branch) == 0) continue;
    int arm = 0;
    int prev = branch;
    int cur = start;
    while (cur >= 0) {
      ++arm;
      int nxt = -1;
      for (int b : nodes) {
        if (b != prev && b != cur && cartan(cur, b) != 0) nxt = b;
      }
      prev = cur;
      cur = nxt;
    }
    arms.push_back(arm);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[1] == 1) return {Family::D, k};
  return {Family::E, k};
}

}  // namespace

std::vector<SimpleType> levi_components(const SimpleType& type, const NodeSet& kept) {
  require_matching(type, kept);
  const auto edges = dynkin_edges(type);
  std::vector<int> comp(static_cast<std::size_t>(type.rank()), -1);
  std::vector<SimpleType> out;
  for (int label : kept.labels()) {
    const int seed = label - 1;
    if (comp[static_cast<std::size_t>(seed)] >= 0) continue;
    std::vector<int> nodes{seed};
    comp[static_cast<std::size_t>(seed)] = seed;
    for (std::size_t head = 0; head < nodes.size(); ++head) {
      for (auto [a, b] : edges) {
        for (auto [from, to] : {std::pair{a, b}, std::pair{b, a}}) {
          if (from == nodes[head] && kept.contains_index(to) &&
              comp[static_cast<std::size_t>(to)] < 0) {
            comp[static_cast<std::size_t>(to)] = seed;
            nodes.push_back(to);
          }
        }
      }
    }
    out.push_back(classify(type, nodes));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t levi_dim_by_classification(const SimpleType& type, const NodeSet& kept) {
  std::int64_t total = 0;
  for (const auto& c : levi_components(type, kept)) total += closed_form_dimension(c);
  return total;
}

std::string format_components(const std::vector<SimpleType>& components) {
  if (components.empty()) return "1";
  std::string out;
  for (const auto& c : components) {
    if (!out.empty()) out += " x ";
    out += c.name();
  }
  return out;
}

}  // namespace embedlie
