#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "embedlie/root_system.hpp"

namespace embedlie {

/// The kept simple roots I of a standard parabolic P_I, as 1-based Bourbaki
/// labels. Empty I is the Borel subgroup, full I is G itself.
class NodeSet {
 public:
  static NodeSet kept(const SimpleType& type, std::vector<int> labels);
  static NodeSet deleted(const SimpleType& type, std::vector<int> labels);
  static NodeSet all(const SimpleType& type);
  static NodeSet none(const SimpleType& type);
  /// Bit i (0-based) set means node i+1 is kept. Rank must be < 64.
  static NodeSet from_mask(const SimpleType& type, std::uint64_t mask);

  int rank() const noexcept { return rank_; }
  const std::vector<int>& labels() const noexcept { return kept_; }
  std::vector<int> deleted_labels() const;
  std::size_t size() const noexcept { return kept_.size(); }
  /// 0-based index test.
  bool contains_index(int i) const noexcept { return member_[static_cast<std::size_t>(i)]; }
  bool subset_of(const NodeSet& other) const noexcept;

  friend bool operator==(const NodeSet& a, const NodeSet& b) {
    return a.rank_ == b.rank_ && a.kept_ == b.kept_;
  }

 private:
  NodeSet(int rank, std::vector<int> kept);

  int rank_ = 0;
  std::vector<int> kept_;
  std::vector<bool> member_;
};

struct ParabolicData {
  SimpleType type;
  NodeSet kept;
  std::int64_t dim_G = 0;
  std::int64_t dim_levi_ss = 0;   // dim L^u
  std::int64_t dim_unip_rad = 0;  // dim R_u(P)
  std::int64_t dim_P = 0;
  std::int64_t dim_Pu = 0;  // dim P^u
  std::int64_t codim_count = 0;  // rank - |I|
};

/// |I| + 2 #{positive roots supported in I}.
std::int64_t levi_ss_dim(const RootSystem& system, const NodeSet& kept);
std::int64_t levi_ss_dim(const SimpleType& type, const NodeSet& kept);

/// #{positive roots whose support leaves I}.
std::int64_t unipotent_radical_dim(const RootSystem& system, const NodeSet& kept);
std::int64_t unipotent_radical_dim(const SimpleType& type, const NodeSet& kept);

/// All dimension invariants of P_I. The identities
///   dim P = dim G - dim R_u(P),  dim P^u = dim L^u + dim R_u(P),
///   dim P - dim P^u = rank - |I|,
///   dim G = rank + 2 #{roots in I} + 2 dim R_u(P)
/// are checked and a ConsistencyError is thrown if any fails.
ParabolicData parabolic_profile(const RootSystem& system, const NodeSet& kept);
ParabolicData parabolic_profile(const SimpleType& type, const NodeSet& kept);

/// Simple factors of the Dynkin subdiagram on I, sorted. Degenerate
/// components get their canonical names (a lone node is A1, a two-node
/// double bond is B2).
std::vector<SimpleType> levi_components(const SimpleType& type, const NodeSet& kept);

/// Sum of the dimensions of levi_components; must equal levi_ss_dim.
std::int64_t levi_dim_by_classification(const SimpleType& type, const NodeSet& kept);

/// "A1 x B2", or "1" for the trivial group.
std::string format_components(const std::vector<SimpleType>& components);

}  // namespace embedlie
