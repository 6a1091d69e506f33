#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "embedlie/simple_type.hpp"

namespace embedlie {

/// Square integer matrix, row-major. Indices are 0-based internally; node
/// labels exposed to users are 1-based Bourbaki labels.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0) {}

  int size() const noexcept { return n_; }
  int& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  int operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<int> data_;
};

/// A root written in the simple-root basis.
struct Root {
  std::vector<int> coeffs;

  int height() const noexcept;
  /// Node i (0-based) occurs with nonzero coefficient.
  bool touches(int i) const noexcept { return coeffs[static_cast<std::size_t>(i)] != 0; }
  bool positive() const noexcept;

  friend bool operator==(const Root&, const Root&) = default;
};

/// Height first, then lexicographic on coefficients.
bool canonical_less(const Root& a, const Root& b) noexcept;

/// Cartan matrix in Bourbaki numbering with entries <alpha_i, alpha_j^vee>,
/// i.e. C(i,j) = 2(alpha_i, alpha_j)/(alpha_j, alpha_j). For B_n alpha_n is
/// short, for C_n alpha_n is long, for F_4 alpha_1, alpha_2 are long, for
/// G_2 alpha_1 is short. So G_2 is [[2,-1],[-3,2]].
IntMatrix cartan_matrix(const SimpleType& type);

/// Squared root lengths of the simple roots, normalised so the shortest is 2.
std::vector<int> simple_root_lengths(const SimpleType& type);

/// Edges of the Dynkin diagram as 0-based node pairs (i < j).
std::vector<std::pair<int, int>> dynkin_edges(const SimpleType& type);

/// Positive roots by breadth-first root-string closure, canonical order.
std::vector<Root> positive_roots(const SimpleType& type);

class RootSystem {
 public:
  /// Builds and checks the Cartan and root-count invariants.
  explicit RootSystem(const SimpleType& type);

  const SimpleType& type() const noexcept { return type_; }
  int rank() const noexcept { return type_.rank(); }
  const IntMatrix& cartan() const noexcept { return cartan_; }
  std::span<const Root> positive_roots() const noexcept { return roots_; }

 private:
  SimpleType type_;
  IntMatrix cartan_;
  std::vector<Root> roots_;
};

struct GroupDims {
  std::int64_t dim = 0;
  std::int64_t rank = 0;
};

/// Dimension from the closed forms a_n = n^2+2n, b_n = c_n = 2n^2+n,
/// d_n = 2n^2-n and the exceptional values 78, 133, 248, 52, 14.
std::int64_t closed_form_dimension(const SimpleType& type) noexcept;

/// Dimension computed from the closed form and from rank + 2|R+|; throws
/// ConsistencyError if they disagree.
GroupDims dimension(const SimpleType& type);
GroupDims dimension(const RootSystem& system);

}  // namespace embedlie
