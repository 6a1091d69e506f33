#pragma once

#include <string>
#include <utility>
#include <vector>

#include "embedlie/simple_type.hpp"

namespace embedlie {

/// Degrees of the basic Weyl group invariants, sorted ascending.
struct WeylDegrees {
  std::vector<int> degrees;
};

WeylDegrees weyl_degrees(const SimpleType& type);

/// Rational homotopy type {2 d_i - 1} of the simply connected group, sorted.
struct HomotopyType {
  std::vector<int> entries;

  friend bool operator==(const HomotopyType&, const HomotopyType&) = default;
};

/// Throws ConsistencyError if the entries do not sum to dim G or the
/// multiset is malformed (not odd, not >= 3).
HomotopyType rational_homotopy_type(const SimpleType& type);

/// "{3, 7, 7, 11}"
std::string format_homotopy(const HomotopyType& h);

/// Distinct types (classical ranks <= max_rank plus all exceptional types)
/// with equal rational homotopy type, each pair ordered (smaller, larger).
std::vector<std::pair<SimpleType, SimpleType>> coincidence_audit(int max_rank);

/// The entry 3 occurs exactly once, i.e. pi_3 (x) Q = Q.
bool pi3_audit(const SimpleType& type);

}  // namespace embedlie
