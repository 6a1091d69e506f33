#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace embedlie {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// Labeled simple Lie type X_n.
///
/// Valid ranks: A >= 1, B >= 2, C >= 3, D >= 4, E in {6,7,8}, F = 4, G = 2.
/// The low-rank coincidences (B_1, C_1, C_2, D_2, D_3) are not representable;
/// they show up only as Levi components, where they are labelled by their
/// canonical names (A_1, B_2, A_1 x A_1, A_3).
class SimpleType {
 public:
  /// Throws InvalidInput when the rank is outside the family's range.
  SimpleType(Family family, int rank);

  static bool valid(Family family, int rank) noexcept;
  /// Parses "B4", "E8", ...; no whitespace.
  static SimpleType parse(std::string_view text);

  Family family() const noexcept { return family_; }
  int rank() const noexcept { return rank_; }
  bool classical() const noexcept;
  bool exceptional() const noexcept { return !classical(); }

  /// "B4"
  std::string name() const;

  friend auto operator<=>(const SimpleType&, const SimpleType&) = default;

 private:
  Family family_;
  int rank_;
};

std::optional<Family> family_from_char(char c) noexcept;

/// Every valid type: classical families up to max_rank, then E6, E7, E8, F4, G2.
std::vector<SimpleType> all_types(int max_classical_rank, bool with_exceptional = true);

/// Exceptional types in table order E6, E7, E8, F4, G2.
std::vector<SimpleType> exceptional_types();

}  // namespace embedlie
