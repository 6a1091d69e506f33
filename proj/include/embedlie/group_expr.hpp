#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "embedlie/error.hpp"
#include "embedlie/simple_type.hpp"

namespace embedlie {

struct Factor {
  SimpleType type;
  int multiplicity = 1;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// A target group G_1^{m_1} x ... x G_r^{m_r} x A^k, kept normalised:
/// factors sorted by type, equal types merged, multiplicities >= 1.
class GroupExpr {
 public:
  /// Throws InvalidInput if there is neither a simple factor nor k >= 1.
  GroupExpr(std::vector<Factor> factors, std::int64_t affine_dim);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  std::int64_t affine_dim() const noexcept { return affine_dim_; }

  /// Number of simple factors counted with multiplicity.
  std::int64_t simple_count() const noexcept;
  /// Dimension of the semisimple part.
  std::int64_t semisimple_dim() const noexcept;
  std::int64_t total_dim() const noexcept { return semisimple_dim() + affine_dim_; }

  bool has_simple_factor() const noexcept { return !factors_.empty(); }
  /// Exactly one simple factor with multiplicity 1.
  bool is_simple_times_affine() const noexcept;
  /// Every simple factor is A_1 (vacuously true with none).
  bool is_sl2_power_times_affine() const noexcept;

  friend bool operator==(const GroupExpr&, const GroupExpr&) = default;

 private:
  std::vector<Factor> factors_;
  std::int64_t affine_dim_ = 0;
};

class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& message, std::size_t position);
  /// 0-based offset into the original text.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Grammar (whitespace is ignored everywhere):
///   EXPR := TERM ("x" TERM)*
///   TERM := TYPE | TYPE "^" INT | "Aff" INT
///   TYPE := [A-G] INT
/// At most one Aff term.
GroupExpr parse_expr(std::string_view text);

/// Canonical text, e.g. "A1^3 x B4 x Aff2". parse_expr(format_expr(e)) == e.
std::string format_expr(const GroupExpr& expr);

}  // namespace embedlie
