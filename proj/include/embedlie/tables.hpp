#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace embedlie {

using Cell = std::variant<std::int64_t, std::string>;

/// A regenerated table. Rendering is byte-stable: no locale, no timestamps.
struct Report {
  std::string id;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class ReportFormat { Tsv, Json };

/// Table ids: dims, parabolic-classical, parabolic-exceptional, homotopy, margins.
const std::vector<std::string>& table_ids();

/// Classical ranks covered by the dims, parabolic-classical and margins tables.
inline constexpr int kTableMaxRank = 12;

/// Throws InvalidInput for an unknown id.
Report emit_table(std::string_view id);

std::string render(const Report& report, ReportFormat format);

}  // namespace embedlie
