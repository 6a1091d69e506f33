#pragma once

#include <cstdint>
#include <string>

#include "embedlie/bounds.hpp"

namespace embedlie {

/// A verdict request as typed by the user.
struct QuerySpec {
  std::string raw;
  EmbedQuery parsed;

  /// Throws ParseError / InvalidInput.
  static QuerySpec parse(const std::string& expr, std::int64_t d);
};

/// Process exit codes for `verdict`.
inline constexpr int kExitEmbeds = 0;
inline constexpr int kExitNonEmbeddable = 1;
inline constexpr int kExitUnknown = 2;
inline constexpr int kExitError = 3;

int exit_code(VerdictKind kind) noexcept;

struct QueryOutput {
  Verdict verdict;
  std::string body;
  int exit_code = kExitError;
};

/// Evaluates the verdict and renders it as text or as the JSON object
/// {"verdict", "rule", "inequality", "total_dim", "d", "semantics"}.
QueryOutput run_query(const QuerySpec& spec, bool json);

}  // namespace embedlie
