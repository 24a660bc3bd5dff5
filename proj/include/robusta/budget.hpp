#pragma once

#include <cstdint>
#include <string_view>

namespace robusta {

/// Resource guardrails shared by all pipelines.
struct Budgets {
  std::uint64_t spairs = 1'000'000;       // per Buchberger invocation
  std::uint64_t cells = 1'000'000;        // per arrangement enumeration
  std::uint64_t multidegrees = 1'000'000; // per Betti table
  std::uint64_t lex_orders = 40'320;      // 8!

  /// Applies an override spec: either one integer (all budgets) or a comma
  /// separated list of key=value with keys spairs, cells, multidegrees,
  /// lex_orders. Throws InvalidInput on malformed text.
  void apply_override(std::string_view spec);

  /// Defaults, overridden by the ROBUSTA_BUDGET environment variable if set.
  static Budgets from_environment();
};

} // namespace robusta
