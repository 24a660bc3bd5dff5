#include "robusta/budget.hpp"

#include "robusta/errors.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

namespace robusta {

namespace {

std::uint64_t parse_positive(std::string_view text) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0)
    throw InvalidInput("budget must be a positive integer, got '" + std::string(text) + "'");
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

} // namespace

void Budgets::apply_override(std::string_view spec) {
  spec = trim(spec);
  if (spec.find('=') == std::string_view::npos) {
    const auto v = parse_positive(spec);
    spairs = cells = multidegrees = lex_orders = v;
    return;
  }
  while (!spec.empty()) {
    const auto comma = spec.find(',');
    const auto item = trim(spec.substr(0, comma));
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos)
      throw InvalidInput("budget entry needs key=value: '" + std::string(item) + "'");
    const auto key = trim(item.substr(0, eq));
    const auto value = parse_positive(trim(item.substr(eq + 1)));
    if (key == "spairs") spairs = value;
    else if (key == "cells") cells = value;
    else if (key == "multidegrees") multidegrees = value;
    else if (key == "lex_orders") lex_orders = value;
    else throw InvalidInput("unknown budget key '" + std::string(key) + "'");
  }
}

Budgets Budgets::from_environment() {
  Budgets b;
  if (const char* env = std::getenv("ROBUSTA_BUDGET"); env != nullptr && *env != '\0')
    b.apply_override(env);
  return b;
}

} // namespace robusta
