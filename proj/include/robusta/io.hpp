#pragma once

#include "robusta/betti.hpp"
#include "robusta/fan.hpp"
#include "robusta/graver.hpp"
#include "robusta/monomial_matrix.hpp"
#include "robusta/robustness.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace robusta::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "robusta/1";

std::string read_file(const std::filesystem::path& path);

/// "rows cols" followed by rows*cols integers. '#' starts a comment.
IntegerMatrix parse_matrix(std::string_view text);

/// factor ("*" factor)* with factor = name ("^" exponent)?, or "1".
Monomial parse_monomial(std::string_view text, const VariableContext& ctx);

/// term ("-" | "+") term, each term an optional rational coefficient
/// followed by a monomial. Rejects more than two terms.
ScaledBinomial parse_binomial(std::string_view text, const VariableContext& ctx);

/// "vars: a b c" then one binomial per line. Coefficients other than +1/-1
/// are normalized by rescale_normalize.
BinomialIdeal parse_ideal(std::string_view text);

struct ParsedMonomialIdeal {
  VariableContext context;
  MonomialIdeal ideal;
};

/// "vars: ..." then one monomial per line.
ParsedMonomialIdeal parse_monomial_ideal(std::string_view text);

/// Optional "vars: ..." line, then "2 n", then 2n monomials (top row first).
/// Without a vars line the variables are the names used, sorted.
MonomialMatrix parse_monomial_matrix(std::string_view text);

/// Inverse of parse_ideal.
std::string format_ideal(const BinomialIdeal& I);

Json to_json(const Binomial& b, const VariableContext& ctx);
Json to_json(const MarkedBinomial& b, const VariableContext& ctx);
Json to_json(const BinomialIdeal& I);
Json to_json(const MonomialIdeal& I, const VariableContext& ctx);
Json to_json(const BettiTable& T);
Json to_json(const GraverBasis& G, const VariableContext& ctx);
Json to_json(const FanEnumeration& fan, const VariableContext& ctx);
Json to_json(const RobustnessReport& r, const VariableContext& ctx);
Json to_json(const SetRobustness& r, const VariableContext& ctx);

/// Wraps a payload with the schema tag and a kind.
Json document(std::string_view kind, Json payload);

} // namespace robusta::io
