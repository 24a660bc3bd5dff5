#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace robusta {

using Exponent = std::int32_t;
/// Integer lattice vector (difference of two exponent vectors).
using IntVector = std::vector<std::int64_t>;

/// Ordered list of distinct variable names. Every monomial of one
/// computation is interpreted against one context.
class VariableContext {
public:
  VariableContext() = default;
  explicit VariableContext(std::vector<std::string> names);

  /// Names "prefix1".."prefixN".
  static VariableContext numbered(const std::string& prefix, std::size_t n);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Context restricted to the first k variables.
  VariableContext prefix(std::size_t k) const;
  /// Context with the given variable indices, in that order.
  VariableContext subset(std::span<const std::size_t> indices) const;

  friend bool operator==(const VariableContext&, const VariableContext&) = default;

private:
  std::vector<std::string> names_;
};

/// Dense exponent vector x^a, a in N^n.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t n) : exps_(n, 0) {}
  explicit Monomial(std::vector<Exponent> exps);
  Monomial(std::initializer_list<Exponent> exps) : Monomial(std::vector<Exponent>(exps)) {}

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<Exponent>& exponents() const { return exps_; }
  void set(std::size_t i, Exponent e);

  std::int64_t degree() const;
  std::int64_t weighted_degree(std::span<const std::int64_t> weights) const;
  bool is_one() const;
  bool is_squarefree() const;
  /// Indices of variables with positive exponent.
  std::vector<std::size_t> support() const;
  /// Bitmask of the support (variables >= 64 fold onto bit 63).
  std::uint64_t support_mask() const;

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; throws InvalidInput when b does not divide a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Lexicographic comparison of exponent vectors (container order only).
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
  std::vector<Exponent> exps_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
/// Highest power of a single variable dividing m.
Exponent exponent_of(const Monomial& m, std::size_t var);

/// Positive and negative parts: u = pos - neg. Throws OverflowError if an
/// entry does not fit an Exponent.
Monomial positive_part(std::span<const std::int64_t> u);
Monomial negative_part(std::span<const std::int64_t> u);

std::string to_string(const Monomial& m, const VariableContext& ctx);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

} // namespace robusta
