#pragma once

#include "robusta/monomial.hpp"
#include "robusta/term_order.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace robusta {

/// Pure-difference binomial plus - minus, stored canonically: plus is the
/// larger term under the canonical grevlex order, so x^u - x^v and
/// x^v - x^u share one representative.
class Binomial {
public:
  /// Canonical binomial a - b (up to sign). Throws InvalidInput if a == b.
  static Binomial make(const Monomial& a, const Monomial& b);
  /// Binomial x^{u+} - x^{u-} (canonicalized). u must be nonzero.
  static Binomial from_vector(std::span<const std::int64_t> u);

  const Monomial& plus() const { return plus_; }
  const Monomial& minus() const { return minus_; }
  std::size_t num_vars() const { return plus_.size(); }

  /// plus - minus as an integer vector.
  IntVector exponent_vector() const;
  std::uint64_t support_mask() const { return plus_.support_mask() | minus_.support_mask(); }
  std::vector<std::size_t> support() const;
  std::int64_t degree() const { return std::max(plus_.degree(), minus_.degree()); }
  bool is_homogeneous(std::span<const std::int64_t> grading) const;

  friend bool operator==(const Binomial&, const Binomial&) = default;
  /// Canonical sort: by plus, then minus, both under grevlex.
  friend std::strong_ordering operator<=>(const Binomial& a, const Binomial& b);

private:
  Binomial(Monomial plus, Monomial minus) : plus_(std::move(plus)), minus_(std::move(minus)) {}
  Monomial plus_;
  Monomial minus_;
};

/// A binomial oriented by some term order: lead > trail.
struct MarkedBinomial {
  Monomial lead;
  Monomial trail;

  static MarkedBinomial orient(const Binomial& b, const TermOrder& order);
  static MarkedBinomial orient(const Monomial& a, const Monomial& b, const TermOrder& order);
  Binomial canonical() const { return Binomial::make(lead, trail); }
  friend bool operator==(const MarkedBinomial&, const MarkedBinomial&) = default;
};

/// Canonical sort order for monomials (grevlex), usable as a comparator.
struct MonomialCanonicalLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sorts and removes duplicates.
void canonicalize(std::vector<Binomial>& bs);

/// gcd(plus, minus) == 1 and the exponent vector is primitive.
bool is_irreducible_binomial(const Binomial& b);

std::string to_string(const Binomial& b, const VariableContext& ctx);
std::string to_string(const MarkedBinomial& b, const VariableContext& ctx);

} // namespace robusta
