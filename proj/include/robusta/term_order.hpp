#pragma once

#include "robusta/monomial.hpp"

#include <compare>
#include <gmpxx.h>
#include <span>
#include <string>
#include <vector>

namespace robusta {

/// A monomial order given by a stack of integer weight rows followed by a
/// final lex or reverse-lex comparison along a variable permutation.
///
///  - lex(perm): no weight rows; perm[0] is the most significant variable.
///  - grevlex: one all-ones row, then reverse lex with the last variable of
///    the permutation cheapest.
///  - weight(w, tiebreak): w prepended to the rows of tiebreak.
///
/// Rational weights are scaled to a primitive integer row on construction.
class TermOrder {
public:
  enum class Tail { Lex, RevLex };

  static TermOrder lex(std::size_t n);
  static TermOrder lex(std::vector<std::size_t> perm);
  static TermOrder grevlex(std::size_t n);
  static TermOrder grevlex(std::vector<std::size_t> perm);
  /// Weight row w followed by reverse lex along perm. With w a positive
  /// grading this is the order used for saturation (perm.back() cheapest).
  static TermOrder weighted_revlex(std::vector<std::int64_t> w, std::vector<std::size_t> perm);
  static TermOrder weight(std::vector<std::int64_t> w, const TermOrder& tiebreak);
  static TermOrder weight(std::span<const mpq_class> w, const TermOrder& tiebreak);

  std::size_t num_vars() const { return perm_.size(); }
  const std::vector<std::vector<std::int64_t>>& weight_rows() const { return rows_; }
  Tail tail() const { return tail_; }
  const std::vector<std::size_t>& permutation() const { return perm_; }

  /// Total, multiplicative comparison; throws InvalidInput on size mismatch.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::greater;
  }

  std::string describe() const;

private:
  TermOrder(std::vector<std::vector<std::int64_t>> rows, Tail tail, std::vector<std::size_t> perm);

  std::vector<std::vector<std::int64_t>> rows_;
  Tail tail_ = Tail::Lex;
  std::vector<std::size_t> perm_;
};

/// The fixed global order used for canonical binomial forms and membership.
const TermOrder& canonical_order(std::size_t n);

} // namespace robusta
