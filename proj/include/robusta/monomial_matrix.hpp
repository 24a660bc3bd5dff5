#pragma once

#include "robusta/ideal.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace robusta {

/// 2 x n matrix of monomials X_1..X_n over Y_1..Y_n.
struct MonomialMatrix {
  VariableContext context;
  std::vector<Monomial> top;
  std::vector<Monomial> bottom;

  /// Throws InvalidInput on ragged rows, wrong monomial sizes or an entry of
  /// degree 0.
  MonomialMatrix(VariableContext ctx, std::vector<Monomial> top, std::vector<Monomial> bottom);
  std::size_t cols() const { return top.size(); }
};

struct MinorSet {
  /// Nonzero minors X_i Y_j - X_j Y_i, canonicalized.
  BinomialIdeal minors;
  /// Column pairs (i, j), i < j, whose minor vanishes or is not an
  /// irreducible binomial.
  std::vector<std::pair<std::size_t, std::size_t>> reducible;
};

MinorSet minors_of_monomial_matrix(const MonomialMatrix& A);

struct CoprimalityResult {
  bool coprime = true;
  /// First offending pair when not coprime: a label such as "z12" (for
  /// gcd(X_1, Y_2)), "X1,X2" or "X1,Y1", and the gcd itself.
  std::string witness_label;
  std::optional<Monomial> witness;
};

/// All 2n entries pairwise coprime. Pairs gcd(X_i, Y_j), i != j, are checked
/// first. Throws HypothesisViolation when some minor is reducible.
CoprimalityResult coprimality_criterion(const MonomialMatrix& A);

} // namespace robusta
