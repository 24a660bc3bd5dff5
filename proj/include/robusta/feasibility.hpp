#pragma once

#include "robusta/integer_matrix.hpp"

#include <optional>
#include <span>
#include <vector>

namespace robusta {

/// One strict homogeneous constraint sign * (vector . w) > 0.
struct StrictConstraint {
  RationalVector vector;
  int sign = 1; // +1 or -1
};

/// Decides exactly whether some w satisfies every constraint strictly, by
/// Fourier-Motzkin elimination over the rationals (on the equivalent system
/// sign * (v . w) >= 1) with Chernikov pruning and removal of dominated rows.
/// On success returns a witness, re-certified by exact dot products.
/// Throws InvalidInput on dimension mismatch.
std::optional<RationalVector> strict_feasible(std::span<const StrictConstraint> constraints, std::size_t dim);

/// Same decision by an exact rational simplex (phase one with an auxiliary
/// variable, Bland's rule) on sign * (v . w) >= 1 with w = p - q, p, q >= 0.
/// Much faster than elimination once the system has a few dozen rows.
std::optional<RationalVector> strict_feasible_lp(std::span<const StrictConstraint> constraints, std::size_t dim);

enum class FeasibilityMethod { FourierMotzkin, Simplex };

std::optional<RationalVector> strict_feasible(std::span<const StrictConstraint> constraints, std::size_t dim,
                                              FeasibilityMethod method);

/// Integer convenience: all constraints v . w > 0; witness scaled to a
/// primitive integer vector.
std::optional<BigVector> strict_feasible_integer(std::span<const BigVector> positive_rows, std::size_t dim);

/// A strictly positive integer vector w with w . v = 0 for every v, or
/// nullopt. Prefers the all-ones vector when it qualifies.
std::optional<std::vector<std::int64_t>> find_positive_grading(std::span<const IntVector> vectors, std::size_t n);

/// Strictly positive integer vector in the row space of A, or nullopt;
/// prefers all-ones.
std::optional<std::vector<std::int64_t>> positive_vector_in_row_space(const IntegerMatrix& A);

} // namespace robusta
