#pragma once

#include "robusta/budget.hpp"
#include "robusta/ideal.hpp"
#include "robusta/integer_matrix.hpp"

#include <optional>
#include <span>
#include <vector>

namespace robusta {

/// Sublattice of Z^n given by a basis of linearly independent vectors.
class Lattice {
public:
  Lattice() = default;
  /// Throws InvalidInput if the vectors are not linearly independent.
  Lattice(std::size_t n, std::vector<IntVector> basis);
  /// Lattice generated by arbitrary vectors (basis via Hermite form).
  static Lattice spanned_by(std::size_t n, std::span<const IntVector> generators);

  std::size_t ambient_dim() const { return n_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<IntVector>& basis() const { return basis_; }

  /// Integer coordinates of u in the basis, or nullopt if u is not in L.
  std::optional<BigVector> coordinates(std::span<const std::int64_t> u) const;
  bool contains(std::span<const std::int64_t> u) const { return coordinates(u).has_value(); }
  /// L equals (Q L) intersected with Z^n.
  bool is_saturated() const;

private:
  std::size_t n_ = 0;
  std::vector<IntVector> basis_;
};

/// Positive integer weights; every lattice vector has weighted sum zero.
struct Grading {
  std::vector<std::int64_t> weights;
};

/// a..z for up to 26 variables, x1..xn beyond.
VariableContext default_context(std::size_t n);
/// x1..xn, y1..yn.
VariableContext lawrence_context(std::size_t n);

Lattice kernel_lattice(const IntegerMatrix& A);

/// One binomial x^{u+} - x^{u-} per basis vector.
BinomialIdeal lattice_ideal_generators(const Lattice& L, const VariableContext& ctx);

/// J : (x_1 ... x_n)^infinity for a lattice-basis ideal J homogeneous under
/// the grading, one variable at a time: reduced basis under the grading
/// refined by reverse lex with that variable cheapest, then every element
/// divided by its largest power of the variable. Returns minimal generators.
BinomialIdeal saturate_toric(const BinomialIdeal& J, const Grading& grading, const Budgets& budgets = {});

/// kernel -> lattice basis ideal -> saturation, in minimal-generator form.
/// Throws NoPositiveGrading when the row space of A has no positive vector.
BinomialIdeal toric_from_matrix(const IntegerMatrix& A, const VariableContext& ctx, const Budgets& budgets = {});
BinomialIdeal toric_from_matrix(const IntegerMatrix& A, const Budgets& budgets = {});

/// Toric ideal I_L of a saturated lattice (positive grading found
/// automatically).
BinomialIdeal toric_ideal(const Lattice& L, const VariableContext& ctx, const Budgets& budgets = {});

/// {(u, -u)} in Z^{2n}.
Lattice lawrence_lift(const Lattice& L);

/// Lattice spanned by the exponent vectors of the generators.
Lattice ideal_lattice(const BinomialIdeal& I);

/// True iff I equals the toric ideal of its lattice and that lattice is
/// saturated (so I is prime).
bool is_toric(const BinomialIdeal& I, const Budgets& budgets = {});

} // namespace robusta
