#pragma once

#include "robusta/budget.hpp"
#include "robusta/lattice.hpp"

#include <span>
#include <vector>

namespace robusta {

/// Primitive lattice vectors, one per +/- pair, oriented like the canonical
/// binomial x^{u+} - x^{u-} and sorted in canonical binomial order.
struct GraverBasis {
  std::size_t ambient_dim = 0;
  std::vector<IntVector> vectors;

  std::vector<Binomial> binomials() const;
  std::size_t size() const { return vectors.size(); }
};

/// Graver basis through the Lawrence lifting: the minimal generators of
/// J_L, projected back by x^a y^b - x^b y^a -> a - b.
GraverBasis graver_basis(const Lattice& L, const Budgets& budgets = {});

/// Exhaustive oracle: all nonzero lattice vectors with |u_i| <= box, kept
/// iff no other lattice vector is conformally below them. Complete only
/// relative to the box. Throws BudgetExceeded when box > max_box or the box
/// has more than 10^8 points.
GraverBasis graver_bruteforce(const Lattice& L, int box, int max_box = 12);

/// v is conformal to u and |v_i| <= |u_i| componentwise.
bool conformally_below(std::span<const std::int64_t> v, std::span<const std::int64_t> u);

/// Canonical orientation of a nonzero vector (sign of its canonical binomial).
IntVector canonical_orientation(std::span<const std::int64_t> u);

} // namespace robusta
