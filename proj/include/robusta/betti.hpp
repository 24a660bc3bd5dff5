#pragma once

#include "robusta/budget.hpp"
#include "robusta/fan.hpp"
#include "robusta/ideal.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace robusta {

/// Simplicial complex on a vertex list; faces are bitmasks over positions in
/// `vertices`. The empty face (mask 0) is present unless the complex is void.
struct SimplicialComplex {
  std::vector<std::size_t> vertices;
  std::vector<std::uint32_t> faces; // sorted by (size, mask)
  bool contains(std::uint32_t face) const;
};

/// K^b(I) = {sigma subset of supp(b) : x^(b - sigma) in I}.
SimplicialComplex upper_koszul_complex(const MonomialIdeal& I, const Monomial& b);

/// ranks[k + 1] = dim of reduced homology in degree k over Q, for
/// k = -1 .. max face dimension.
std::vector<std::size_t> reduced_homology(const SimplicialComplex& K);

/// Rank over Q of an integer matrix given as dense rows.
std::size_t rational_rank(std::vector<std::vector<std::int64_t>> rows);

/// Graded Betti numbers beta_{i,j}(S/I), keyed by (i, j).
class BettiTable {
public:
  BettiTable() = default;
  explicit BettiTable(std::map<std::pair<int, int>, std::uint64_t> entries);

  std::uint64_t at(int i, int j) const;
  std::uint64_t total(int i) const;
  const std::map<std::pair<int, int>, std::uint64_t>& entries() const { return entries_; }
  /// Largest i with a nonzero entry.
  int projective_dimension() const;
  /// max over entries of j - i.
  int regularity() const;
  /// Totals beta_0, beta_1, ...
  std::vector<std::uint64_t> totals() const;
  /// Triangular layout: column i, row j - i, zeros printed as ".".
  std::string to_macaulay() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;
  friend auto operator<=>(const BettiTable&, const BettiTable&) = default;

private:
  std::map<std::pair<int, int>, std::uint64_t> entries_;
};

/// Multidegrees in the lcm lattice of the generators (lcms of nonempty
/// subsets), sorted. Throws BudgetExceeded beyond max_size elements.
std::vector<Monomial> lcm_lattice(const MonomialIdeal& I, std::uint64_t max_size);

/// Nonzero multigraded Betti numbers beta_{i,b}(S/I), i >= 1.
std::map<std::pair<int, Monomial>, std::uint64_t> multigraded_betti(const MonomialIdeal& I,
                                                                    const Budgets& budgets = {});

/// Graded Betti table of S/I from the upper Koszul complexes.
BettiTable graded_betti(const MonomialIdeal& I, const Budgets& budgets = {});

/// Numerator K(t) of the Hilbert series H(S/I; t) = K(t) / (1 - t)^n, by
/// inclusion-exclusion over generator subsets: coefficient d is
/// sum over subsets s with deg lcm(s) = d of (-1)^|s|. Throws BudgetExceeded
/// above max_generators generators.
std::vector<std::int64_t> hilbert_numerator(const MonomialIdeal& I, std::size_t max_generators = 20);

struct ResolutionPredicates {
  bool cohen_macaulay = false;
  bool linear = false;
  bool squarefree = false;
};

/// Cohen-Macaulay: pdim(S/I) = codim. Linear: all generators of one degree d
/// and beta_{i,j} = 0 unless j = d + i - 1 (i >= 1).
ResolutionPredicates resolution_predicates(const BettiTable& T, std::size_t codim, const MonomialIdeal& I);

struct BettiRobustness {
  bool robust_betti = true;
  /// False when the initial ideals were sampled or the search stopped early.
  bool exhaustive = true;
  std::size_t initial_ideals = 0;
  /// Distinct tables, with for each the index of a cone realizing it.
  std::vector<BettiTable> tables;
  std::vector<std::size_t> representatives;
  FanEnumeration fan;
};

/// Betti tables of the initial ideals of I over the orders selected by
/// options. With stop_on_difference the scan ends at the second distinct
/// table.
BettiRobustness betti_robustness_check(const BinomialIdeal& I, const FanOptions& options = {},
                                       bool stop_on_difference = false);

} // namespace robusta
