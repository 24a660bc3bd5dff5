#pragma once

#include "robusta/budget.hpp"
#include "robusta/feasibility.hpp"
#include "robusta/groebner.hpp"
#include "robusta/integer_matrix.hpp"
#include "robusta/lattice.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace robusta {

/// Open cell of a central hyperplane arrangement: one strict sign per
/// vector and a witness w with sign * (w . v) > 0 for each.
struct SignCell {
  std::vector<std::int8_t> signs;
  BigVector witness;
};

/// Exact re-check of a cell witness against its vectors.
bool certify_cell(const SignCell& cell, std::span<const IntVector> vectors);

/// All full-dimensional cells of the arrangement {v . w = 0}, one per +/-
/// pair (the first vector is always +). Depth-first over sign prefixes,
/// pruned by exact strict feasibility. Subtrees may be explored by several
/// threads; the output order does not depend on the thread count.
/// Throws BudgetExceeded when more than max_cells cells are found.
std::vector<SignCell> enumerate_cells(std::span<const IntVector> vectors, std::size_t dim,
                                      std::uint64_t max_cells = 1'000'000, unsigned threads = 1,
                                      FeasibilityMethod method = FeasibilityMethod::Simplex);

/// Cells of the arrangement intersected with the open cone {c . w > 0 for
/// every c in fixed}. Cells come with full sign patterns (no symmetry).
std::vector<SignCell> enumerate_cells_in_cone(std::span<const IntVector> vectors, std::span<const IntVector> fixed,
                                              std::size_t dim, std::uint64_t max_cells = 1'000'000,
                                              FeasibilityMethod method = FeasibilityMethod::Simplex);

/// Strictly positive integer weight w on Z^n with w . (B^T z) = y . z for the
/// lattice basis B, up to a positive factor: the minimal-norm preimage of y,
/// scaled to integers and shifted along the grading.
std::vector<std::int64_t> lift_weight(const Lattice& L, std::span<const mpz_class> y,
                                      std::span<const std::int64_t> grading);

enum class FanMode { Cells, Lex, Sample };

struct FanOptions {
  FanMode mode = FanMode::Cells;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  Budgets budgets = {};
};

/// One initial ideal together with its reduced basis and a weight vector
/// (strictly positive, Graver-generic) inducing it.
struct GroebnerCone {
  std::vector<std::int64_t> weight;
  std::vector<MarkedBinomial> basis;
  MonomialIdeal initial;
};

struct FanEnumeration {
  /// Distinct marked reduced bases, sorted by initial ideal.
  std::vector<GroebnerCone> cones;
  /// Distinct reduced bases as unmarked canonical sets, sorted.
  std::vector<std::vector<Binomial>> reduced_gbs;
  std::vector<Binomial> universal_gb;
  std::uint64_t cells = 0;
  std::size_t graver_size = 0;
  /// False for sampling and lex modes.
  bool exhaustive = true;
  FanMode mode = FanMode::Cells;
};

/// Reduced bases of a homogeneous toric ideal over all term orders (Cells),
/// all lex orders (Lex) or seeded random generic weights (Sample).
/// Throws InvalidInput unless I is toric.
FanEnumeration enumerate_fan(const BinomialIdeal& I, const FanOptions& options = {});

std::vector<std::vector<Binomial>> enumerate_reduced_gbs(const BinomialIdeal& I, const FanOptions& options = {});
std::vector<Binomial> universal_gb(const BinomialIdeal& I, const FanOptions& options = {});
std::vector<MonomialIdeal> enumerate_initial_ideals(const BinomialIdeal& I, const FanOptions& options = {});

/// Distinct reduced bases (unmarked) under all n! lex orders. Needs
/// n! <= budgets.lex_orders. Works for any binomial ideal.
std::vector<std::vector<Binomial>> lex_orders_sweep(const BinomialIdeal& I, const Budgets& budgets = {});

/// Union of a family of canonical sets, canonicalized.
std::vector<Binomial> union_of(const std::vector<std::vector<Binomial>>& sets);

std::string to_string(FanMode mode);

} // namespace robusta
