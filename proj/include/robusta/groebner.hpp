#pragma once

#include "robusta/budget.hpp"
#include "robusta/ideal.hpp"

#include <optional>
#include <set>
#include <span>
#include <vector>

namespace robusta {

/// S-pair lcm/lt(f)*f - lcm/lt(g)*g of two marked pure-difference binomials.
/// The result is again a pure difference, or zero (nullopt).
std::optional<MarkedBinomial> s_pair(const MarkedBinomial& f, const MarkedBinomial& g,
                                     const TermOrder& order);
std::optional<Binomial> s_pair(const Binomial& f, const Binomial& g, const TermOrder& order);

/// Normal form of a single monomial: repeatedly replace the lead term of the
/// first reducer (in sequence order) dividing it by the corresponding trail.
/// Termination requires the reducers to be marked by a term order.
Monomial normal_form(const Monomial& m, std::span<const MarkedBinomial> reducers);

/// Full normal form of b modulo G marked by order. For pure differences this
/// is NF(plus) - NF(minus), which is zero when the two coincide.
std::optional<Binomial> reduce(const Binomial& b, std::span<const Binomial> G, const TermOrder& order);
std::optional<Binomial> reduce(const Binomial& b, std::span<const MarkedBinomial> G);

/// Incremental Buchberger for pure-difference binomials with the
/// Gebauer-Moeller pair update. Pairs are processed by ascending degree of
/// their lcm under the engine grading, so a run can be truncated at a degree
/// (valid for ideals homogeneous under that grading).
class BuchbergerEngine {
public:
  BuchbergerEngine(TermOrder order, std::uint64_t spair_budget, std::vector<std::int64_t> grading = {});

  const TermOrder& order() const { return order_; }
  /// Reduces a - b by the current basis and inserts it if nonzero.
  bool add(const Monomial& a, const Monomial& b);
  bool add(const Binomial& b) { return add(b.plus(), b.minus()); }

  /// Processes all pending pairs.
  void run();
  /// Processes pending pairs whose lcm has degree <= d.
  void run_to_degree(std::int64_t d);

  Monomial normal_form(const Monomial& m) const;
  bool reduces_to_zero(const Monomial& a, const Monomial& b) const {
    return normal_form(a) == normal_form(b);
  }
  /// Marked elements of the current (minimal) basis in insertion order.
  std::vector<MarkedBinomial> basis() const;
  /// Reduced Groebner basis; only meaningful after run(). Sorted by lead
  /// term under the canonical order.
  std::vector<MarkedBinomial> reduced_basis() const;

  std::uint64_t spairs_processed() const { return processed_; }
  std::size_t pending_pairs() const { return pairs_.size(); }

private:
  struct Element {
    MarkedBinomial poly;
    std::uint64_t lead_mask;
  };
  struct Pair {
    std::int64_t degree;
    std::size_t i;
    std::size_t j;
    Monomial lcm;
    bool operator<(const Pair& o) const {
      if (degree != o.degree) return degree < o.degree;
      if (i != o.i) return i < o.i;
      return j < o.j;
    }
  };

  void update(std::size_t h);
  std::int64_t degree_of(const Monomial& m) const;

  TermOrder order_;
  std::uint64_t budget_;
  std::vector<std::int64_t> grading_;
  std::vector<Element> all_;
  std::vector<std::size_t> basis_;
  std::set<Pair> pairs_;
  std::uint64_t processed_ = 0;
};

/// Reduced Groebner basis of the ideal generated by gens under order.
std::vector<MarkedBinomial> reduced_groebner_basis(std::span<const Binomial> gens, const TermOrder& order,
                                                   const Budgets& budgets = {});
std::vector<MarkedBinomial> buchberger_reduced(const BinomialIdeal& I, const TermOrder& order,
                                               const Budgets& budgets = {});

/// Canonical (unmarked, sorted) form of a marked basis, for set comparisons.
std::vector<Binomial> as_canonical_set(std::span<const MarkedBinomial> basis);

/// True iff every S-pair of F (marked as given) reduces to zero modulo F.
bool satisfies_buchberger_criterion(std::span<const MarkedBinomial> F, const TermOrder& order);

/// Membership via the reduced basis under the canonical grevlex order.
bool ideal_membership(const Binomial& b, const BinomialIdeal& I, const Budgets& budgets = {});
/// A monomial lies in a proper pure-difference ideal never; computed via the
/// normal form for uniformity.
bool ideal_membership(const Monomial& m, const BinomialIdeal& I, const Budgets& budgets = {});

/// Minimal generators of in_<(I).
MonomialIdeal initial_ideal(const BinomialIdeal& I, const TermOrder& order, const Budgets& budgets = {});
MonomialIdeal initial_ideal(std::span<const MarkedBinomial> reduced_basis, std::size_t num_vars);

struct MinimalGeneration {
  std::vector<Binomial> generators;
  std::vector<std::int64_t> grading;
  std::size_t mu() const { return generators.size(); }
};

/// Greedy minimal generating subset by ascending degree under a positive
/// grading (found automatically). Rejects non-homogeneous input.
MinimalGeneration minimal_generators(const BinomialIdeal& I, const Budgets& budgets = {});

/// Generators supported on the first k variables, over the prefix context.
BinomialIdeal restrict_to_variables(const BinomialIdeal& F, std::size_t k);

} // namespace robusta
