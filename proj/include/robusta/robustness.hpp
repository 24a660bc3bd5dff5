#pragma once

#include "robusta/fan.hpp"
#include "robusta/monomial_matrix.hpp"

#include <gmpxx.h>
#include <optional>
#include <string>
#include <vector>

namespace robusta {

struct Component {
  std::vector<std::size_t> variables;
  BinomialIdeal generators; // over the restricted context
};

struct RobustnessReport {
  bool robust = false;
  std::size_t mu = 0;
  std::size_t ugb_size = 0;
  std::size_t graver_size = 0;
  std::vector<Binomial> redundant_elements;
  /// The lattice is a Lawrence lifting up to a permutation of coordinates.
  bool lawrence_like = false;
  bool graver_equals_mingens = false;
  std::vector<Component> components;
  std::vector<Binomial> minimal_generators;
  std::vector<Binomial> universal_gb;
  std::size_t reduced_gb_count = 0;
  std::size_t initial_ideal_count = 0;
  bool exhaustive = true;
};

/// Robustness of a homogeneous toric ideal: the union of all reduced
/// Groebner bases, and each element tested for membership in the ideal of
/// the others.
RobustnessReport robust_check(const BinomialIdeal& I, const FanOptions& options = {});

struct SetRobustness {
  bool universal = false; // F is a Groebner basis for every term order
  bool minimal = false;   // no element lies in the ideal of the others
  bool robust() const { return universal && minimal; }
  std::uint64_t markings = 0;
  /// A positive weight under which F fails Buchberger's criterion.
  std::optional<std::vector<std::int64_t>> failing_weight;
  std::vector<Binomial> redundant_elements;
};

/// Robustness of the explicit set F: F satisfies Buchberger's criterion for
/// every marking induced by a term order, and is irredundant. No toric
/// hypothesis.
SetRobustness robust_set_check(const BinomialIdeal& F, const Budgets& budgets = {});

/// Blocks of generators connected through shared variables, in order of
/// their smallest generator.
std::vector<Component> irreducible_components(const BinomialIdeal& F);

/// Exact test: some perfect pairing of coordinates has u_i = -u_j on L.
bool is_lawrence_lattice(const Lattice& L);

struct QuadraticShape {
  enum class Kind { Singleton, DeterminantalTwoByN, NotRobustShape };
  Kind kind = Kind::NotRobustShape;
  std::size_t n = 0;
  /// Row assignment for the determinantal case: column k is (top[k], bottom[k]).
  std::vector<std::size_t> top;
  std::vector<std::size_t> bottom;
};

/// Matches F against {x_i y_j - x_j y_i : i < j} for a 2 x n generic matrix.
/// Throws InvalidInput when a generator is not quadratic.
QuadraticShape classify_quadratic(const BinomialIdeal& F);
std::string to_string(QuadraticShape::Kind kind);

/// c_plus * plus + c_minus * minus with nonzero rational coefficients.
struct ScaledBinomial {
  mpq_class c_plus;
  Monomial plus;
  mpq_class c_minus;
  Monomial minus;
};

struct Rescaling {
  BinomialIdeal ideal;
  /// x_i -> factors[i] * x_i turns every input into a multiple of plus - minus.
  std::vector<mpq_class> factors;
};

/// Torus rescaling to pure differences. Throws NotRescalable naming the
/// obstruction (a sign or a prime) when no rational rescaling exists.
Rescaling rescale_normalize(const VariableContext& ctx, const std::vector<ScaledBinomial>& gens);

/// No monomial occurs as a term of two different elements.
bool terms_pairwise_distinct(const std::vector<Binomial>& F);

struct QuadraticCase {
  BinomialIdeal generators;
  bool robust = false;
  QuadraticShape shape;
};

/// All sets of 1..max_size irreducible quadratic pure differences in
/// max_vars variables, up to permutation of the variables, whose supports
/// are connected and which minimally generate a toric ideal. Each set comes
/// with robust_check and classify_quadratic of that ideal.
std::vector<QuadraticCase> quadratic_exhaustion(std::size_t max_vars, std::size_t max_size,
                                                const Budgets& budgets = {});

} // namespace robusta
