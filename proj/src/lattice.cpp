#include "robusta/lattice.hpp"

#include "robusta/errors.hpp"
#include "robusta/feasibility.hpp"
#include "robusta/groebner.hpp"

#include <algorithm>
#include <numeric>

namespace robusta {

Lattice::Lattice(std::size_t n, std::vector<IntVector> basis) : n_(n), basis_(std::move(basis)) {
  for (const auto& b : basis_)
    if (b.size() != n_) throw InvalidInput("lattice basis vector has the wrong length");
  if (!basis_.empty() && IntegerMatrix::from_rows(basis_, n_).rank() != basis_.size())
    throw InvalidInput("lattice basis vectors are linearly dependent");
}

Lattice Lattice::spanned_by(std::size_t n, std::span<const IntVector> generators) {
  std::vector<BigVector> rows;
  for (const auto& g : generators) {
    if (g.size() != n) throw InvalidInput("lattice generator has the wrong length");
    rows.push_back(to_big_vector(g));
  }
  std::vector<IntVector> basis;
  for (const auto& r : hermite_basis(std::move(rows))) basis.push_back(to_int_vector(r));
  return Lattice(n, std::move(basis));
}

std::optional<BigVector> Lattice::coordinates(std::span<const std::int64_t> u) const {
  if (u.size() != n_) throw InvalidInput("vector length does not match the lattice");
  if (basis_.empty()) {
    if (std::all_of(u.begin(), u.end(), [](auto x) { return x == 0; })) return BigVector{};
    return std::nullopt;
  }
  // Solve B^T z = u.
  const auto Bt = IntegerMatrix::from_rows(basis_, n_).transpose();
  const auto rhs = to_big_vector(u);
  return solve_integer(Bt, rhs);
}

bool Lattice::is_saturated() const {
  if (basis_.empty()) return true;
  const auto A = IntegerMatrix::from_rows(basis_, n_);
  const auto complement = integer_kernel(A);
  const auto sat = integer_kernel(IntegerMatrix::from_rows(complement, n_));
  // Index one iff every saturated basis vector lies in L.
  return std::all_of(sat.begin(), sat.end(), [&](const IntVector& v) { return contains(v); });
}

VariableContext default_context(std::size_t n) {
  if (n <= 26) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.emplace_back(1, static_cast<char>('a' + i));
    return VariableContext(std::move(names));
  }
  return VariableContext::numbered("x", n);
}

VariableContext lawrence_context(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
  return VariableContext(std::move(names));
}

Lattice kernel_lattice(const IntegerMatrix& A) { return Lattice(A.cols(), integer_kernel(A)); }

BinomialIdeal lattice_ideal_generators(const Lattice& L, const VariableContext& ctx) {
  if (ctx.size() != L.ambient_dim()) throw InvalidInput("context size does not match the lattice");
  std::vector<Binomial> gens;
  for (const auto& u : L.basis()) gens.push_back(Binomial::from_vector(u));
  return BinomialIdeal(ctx, std::move(gens));
}

BinomialIdeal saturate_toric(const BinomialIdeal& J, const Grading& grading, const Budgets& budgets) {
  const auto n = J.num_vars();
  if (grading.weights.size() != n) throw InvalidInput("grading length does not match the ideal");
  if (std::any_of(grading.weights.begin(), grading.weights.end(), [](auto w) { return w <= 0; }))
    throw InvalidInput("grading must be strictly positive");
  for (const auto& g : J.generators())
    if (!g.is_homogeneous(grading.weights)) throw InvalidInput("ideal is not homogeneous under the grading");

  std::vector<Binomial> gens = J.generators();
  for (std::size_t var = 0; var < n; ++var) {
    const bool involved = std::any_of(gens.begin(), gens.end(), [&](const Binomial& b) {
      return b.plus()[var] > 0 || b.minus()[var] > 0;
    });
    if (!involved) continue;
    std::vector<std::size_t> perm;
    for (std::size_t v = 0; v < n; ++v)
      if (v != var) perm.push_back(v);
    perm.push_back(var);
    BuchbergerEngine engine(TermOrder::weighted_revlex(grading.weights, std::move(perm)), budgets.spairs,
                            grading.weights);
    for (const auto& g : gens) engine.add(g);
    engine.run();
    std::vector<Binomial> next;
    for (const auto& g : engine.reduced_basis()) {
      const auto k = std::min(g.lead[var], g.trail[var]);
      Monomial p = g.lead, q = g.trail;
      p.set(var, p[var] - k);
      q.set(var, q[var] - k);
      next.push_back(Binomial::make(p, q));
    }
    canonicalize(next);
    gens = std::move(next);
  }
  return BinomialIdeal(J.context(), minimal_generators(BinomialIdeal(J.context(), std::move(gens)), budgets).generators);
}

BinomialIdeal toric_ideal(const Lattice& L, const VariableContext& ctx, const Budgets& budgets) {
  if (L.rank() == 0) return BinomialIdeal(ctx, {});
  auto grading = find_positive_grading(L.basis(), L.ambient_dim());
  if (!grading) throw NoPositiveGrading("lattice admits no strictly positive grading");
  return saturate_toric(lattice_ideal_generators(L, ctx), Grading{*grading}, budgets);
}

BinomialIdeal toric_from_matrix(const IntegerMatrix& A, const VariableContext& ctx, const Budgets& budgets) {
  if (ctx.size() != A.cols()) throw InvalidInput("context size does not match the matrix columns");
  const auto L = kernel_lattice(A);
  if (L.rank() == 0) return BinomialIdeal(ctx, {});
  auto grading = positive_vector_in_row_space(A);
  if (!grading) throw NoPositiveGrading("row space of the matrix contains no strictly positive vector");
  return saturate_toric(lattice_ideal_generators(L, ctx), Grading{*grading}, budgets);
}

BinomialIdeal toric_from_matrix(const IntegerMatrix& A, const Budgets& budgets) {
  return toric_from_matrix(A, default_context(A.cols()), budgets);
}

Lattice lawrence_lift(const Lattice& L) {
  const auto n = L.ambient_dim();
  std::vector<IntVector> basis;
  for (const auto& u : L.basis()) {
    IntVector lifted(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      lifted[i] = u[i];
      lifted[n + i] = -u[i];
    }
    basis.push_back(std::move(lifted));
  }
  return Lattice(2 * n, std::move(basis));
}

Lattice ideal_lattice(const BinomialIdeal& I) { return Lattice::spanned_by(I.num_vars(), I.exponent_vectors()); }

bool is_toric(const BinomialIdeal& I, const Budgets& budgets) {
  if (I.empty()) return true;
  const auto L = ideal_lattice(I);
  if (!L.is_saturated()) return false;
  const auto T = toric_ideal(L, I.context(), budgets);
  const auto& order = canonical_order(I.num_vars());
  return as_canonical_set(buchberger_reduced(I, order, budgets)) ==
         as_canonical_set(buchberger_reduced(T, order, budgets));
}

} // namespace robusta
