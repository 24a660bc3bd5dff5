#include "robusta/monomial_matrix.hpp"

#include "robusta/errors.hpp"

namespace robusta {

MonomialMatrix::MonomialMatrix(VariableContext ctx, std::vector<Monomial> x, std::vector<Monomial> y)
    : context(std::move(ctx)), top(std::move(x)), bottom(std::move(y)) {
  if (top.size() != bottom.size()) throw InvalidInput("monomial matrix rows differ in length");
  if (top.size() < 2) throw InvalidInput("monomial matrix needs at least two columns");
  for (const auto* row : {&top, &bottom})
    for (const auto& m : *row) {
      if (m.size() != context.size()) throw InvalidInput("monomial matrix entry has the wrong number of variables");
      if (m.degree() < 1) throw InvalidInput("monomial matrix entries must have degree at least 1");
    }
}

MinorSet minors_of_monomial_matrix(const MonomialMatrix& A) {
  const auto n = A.cols();
  std::vector<Binomial> gens;
  MinorSet out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto p = A.top[i] * A.bottom[j];
      const auto q = A.top[j] * A.bottom[i];
      if (p == q) {
        out.reducible.emplace_back(i, j);
        continue;
      }
      auto b = Binomial::make(p, q);
      if (!is_irreducible_binomial(b)) out.reducible.emplace_back(i, j);
      gens.push_back(std::move(b));
    }
  out.minors = BinomialIdeal(A.context, std::move(gens));
  return out;
}

CoprimalityResult coprimality_criterion(const MonomialMatrix& A) {
  const auto minors = minors_of_monomial_matrix(A);
  if (!minors.reducible.empty()) {
    const auto [i, j] = minors.reducible.front();
    throw HypothesisViolation("minor of columns " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                              " is not an irreducible binomial");
  }
  const auto n = A.cols();
  CoprimalityResult r;
  auto check = [&](const Monomial& a, const Monomial& b, std::string label) {
    if (!r.coprime) return;
    auto g = gcd(a, b);
    if (!g.is_one()) {
      r.coprime = false;
      r.witness_label = std::move(label);
      r.witness = std::move(g);
    }
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) check(A.top[i], A.bottom[j], "z" + std::to_string(i + 1) + std::to_string(j + 1));
  for (std::size_t i = 0; i < n; ++i) {
    check(A.top[i], A.bottom[i], "X" + std::to_string(i + 1) + ",Y" + std::to_string(i + 1));
    for (std::size_t j = i + 1; j < n; ++j) {
      check(A.top[i], A.top[j], "X" + std::to_string(i + 1) + ",X" + std::to_string(j + 1));
      check(A.bottom[i], A.bottom[j], "Y" + std::to_string(i + 1) + ",Y" + std::to_string(j + 1));
    }
  }
  return r;
}

} // namespace robusta
