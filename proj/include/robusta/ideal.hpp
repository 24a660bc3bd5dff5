#pragma once

#include "robusta/binomial.hpp"

#include <vector>

namespace robusta {

/// Finite set of canonical binomials over a context. Generators are kept
/// sorted and pairwise distinct.
class BinomialIdeal {
public:
  BinomialIdeal() = default;
  BinomialIdeal(VariableContext ctx, std::vector<Binomial> gens);

  const VariableContext& context() const { return ctx_; }
  const std::vector<Binomial>& generators() const { return gens_; }
  std::size_t num_vars() const { return ctx_.size(); }
  bool empty() const { return gens_.empty(); }
  std::size_t size() const { return gens_.size(); }

  std::vector<IntVector> exponent_vectors() const;

  friend bool operator==(const BinomialIdeal&, const BinomialIdeal&) = default;

private:
  VariableContext ctx_;
  std::vector<Binomial> gens_;
};

/// Monomial ideal kept as its minimal generators (an antichain under
/// divisibility), sorted canonically.
class MonomialIdeal {
public:
  MonomialIdeal() = default;
  MonomialIdeal(std::size_t num_vars, std::vector<Monomial> gens);

  std::size_t num_vars() const { return n_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool contains(const Monomial& m) const;
  bool is_squarefree() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
  friend auto operator<=>(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
  std::size_t n_ = 0;
  std::vector<Monomial> gens_;
};

} // namespace robusta
