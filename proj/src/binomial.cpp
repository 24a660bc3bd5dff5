#include "robusta/binomial.hpp"
#include "robusta/ideal.hpp"

#include "robusta/errors.hpp"

#include <algorithm>
#include <numeric>

namespace robusta {

Binomial Binomial::make(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw InvalidInput("binomial terms from different contexts");
  const auto c = canonical_order(a.size()).compare(a, b);
  if (c == std::strong_ordering::equal) throw InvalidInput("binomial with equal terms is zero");
  return c == std::strong_ordering::greater ? Binomial(a, b) : Binomial(b, a);
}

Binomial Binomial::from_vector(std::span<const std::int64_t> u) {
  return make(positive_part(u), negative_part(u));
}

IntVector Binomial::exponent_vector() const {
  IntVector u(plus_.size());
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = std::int64_t{plus_[i]} - minus_[i];
  return u;
}

std::vector<std::size_t> Binomial::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < plus_.size(); ++i)
    if (plus_[i] > 0 || minus_[i] > 0) s.push_back(i);
  return s;
}

bool Binomial::is_homogeneous(std::span<const std::int64_t> grading) const {
  return plus_.weighted_degree(grading) == minus_.weighted_degree(grading);
}

std::strong_ordering operator<=>(const Binomial& a, const Binomial& b) {
  const auto& order = canonical_order(a.num_vars());
  if (auto c = order.compare(a.plus_, b.plus_); c != 0) return c;
  return order.compare(a.minus_, b.minus_);
}

MarkedBinomial MarkedBinomial::orient(const Binomial& b, const TermOrder& order) {
  return orient(b.plus(), b.minus(), order);
}

MarkedBinomial MarkedBinomial::orient(const Monomial& a, const Monomial& b, const TermOrder& order) {
  const auto c = order.compare(a, b);
  if (c == std::strong_ordering::equal) throw InvalidInput("cannot orient a zero binomial");
  return c == std::strong_ordering::greater ? MarkedBinomial{a, b} : MarkedBinomial{b, a};
}

bool MonomialCanonicalLess::operator()(const Monomial& a, const Monomial& b) const {
  return canonical_order(a.size()).compare(a, b) == std::strong_ordering::less;
}

void canonicalize(std::vector<Binomial>& bs) {
  std::sort(bs.begin(), bs.end());
  bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
}

bool is_irreducible_binomial(const Binomial& b) {
  if (!b.plus().coprime(b.minus())) return false;
  std::int64_t g = 0;
  for (auto v : b.exponent_vector()) g = std::gcd(g, v);
  return g == 1;
}

std::string to_string(const Binomial& b, const VariableContext& ctx) {
  return to_string(b.plus(), ctx) + " - " + to_string(b.minus(), ctx);
}

std::string to_string(const MarkedBinomial& b, const VariableContext& ctx) {
  return to_string(b.lead, ctx) + " - " + to_string(b.trail, ctx);
}

BinomialIdeal::BinomialIdeal(VariableContext ctx, std::vector<Binomial> gens)
    : ctx_(std::move(ctx)), gens_(std::move(gens)) {
  for (const auto& g : gens_)
    if (g.num_vars() != ctx_.size()) throw InvalidInput("generator does not match the variable context");
  canonicalize(gens_);
}

std::vector<IntVector> BinomialIdeal::exponent_vectors() const {
  std::vector<IntVector> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.exponent_vector());
  return out;
}

MonomialIdeal::MonomialIdeal(std::size_t num_vars, std::vector<Monomial> gens) : n_(num_vars) {
  for (const auto& g : gens)
    if (g.size() != n_) throw InvalidInput("monomial does not match the variable count");
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return MonomialCanonicalLess{}(a, b);
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (auto& g : gens) {
    const bool redundant =
        std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& kept) { return kept.divides(g); });
    if (!redundant) gens_.push_back(std::move(g));
  }
  std::sort(gens_.begin(), gens_.end(), MonomialCanonicalLess{});
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

} // namespace robusta
