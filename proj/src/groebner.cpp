#include "robusta/groebner.hpp"

#include "robusta/errors.hpp"
#include "robusta/feasibility.hpp"

#include <algorithm>
#include <cassert>

namespace robusta {

std::optional<MarkedBinomial> s_pair(const MarkedBinomial& f, const MarkedBinomial& g, const TermOrder& order) {
  const auto l = lcm(f.lead, g.lead);
  // (l/lt f)(lt f - tr f) - (l/lt g)(lt g - tr g) = (l/lt g) tr g - (l/lt f) tr f
  auto a = (l / g.lead) * g.trail;
  auto b = (l / f.lead) * f.trail;
  if (a == b) return std::nullopt;
  return MarkedBinomial::orient(a, b, order);
}

std::optional<Binomial> s_pair(const Binomial& f, const Binomial& g, const TermOrder& order) {
  auto s = s_pair(MarkedBinomial::orient(f, order), MarkedBinomial::orient(g, order), order);
  if (!s) return std::nullopt;
  return s->canonical();
}

Monomial normal_form(const Monomial& m, std::span<const MarkedBinomial> reducers) {
  Monomial cur = m;
  for (;;) {
    bool reduced = false;
    for (const auto& r : reducers) {
      if (r.lead.divides(cur)) {
        cur = (cur / r.lead) * r.trail;
        reduced = true;
        break;
      }
    }
    if (!reduced) return cur;
  }
}

std::optional<Binomial> reduce(const Binomial& b, std::span<const MarkedBinomial> G) {
  auto p = normal_form(b.plus(), G);
  auto q = normal_form(b.minus(), G);
  if (p == q) return std::nullopt;
  return Binomial::make(p, q);
}

std::optional<Binomial> reduce(const Binomial& b, std::span<const Binomial> G, const TermOrder& order) {
  std::vector<MarkedBinomial> marked;
  marked.reserve(G.size());
  for (const auto& g : G) marked.push_back(MarkedBinomial::orient(g, order));
  return reduce(b, marked);
}

BuchbergerEngine::BuchbergerEngine(TermOrder order, std::uint64_t spair_budget, std::vector<std::int64_t> grading)
    : order_(std::move(order)), budget_(spair_budget), grading_(std::move(grading)) {
  if (grading_.empty()) grading_.assign(order_.num_vars(), 1);
  if (grading_.size() != order_.num_vars()) throw InvalidInput("grading length does not match the term order");
}

std::int64_t BuchbergerEngine::degree_of(const Monomial& m) const { return m.weighted_degree(grading_); }

Monomial BuchbergerEngine::normal_form(const Monomial& m) const {
  Monomial cur = m;
  for (;;) {
    const auto mask = cur.support_mask();
    bool reduced = false;
    for (auto idx : basis_) {
      const auto& e = all_[idx];
      if ((e.lead_mask & ~mask) != 0) continue;
      if (e.poly.lead.divides(cur)) {
        cur = (cur / e.poly.lead) * e.poly.trail;
        reduced = true;
        break;
      }
    }
    if (!reduced) return cur;
  }
}

bool BuchbergerEngine::add(const Monomial& a, const Monomial& b) {
  if (a.size() != order_.num_vars() || b.size() != order_.num_vars())
    throw InvalidInput("generator does not match the engine's variable count");
  auto p = normal_form(a);
  auto q = normal_form(b);
  if (p == q) return false;
  auto marked = MarkedBinomial::orient(p, q, order_);
  const auto mask = marked.lead.support_mask();
  all_.push_back(Element{std::move(marked), mask});
  update(all_.size() - 1);
  return true;
}

// Gebauer-Moeller installation of a new basis element h.
void BuchbergerEngine::update(std::size_t h) {
  const auto& lt_h = all_[h].poly.lead;

  struct Candidate {
    std::size_t g;
    Monomial lcm;
    bool coprime;
  };
  std::vector<Candidate> candidates;
  candidates.reserve(basis_.size());
  for (auto g : basis_) {
    const auto& lt_g = all_[g].poly.lead;
    candidates.push_back({g, lcm(lt_h, lt_g), lt_h.coprime(lt_g)});
  }

  // Keep a pair (h,g) only if no other new pair has an lcm dividing its lcm;
  // coprime pairs are always kept at this stage.
  std::vector<bool> alive(candidates.size(), true);
  std::vector<std::size_t> kept;
  for (std::size_t a = 0; a < candidates.size(); ++a) {
    bool drop = false;
    if (!candidates[a].coprime) {
      for (std::size_t b = a + 1; b < candidates.size() && !drop; ++b)
        if (alive[b] && candidates[b].lcm.divides(candidates[a].lcm)) drop = true;
      for (auto b : kept)
        if (!drop && candidates[b].lcm.divides(candidates[a].lcm)) drop = true;
    }
    alive[a] = false;
    if (!drop) kept.push_back(a);
  }

  // Old pairs whose lcm is strictly "covered" by lt(h).
  for (auto it = pairs_.begin(); it != pairs_.end();) {
    if (lt_h.divides(it->lcm) && lcm(all_[it->i].poly.lead, lt_h) != it->lcm &&
        lcm(lt_h, all_[it->j].poly.lead) != it->lcm)
      it = pairs_.erase(it);
    else
      ++it;
  }

  for (auto a : kept) {
    if (candidates[a].coprime) continue;
    const auto g = candidates[a].g;
    const auto deg = degree_of(candidates[a].lcm);
    pairs_.insert(Pair{deg, std::min(g, h), std::max(g, h), std::move(candidates[a].lcm)});
  }

  std::erase_if(basis_, [&](std::size_t g) { return lt_h.divides(all_[g].poly.lead); });
  basis_.push_back(h);
}

void BuchbergerEngine::run_to_degree(std::int64_t d) {
  while (!pairs_.empty() && pairs_.begin()->degree <= d) {
    const Pair p = *pairs_.begin();
    pairs_.erase(pairs_.begin());
    if (++processed_ > budget_)
      throw BudgetExceeded("S-pair budget of " + std::to_string(budget_) + " exhausted");
    auto s = s_pair(all_[p.i].poly, all_[p.j].poly, order_);
    if (!s) continue;
    add(s->lead, s->trail);
  }
}

void BuchbergerEngine::run() { run_to_degree(std::numeric_limits<std::int64_t>::max()); }

std::vector<MarkedBinomial> BuchbergerEngine::basis() const {
  std::vector<MarkedBinomial> out;
  out.reserve(basis_.size());
  for (auto idx : basis_) out.push_back(all_[idx].poly);
  return out;
}

std::vector<MarkedBinomial> BuchbergerEngine::reduced_basis() const {
  std::vector<MarkedBinomial> out;
  out.reserve(basis_.size());
  for (auto idx : basis_) {
    const auto& e = all_[idx].poly;
    auto trail = normal_form(e.trail);
    assert(trail != e.lead);
    out.push_back(MarkedBinomial{e.lead, std::move(trail)});
  }
  std::sort(out.begin(), out.end(), [](const MarkedBinomial& a, const MarkedBinomial& b) {
    return MonomialCanonicalLess{}(a.lead, b.lead);
  });
  return out;
}

std::vector<MarkedBinomial> reduced_groebner_basis(std::span<const Binomial> gens, const TermOrder& order,
                                                   const Budgets& budgets) {
  BuchbergerEngine engine(order, budgets.spairs);
  for (const auto& g : gens) engine.add(g);
  engine.run();
  return engine.reduced_basis();
}

std::vector<MarkedBinomial> buchberger_reduced(const BinomialIdeal& I, const TermOrder& order,
                                               const Budgets& budgets) {
  if (I.empty()) throw InvalidInput("Buchberger needs a nonempty ideal");
  if (order.num_vars() != I.num_vars()) throw InvalidInput("term order does not match the ideal's context");
  return reduced_groebner_basis(I.generators(), order, budgets);
}

std::vector<Binomial> as_canonical_set(std::span<const MarkedBinomial> basis) {
  std::vector<Binomial> out;
  out.reserve(basis.size());
  for (const auto& m : basis) out.push_back(m.canonical());
  canonicalize(out);
  return out;
}

bool satisfies_buchberger_criterion(std::span<const MarkedBinomial> F, const TermOrder& order) {
  for (std::size_t i = 0; i < F.size(); ++i) {
    for (std::size_t j = i + 1; j < F.size(); ++j) {
      if (F[i].lead.coprime(F[j].lead)) continue;
      auto s = s_pair(F[i], F[j], order);
      if (!s) continue;
      if (normal_form(s->lead, F) != normal_form(s->trail, F)) return false;
    }
  }
  return true;
}

bool ideal_membership(const Binomial& b, const BinomialIdeal& I, const Budgets& budgets) {
  if (b.num_vars() != I.num_vars()) throw InvalidInput("binomial does not match the ideal's context");
  if (I.empty()) return false;
  const auto G = buchberger_reduced(I, canonical_order(I.num_vars()), budgets);
  return !reduce(b, G).has_value();
}

bool ideal_membership(const Monomial& m, const BinomialIdeal& I, const Budgets& budgets) {
  if (m.size() != I.num_vars()) throw InvalidInput("monomial does not match the ideal's context");
  if (I.empty()) return false;
  const auto G = buchberger_reduced(I, canonical_order(I.num_vars()), budgets);
  // The normal form of a monomial modulo pure differences is a monomial,
  // never zero.
  (void)normal_form(m, G);
  return false;
}

MonomialIdeal initial_ideal(std::span<const MarkedBinomial> reduced_basis, std::size_t num_vars) {
  std::vector<Monomial> leads;
  leads.reserve(reduced_basis.size());
  for (const auto& g : reduced_basis) leads.push_back(g.lead);
  return MonomialIdeal(num_vars, std::move(leads));
}

MonomialIdeal initial_ideal(const BinomialIdeal& I, const TermOrder& order, const Budgets& budgets) {
  return initial_ideal(buchberger_reduced(I, order, budgets), I.num_vars());
}

MinimalGeneration minimal_generators(const BinomialIdeal& I, const Budgets& budgets) {
  MinimalGeneration out;
  if (I.empty()) return out;
  const auto vectors = I.exponent_vectors();
  auto grading = find_positive_grading(vectors, I.num_vars());
  if (!grading) throw InvalidInput("ideal is not homogeneous under any positive grading");
  out.grading = *grading;

  std::vector<Binomial> candidates = I.generators();
  std::stable_sort(candidates.begin(), candidates.end(), [&](const Binomial& a, const Binomial& b) {
    return a.plus().weighted_degree(out.grading) < b.plus().weighted_degree(out.grading);
  });
  BuchbergerEngine engine(TermOrder::weight(out.grading, canonical_order(I.num_vars())), budgets.spairs,
                          out.grading);
  for (const auto& c : candidates) {
    engine.run_to_degree(c.plus().weighted_degree(out.grading));
    if (engine.reduces_to_zero(c.plus(), c.minus())) continue;
    engine.add(c);
    out.generators.push_back(c);
  }
  canonicalize(out.generators);
  return out;
}

BinomialIdeal restrict_to_variables(const BinomialIdeal& F, std::size_t k) {
  if (k > F.num_vars()) throw InvalidInput("restriction length exceeds the number of variables");
  std::vector<Binomial> kept;
  for (const auto& g : F.generators()) {
    const auto s = g.support();
    if (!s.empty() && s.back() >= k) continue;
    std::vector<Exponent> p(g.plus().exponents().begin(), g.plus().exponents().begin() + static_cast<std::ptrdiff_t>(k));
    std::vector<Exponent> m(g.minus().exponents().begin(), g.minus().exponents().begin() + static_cast<std::ptrdiff_t>(k));
    kept.push_back(Binomial::make(Monomial(std::move(p)), Monomial(std::move(m))));
  }
  if (k == 0) return BinomialIdeal();
  return BinomialIdeal(F.context().prefix(k), std::move(kept));
}

} // namespace robusta
