#include "oracles.hpp"

#include "robusta/groebner.hpp"
#include "robusta/robustness.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace robusta;
using namespace robusta::testing;

namespace {

/// m * g plus a few generator moves applied to one side: the two end
/// points differ by an element of the ideal.
Binomial random_member(std::mt19937_64& rng, const BinomialIdeal& I) {
  const auto n = I.num_vars();
  for (;;) {
    const auto& g = I.generators()[rng() % I.size()];
    Monomial m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, static_cast<std::int32_t>(rng() % 3));
    const Monomial a = m * g.plus();
    Monomial b = m * g.minus();
    for (int step = 0; step < 3; ++step) {
      const auto& h = I.generators()[rng() % I.size()];
      if (h.plus().divides(b)) b = (b / h.plus()) * h.minus();
      else if (h.minus().divides(b)) b = (b / h.minus()) * h.plus();
    }
    if (a != b) return Binomial::make(a, b);
  }
}

} // namespace

TEST_CASE("reduced bases are independent of generator order and idempotent") {
  const auto ideals = ideal_corpus();
  CHECK(ideals.size() >= 20);
  std::mt19937_64 rng(9);
  for (const auto& I : ideals) CHECK(order_invariant_and_idempotent(I, rng, 10));
}

TEST_CASE("S-pairs and reductions of pure differences stay pure differences") {
  const auto ideals = ideal_corpus();
  for (const auto& I : ideals) {
    const auto o = TermOrder::grevlex(I.num_vars());
    const auto G = buchberger_reduced(I, o);
    for (const auto& f : I.generators())
      for (const auto& g : I.generators()) {
        const auto s = s_pair(f, g, o);
        if (!s) continue;
        CHECK(s->plus() != s->minus());
        CHECK(ideal_membership(*s, I));
        const auto r = reduce(*s, G);
        CHECK_FALSE(r.has_value());
      }
  }
}

TEST_CASE("membership soundness on explicit combinations") {
  const auto ideals = ideal_corpus();
  std::mt19937_64 rng(31);
  for (const auto& I : ideals)
    for (int k = 0; k < 10; ++k) CHECK(ideal_membership(random_member(rng, I), I));
}

TEST_CASE("restrictions of every robust instance to variable prefixes stay robust") {
  const auto robust_sets = robust_instances();
  CHECK(robust_sets.size() >= 5);
  std::mt19937_64 rng(77);
  for (const auto& F : robust_sets) CHECK(restrictions_stay_robust(F, rng, 4));
}
