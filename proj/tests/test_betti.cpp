#include "oracles.hpp"

#include "robusta/betti.hpp"
#include "robusta/errors.hpp"
#include "robusta/groebner.hpp"

#include <doctest.h>

#include <map>
#include <random>

using namespace robusta;
using namespace robusta::testing;

namespace {

MonomialIdeal mideal(const std::string& text) { return io::parse_monomial_ideal(text).ideal; }

const VariableContext xy({"x", "y"});

} // namespace

TEST_CASE("upper_koszul_complex examples") {
  const auto I = mideal("vars: x y\nx\ny");
  const auto K = upper_koszul_complex(I, monomial("x*y", xy));
  // {} and both vertices, no edge: two points.
  CHECK(K.faces.size() == 3);
  CHECK_FALSE(K.contains(0b11));
  const auto h = reduced_homology(K);
  CHECK(h[1] == 1);

  // I = (x), b = x: only the empty face, since x / x = 1 is not in I; its
  // reduced homology sits in degree -1.
  const auto J = mideal("vars: x y\nx");
  const auto Kx = upper_koszul_complex(J, monomial("x", xy));
  CHECK(Kx.faces == std::vector<std::uint32_t>{0});
  CHECK(reduced_homology(Kx)[0] == 1);

  const VariableContext ctx({"x1", "x2", "x3", "y1", "y2", "y3"});
  const auto M = mideal("vars: x1 x2 x3 y1 y2 y3\nx1*y2\nx1*y3\nx2*y3");
  const auto Kb = upper_koszul_complex(M, monomial("x1*x2*y2*y3", ctx));
  // Faces are the subsets of {x2,y3}, {x2,y2} or {x1,y2}: the path
  // y3 - x2 - y2 - x1, which is acyclic.
  CHECK(Kb.faces.size() == 8);
  for (auto r : reduced_homology(Kb)) CHECK(r == 0);
}

TEST_CASE("rational_rank") {
  CHECK(rational_rank({{1, 2}, {2, 4}}) == 1);
  CHECK(rational_rank({{1, 0, 1}, {0, 1, 1}, {1, 1, 2}}) == 2);
  CHECK(rational_rank({{3, 0}, {0, 5}}) == 2);
}

TEST_CASE("graded_betti examples") {
  const auto T = graded_betti(mideal("vars: x y\nx\ny"));
  CHECK(T.entries() == std::map<std::pair<int, int>, std::uint64_t>{{{0, 0}, 1}, {{1, 1}, 2}, {{2, 2}, 1}});

  const auto M = graded_betti(mideal("vars: x1 x2 x3 y1 y2 y3\nx1*y2\nx1*y3\nx2*y3"));
  CHECK(M.totals() == std::vector<std::uint64_t>{1, 3, 2});
  CHECK(M.at(1, 2) == 3);
  CHECK(M.at(2, 3) == 2);

  const auto I = generic_minors(2, 4);
  const auto ref = graded_betti(initial_ideal(I, TermOrder::lex(8)));
  CHECK(ref.totals() == std::vector<std::uint64_t>{1, 6, 8, 3});
  for (const auto& in : enumerate_initial_ideals(I)) CHECK(graded_betti(in) == ref);
}

TEST_CASE("graded_betti: multidegree budget") {
  Budgets b;
  b.multidegrees = 3;
  CHECK_THROWS_AS(graded_betti(mideal("vars: x y z\nx*y\ny*z\nx*z"), b), BudgetExceeded);
}

TEST_CASE("Taylor-complex oracle agrees with graded_betti") {
  const auto ideals = taylor_corpus(55, 40);
  CHECK(ideals.size() >= 10);
  for (const auto& I : ideals) CHECK(graded_betti(I).entries() == taylor_betti(I));
  const auto M = mideal("vars: x1 x2 x3 y1 y2 y3\nx1*y2\nx1*y3\nx2*y3");
  CHECK(graded_betti(M).entries() == taylor_betti(M));
}

TEST_CASE("alternating sums match the Hilbert numerator") {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 30; ++k) {
    const auto I = random_monomial_ideal(rng, 3 + rng() % 3, 2 + rng() % 5, 3);
    const auto T = graded_betti(I);
    const auto K = hilbert_numerator(I);
    std::map<int, std::int64_t> alt;
    for (const auto& [key, v] : T.entries()) alt[key.second] += (key.first % 2 ? -1 : 1) * static_cast<std::int64_t>(v);
    for (std::size_t d = 0; d < K.size(); ++d) CHECK(alt[static_cast<int>(d)] == K[d]);
    for (const auto& [j, v] : alt)
      if (j >= static_cast<int>(K.size())) CHECK(v == 0);

    // Shape: beta_0 = {(0,0): 1}, nothing below the diagonal j >= i.
    CHECK(T.at(0, 0) == 1);
    for (const auto& [key, v] : T.entries()) {
      CHECK(key.second >= key.first);
      if (key.first == 0) CHECK(key.second == 0);
      CHECK(key.first <= static_cast<int>(I.num_vars()));
    }
  }
}

TEST_CASE("BettiTable layout and invariants") {
  const auto T = graded_betti(mideal("vars: x1 x2 x3 y1 y2 y3\nx1*y2\nx1*y3\nx2*y3"));
  CHECK(T.projective_dimension() == 2);
  CHECK(T.regularity() == 1);
  CHECK(T.total(1) == 3);
  CHECK(T.to_macaulay() == "       0 1 2\ntotal: 1 3 2\n    0: 1 . .\n    1: . 3 2\n");
}

TEST_CASE("resolution_predicates examples") {
  const auto I = mideal("vars: x y\nx\ny");
  const auto p = resolution_predicates(graded_betti(I), 2, I);
  CHECK(p.cohen_macaulay);
  CHECK(p.linear);
  CHECK(p.squarefree);

  for (const auto& in : enumerate_initial_ideals(generic_minors(2, 3))) {
    const auto q = resolution_predicates(graded_betti(in), 2, in);
    CHECK(q.cohen_macaulay);
    CHECK(q.linear);
    CHECK(q.squarefree);
  }

  const auto nonlinear = mideal("vars: x y\nx^2\ny");
  CHECK_FALSE(resolution_predicates(graded_betti(nonlinear), 2, nonlinear).linear);
  CHECK_FALSE(resolution_predicates(graded_betti(nonlinear), 2, nonlinear).squarefree);
}

TEST_CASE("betti_robustness_check examples") {
  const auto b23 = betti_robustness_check(generic_minors(2, 3));
  CHECK(b23.robust_betti);
  REQUIRE(b23.tables.size() == 1);
  CHECK(b23.tables[0].totals() == std::vector<std::uint64_t>{1, 3, 2});

  const auto principal = betti_robustness_check(ideal("vars: x y z\nx*z - y^2"));
  CHECK(principal.robust_betti);
  CHECK(principal.initial_ideals == 2);

  for (int n : {3, 4}) {
    const auto b = betti_robustness_check(generic_minors(2, n));
    CHECK(b.robust_betti);
    CHECK(b.exhaustive);
    for (const auto& cone : b.fan.cones) {
      const auto q = resolution_predicates(b.tables[0], static_cast<std::size_t>(n - 1), cone.initial);
      CHECK(q.cohen_macaulay);
      CHECK(q.linear);
      CHECK(q.squarefree);
    }
  }
}
