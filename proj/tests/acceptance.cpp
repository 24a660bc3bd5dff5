// Acceptance checks: one PASS or FAIL line per criterion, exit status 1 if
// any fails.

#include "oracles.hpp"

#include "robusta/errors.hpp"
#include "robusta/fan.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

using namespace robusta;
using namespace robusta::testing;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream note;

  /// Records a failed clause; returns the condition for chaining.
  bool require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      note << " [failed: " << what << "]";
    }
    return ok;
  }
};

struct Criterion {
  int id;
  const char* title;
  double seconds_limit;
  std::function<void(Verdict&)> run;
};

bool strict_superset(const std::vector<Binomial>& big, const std::vector<Binomial>& small) {
  return big.size() > small.size() && std::includes(big.begin(), big.end(), small.begin(), small.end());
}

void m4x6(Verdict& v) {
  const auto A = matrix_4x6();
  const auto I = toric_from_matrix(A);
  const auto expected =
      binomials(I.context(), {"b^2*e - a^2*f", "b*c^2 - a*d*f", "a*c^2 - b*d*e", "c^4 - d^2*e*f"});
  v.require(sorted(I.generators()) == expected, "minimal generators");
  const auto r = robust_check(I);
  v.require(r.robust && r.ugb_size == 4 && r.mu == 4, "robust with |UGB| = mu = 4");
  const auto G = graver_basis(kernel_lattice(A));
  v.note << " graver=" << G.size() << " lawrence_like=" << (r.lawrence_like ? "yes" : "no");
  v.require(G.size() > 4, "Graver basis larger than 4");
}

void generic_minor_ugb(Verdict& v) {
  for (int n : {3, 4, 5}) {
    const auto I = generic_minors(2, n);
    const auto r = robust_check(I);
    const auto gens = sorted(I.generators());
    v.require(r.robust && sorted(r.universal_gb) == gens && gens.size() == static_cast<std::size_t>(n * (n - 1) / 2),
              "2x" + std::to_string(n) + " UGB equals the minors");
  }
  for (int n : {3, 4}) {
    const auto I = generic_minors(3, n);
    const auto r = robust_check(I);
    v.note << " 3x" << n << ": |UGB|=" << r.ugb_size << " minors=" << I.size();
    v.require(!r.robust && strict_superset(sorted(r.universal_gb), sorted(I.generators())),
              "3x" + std::to_string(n) + " UGB strictly contains the minors");
  }
}

void chain(Verdict& v) {
  const auto I = ideal("vars: x y z\nx - y\ny - z");
  const auto r = robust_check(I);
  const auto initials = enumerate_initial_ideals(I);
  v.require(!initials.empty(), "initial ideals enumerated");
  for (const auto& M : initials) v.require(M.size() == 2, "every initial ideal has 2 generators");
  v.require(!r.robust && r.ugb_size == 3, "not robust with |UGB| = 3");
}

void lex_equivalence(Verdict& v) {
  std::vector<BinomialIdeal> ideals{generic_minors(2, 3), generic_minors(2, 4)};
  std::size_t non_robust = 0;
  for (const auto& c : quadratic_exhaustion(5, 3))
    if (!c.robust) {
      ideals.push_back(toric_ideal(ideal_lattice(c.generators), c.generators.context()));
      ++non_robust;
    }
  v.require(non_robust > 0, "non-robust quadratic cases present");
  for (const auto& I : ideals) v.require(union_of(lex_orders_sweep(I)) == universal_gb(I), "lex union equals UGB");
  v.note << " ideals=" << ideals.size() << " non_robust_quadratic=" << non_robust;
}

void coprimality(Verdict& v) {
  std::mt19937_64 rng(404);
  std::size_t coprime = 0, planted = 0;
  for (int attempt = 0; (coprime < 10 || planted < 10) && attempt < 20000; ++attempt) {
    const auto A = random_monomial_matrix(rng, 3 + attempt % 2, 10);
    const auto M = minors_of_monomial_matrix(A);
    if (!M.reducible.empty()) continue;
    const auto c = coprimality_criterion(A);
    auto& count = c.coprime ? coprime : planted;
    if (count >= 10) continue;
    ++count;
    v.require(robust_set_check(M.minors).robust() == c.coprime, "minors robust iff coprime");
  }
  v.note << " coprime=" << coprime << " not_coprime=" << planted;
  v.require(coprime >= 10 && planted >= 10, "corpus of 20 split evenly");
}

void betti_generic(Verdict& v) {
  for (int n : {3, 4}) {
    const auto b = betti_robustness_check(generic_minors(2, n));
    const auto tag = "2x" + std::to_string(n);
    v.require(b.exhaustive && b.robust_betti && b.tables.size() == 1, tag + " one Betti table");
    if (b.tables.empty()) continue;
    v.require(b.tables.front().projective_dimension() == n - 1, tag + " pdim = n - 1");
    for (const auto& cone : b.fan.cones) {
      const auto p = resolution_predicates(b.tables.front(), static_cast<std::size_t>(n - 1), cone.initial);
      v.require(cone.initial.is_squarefree() && p.linear && p.cohen_macaulay, tag + " squarefree, linear, CM");
    }
    v.note << " " << tag << ": " << b.initial_ideals << " initial ideals";
  }
}

void lawrence2x5(Verdict& v) {
  const auto A = matrix_2x5();
  const auto I = toric_ideal(lawrence_lift(kernel_lattice(A)), lawrence_context(A.cols()));
  const auto G = graver_basis(ideal_lattice(I));
  const auto mingens = sorted(minimal_generators(I).generators);
  v.require(sorted(G.binomials()) == mingens, "minimal generators equal Graver");
  FanOptions o;
  o.mode = FanMode::Sample;
  o.samples = 50;
  o.seed = 1;
  const auto b = betti_robustness_check(I, o, true);
  v.note << " mu=" << mingens.size() << " seed=1 samples=50 tables=" << b.tables.size();
  v.require(!b.robust_betti && b.tables.size() >= 2, "two sampled Betti tables differ");
}

void properties(Verdict& v) {
  const auto lattices = graver_oracle_lattices(2024, 12);
  v.require(lattices.size() >= 10, "10 Graver lattices");
  for (const auto& L : lattices) v.require(graver_matches_bruteforce(L), "Graver oracle");
  const auto monomial = taylor_corpus(55, 40);
  v.require(monomial.size() >= 10, "10 monomial ideals");
  for (const auto& I : monomial) v.require(graded_betti(I).entries() == taylor_betti(I), "Taylor oracle");
  const auto ideals = ideal_corpus();
  v.require(ideals.size() >= 20, "20 ideals");
  std::mt19937_64 rng(9);
  for (const auto& I : ideals) v.require(order_invariant_and_idempotent(I, rng, 5), "reduced GB invariance");
  const auto robust = robust_instances();
  for (const auto& F : robust) v.require(restrictions_stay_robust(F, rng, 4), "restriction properties");
  v.note << " lattices=" << lattices.size() << " monomial=" << monomial.size() << " ideals=" << ideals.size()
         << " robust=" << robust.size();
}

void quadratic(Verdict& v) {
  const auto cases = quadratic_exhaustion(5, 3);
  std::size_t robust = 0;
  for (const auto& c : cases) {
    robust += c.robust ? 1 : 0;
    v.require(c.robust == (c.shape.kind != QuadraticShape::Kind::NotRobustShape), "robust iff classified");
  }
  v.note << " cases=" << cases.size() << " robust=" << robust;
}

} // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "4 x 6 matrix: toric ideal, robustness and Graver size", 60, m4x6},
      {2, "generic minors: UGB equals minors for 2 x n, strictly larger for 3 x n", 300, generic_minor_ugb},
      {3, "(x - y, y - z): mu = 2 for every order yet not robust", 1, chain},
      {4, "union over lex orders equals the UGB", 300, lex_equivalence},
      {5, "monomial 2 x n minors: robust iff coprime", 600, coprimality},
      {6, "generic 2 x n minors: robust, linear, Cohen-Macaulay Betti tables", 600, betti_generic},
      {7, "Lawrence lift of a 2 x 5 matrix: mingens = Graver, sampled Betti tables differ", 900, lawrence2x5},
      {8, "property suites", 600, properties},
      {9, "quadratic exhaustion: robust iff classified", 1800, quadratic},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(v);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.seconds_limit) v.require(false, "time limit " + std::to_string(static_cast<int>(c.seconds_limit)) + " s");
    failures += v.pass ? 0 : 1;
    std::printf("criterion %d: %s  %s (%.2f s)%s\n", c.id, v.pass ? "PASS" : "FAIL", c.title, secs, v.note.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
