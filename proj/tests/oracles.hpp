#pragma once

#include "support.hpp"

#include "robusta/betti.hpp"
#include "robusta/graver.hpp"
#include "robusta/groebner.hpp"
#include "robusta/monomial_matrix.hpp"
#include "robusta/robustness.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace robusta::testing {

/// Rank over Q by fraction-exact Gaussian elimination.
inline std::size_t rank_q(std::vector<std::vector<mpq_class>> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const mpq_class f = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

/// Betti numbers of S/I from the Taylor complex tensored with the field:
/// in multidegree b the chains are the generator subsets with lcm exactly b,
/// and a face survives in the boundary only when dropping it keeps the lcm.
inline std::map<std::pair<int, int>, std::uint64_t> taylor_betti(const MonomialIdeal& I) {
  const auto& g = I.generators();
  const std::size_t r = g.size();
  std::map<Monomial, std::vector<std::uint32_t>> by_lcm;
  for (std::uint32_t s = 0; s < (1u << r); ++s) {
    Monomial l(I.num_vars());
    for (std::size_t k = 0; k < r; ++k)
      if (s >> k & 1) l = lcm(l, g[k]);
    by_lcm[l].push_back(s);
  }
  std::map<std::pair<int, int>, std::uint64_t> out;
  for (const auto& [b, subsets] : by_lcm) {
    std::map<int, std::vector<std::uint32_t>> chains;
    for (auto s : subsets) chains[__builtin_popcount(s)].push_back(s);
    auto boundary_rank = [&](int i) -> std::size_t {
      // d: C_i -> C_{i-1}
      if (!chains.count(i) || !chains.count(i - 1)) return 0;
      const auto& src = chains[i];
      const auto& dst = chains[i - 1];
      std::vector<std::vector<mpq_class>> m(src.size(), std::vector<mpq_class>(dst.size(), 0));
      for (std::size_t a = 0; a < src.size(); ++a) {
        int sign = 1;
        for (std::size_t k = 0; k < r; ++k) {
          if (!(src[a] >> k & 1)) continue;
          const auto face = src[a] & ~(1u << k);
          const auto it = std::find(dst.begin(), dst.end(), face);
          if (it != dst.end()) m[a][static_cast<std::size_t>(it - dst.begin())] = sign;
          sign = -sign;
        }
      }
      return rank_q(std::move(m));
    };
    for (const auto& [i, cs] : chains) {
      const auto h = cs.size() - boundary_rank(i) - boundary_rank(i + 1);
      if (h > 0) out[{i, static_cast<int>(b.degree())}] += h;
    }
  }
  return out;
}

inline MonomialIdeal random_monomial_ideal(std::mt19937_64& rng, std::size_t n, std::size_t gens, int max_exp) {
  std::vector<Monomial> ms;
  for (std::size_t k = 0; k < gens; ++k) {
    Monomial m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, static_cast<std::int32_t>(rng() % static_cast<std::uint64_t>(max_exp + 1)));
    if (m.is_one()) m.set(rng() % n, 1);
    ms.push_back(m);
  }
  return MonomialIdeal(n, ms);
}

/// Ideals of at most five generators on which the Taylor oracle is cheap.
inline std::vector<MonomialIdeal> taylor_corpus(std::uint64_t seed, int attempts) {
  std::mt19937_64 rng(seed);
  std::vector<MonomialIdeal> out;
  for (int k = 0; k < attempts; ++k) {
    auto I = random_monomial_ideal(rng, 3 + rng() % 3, 2 + rng() % 4, 2);
    if (I.size() <= 5) out.push_back(std::move(I));
  }
  return out;
}

inline std::set<IntVector> as_set(const GraverBasis& G) {
  std::set<IntVector> out;
  for (const auto& v : G.vectors) out.insert(canonical_orientation(v));
  return out;
}

inline std::set<IntVector> within_box(const GraverBasis& G, int box) {
  std::set<IntVector> out;
  for (const auto& v : G.vectors)
    if (std::all_of(v.begin(), v.end(), [&](std::int64_t x) { return x <= box && x >= -box; }))
      out.insert(canonical_orientation(v));
  return out;
}

/// Kernel lattices of random graded 2 x n matrices, n in {4, 5}.
inline std::vector<Lattice> graver_oracle_lattices(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<Lattice> out;
  for (int k = 0; out.size() < count && k < 100; ++k) {
    const std::size_t n = 4 + rng() % 2;
    auto L = kernel_lattice(random_graded_matrix(rng, 2, n, 4));
    if (L.rank() > 0) out.push_back(std::move(L));
  }
  return out;
}

/// Box small enough for brute force, large enough to hold the interesting
/// elements at these sizes.
inline int oracle_box(const Lattice& L) { return L.ambient_dim() == 4 ? 8 : 6; }

inline bool graver_matches_bruteforce(const Lattice& L) {
  const int box = oracle_box(L);
  return within_box(graver_basis(L), box) == as_set(graver_bruteforce(L, box));
}

/// Twenty-plus ideals: toric ideals of random graded matrices, lattice
/// basis ideals (not saturated), and small hand-picked cases.
inline std::vector<BinomialIdeal> ideal_corpus() {
  std::vector<BinomialIdeal> out{toric_from_matrix(matrix_4x6()), generic_minors(2, 3), generic_minors(2, 4),
                                 ideal("vars: x y z\nx - y\ny - z"), ideal("vars: x y z\nx*z - y^2"),
                                 ideal("vars: x y z w\nx^2 - y*z\nx*y - z*w")};
  std::mt19937_64 rng(123);
  while (out.size() < 16) {
    const auto I = toric_from_matrix(random_graded_matrix(rng, 2, 4 + rng() % 3, 4));
    if (!I.empty()) out.push_back(I);
  }
  while (out.size() < 24) {
    const auto A = random_graded_matrix(rng, 2, 5, 3);
    const auto L = kernel_lattice(A);
    if (L.rank() > 0) out.push_back(lattice_ideal_generators(L, default_context(5)));
  }
  return out;
}

inline std::vector<TermOrder> sample_orders(std::size_t n) {
  std::vector<std::size_t> rev(n);
  for (std::size_t i = 0; i < n; ++i) rev[i] = n - 1 - i;
  std::vector<std::int64_t> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<std::int64_t>(1 + (3 * i) % 5);
  return {TermOrder::lex(n), TermOrder::grevlex(n), TermOrder::lex(rev), TermOrder::weight(w, TermOrder::grevlex(n))};
}

/// Shuffles the generators `shuffles` times per order and compares the
/// reduced bases; then feeds a reduced basis back in. Returns false on the
/// first mismatch.
inline bool order_invariant_and_idempotent(const BinomialIdeal& I, std::mt19937_64& rng, int shuffles) {
  for (const auto& o : sample_orders(I.num_vars())) {
    const auto G = buchberger_reduced(I, o);
    const auto ref = as_canonical_set(G);
    for (int k = 0; k < shuffles; ++k) {
      auto gens = I.generators();
      std::shuffle(gens.begin(), gens.end(), rng);
      if (as_canonical_set(reduced_groebner_basis(gens, o)) != ref) return false;
    }
    std::vector<Binomial> again;
    for (const auto& g : G) again.push_back(g.canonical());
    if (reduced_groebner_basis(again, o) != G) return false;
  }
  return true;
}

/// F with variable i renamed to position perm[i].
inline BinomialIdeal permuted(const BinomialIdeal& F, const std::vector<std::size_t>& perm) {
  const auto n = F.num_vars();
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[perm[i]] = F.context().name(i);
  std::vector<Binomial> out;
  for (const auto& b : F.generators()) {
    Monomial p(n), m(n);
    for (std::size_t i = 0; i < n; ++i) {
      p.set(perm[i], b.plus()[i]);
      m.set(perm[i], b.minus()[i]);
    }
    out.push_back(Binomial::make(p, m));
  }
  return BinomialIdeal(VariableContext(names), out);
}

/// Robust generating sets met in the corpus, the quadratic exhaustion and
/// the 2 x 5 minors.
inline std::vector<BinomialIdeal> robust_instances() {
  std::vector<BinomialIdeal> out;
  for (const auto& I : ideal_corpus()) {
    const auto r = robust_check(toric_ideal(ideal_lattice(I), I.context()));
    if (r.robust) out.emplace_back(I.context(), r.universal_gb);
  }
  for (const auto& c : quadratic_exhaustion(5, 3))
    if (c.robust) out.push_back(c.generators);
  out.push_back(generic_minors(2, 5));
  return out;
}

/// Distinct terms, and every restriction to a prefix of the variables (in
/// the given order and `rounds - 1` shuffled ones) is again robust.
inline bool restrictions_stay_robust(const BinomialIdeal& F, std::mt19937_64& rng, int rounds) {
  if (!terms_pairwise_distinct(F.generators())) return false;
  std::vector<std::size_t> perm(F.num_vars());
  std::iota(perm.begin(), perm.end(), 0);
  for (int round = 0; round < rounds; ++round) {
    const auto G = permuted(F, perm);
    for (std::size_t k = 1; k <= G.num_vars(); ++k) {
      const auto R = restrict_to_variables(G, k);
      if (!R.empty() && !robust_set_check(R).robust()) return false;
    }
    std::shuffle(perm.begin(), perm.end(), rng);
  }
  return true;
}

/// 2 x n matrix of monomials of degree 1 or 2 over `pool` variables.
inline MonomialMatrix random_monomial_matrix(std::mt19937_64& rng, std::size_t n, std::size_t pool) {
  const auto ctx = default_context(pool);
  std::vector<Monomial> top, bottom;
  auto entry = [&] {
    Monomial m(pool);
    const auto deg = 1 + rng() % 2;
    for (std::size_t k = 0; k < deg; ++k) {
      const auto v = rng() % pool;
      m.set(v, m[v] + 1);
    }
    return m;
  };
  for (std::size_t k = 0; k < n; ++k) top.push_back(entry());
  for (std::size_t k = 0; k < n; ++k) bottom.push_back(entry());
  return MonomialMatrix(ctx, top, bottom);
}

} // namespace robusta::testing
