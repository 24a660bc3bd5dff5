#include "robusta/robustness.hpp"

#include "robusta/errors.hpp"
#include "robusta/feasibility.hpp"
#include "robusta/graver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace robusta {

namespace {

std::vector<Binomial> without(const std::vector<Binomial>& F, std::size_t skip) {
  std::vector<Binomial> rest;
  rest.reserve(F.size());
  for (std::size_t i = 0; i < F.size(); ++i)
    if (i != skip) rest.push_back(F[i]);
  return rest;
}

std::vector<Binomial> redundant_in(const VariableContext& ctx, const std::vector<Binomial>& F,
                                   const Budgets& budgets) {
  std::vector<Binomial> out;
  for (std::size_t i = 0; i < F.size(); ++i) {
    const BinomialIdeal rest(ctx, without(F, i));
    if (ideal_membership(F[i], rest, budgets)) out.push_back(F[i]);
  }
  return out;
}

} // namespace

RobustnessReport robust_check(const BinomialIdeal& I, const FanOptions& options) {
  RobustnessReport r;
  const auto fan = enumerate_fan(I, options);
  r.universal_gb = fan.universal_gb;
  r.ugb_size = fan.universal_gb.size();
  r.reduced_gb_count = fan.reduced_gbs.size();
  r.initial_ideal_count = fan.cones.size();
  r.exhaustive = fan.exhaustive;
  r.minimal_generators = minimal_generators(I, options.budgets).generators;
  r.mu = r.minimal_generators.size();
  r.redundant_elements = redundant_in(I.context(), r.universal_gb, options.budgets);
  r.robust = r.redundant_elements.empty() && r.ugb_size == r.mu;

  const auto L = ideal_lattice(I);
  auto graver = graver_basis(L, options.budgets).binomials();
  canonicalize(graver);
  r.graver_size = graver.size();
  r.graver_equals_mingens = graver == r.minimal_generators;
  r.lawrence_like = is_lawrence_lattice(L);
  r.components = irreducible_components(BinomialIdeal(I.context(), r.minimal_generators));
  return r;
}

SetRobustness robust_set_check(const BinomialIdeal& F, const Budgets& budgets) {
  SetRobustness r;
  const auto n = F.num_vars();
  const auto& gens = F.generators();
  if (gens.empty()) {
    r.universal = r.minimal = true;
    return r;
  }
  const auto vs = F.exponent_vectors();
  r.universal = true;
  auto test = [&](std::vector<std::int64_t> w) {
    ++r.markings;
    if (!r.universal) return;
    const auto order = TermOrder::weight(w, TermOrder::grevlex(n));
    std::vector<MarkedBinomial> marked;
    for (const auto& g : gens) marked.push_back(MarkedBinomial::orient(g, order));
    if (!satisfies_buchberger_criterion(marked, order)) {
      r.universal = false;
      r.failing_weight = std::move(w);
    }
  };

  if (auto grading = find_positive_grading(vs, n)) {
    const auto L = Lattice::spanned_by(n, vs);
    std::vector<IntVector> coords;
    for (const auto& v : vs) coords.push_back(to_int_vector(*L.coordinates(v)));
    for (const auto& cell : enumerate_cells(coords, L.rank(), budgets.cells)) {
      for (int s : {1, -1}) {
        BigVector y = cell.witness;
        if (s < 0)
          for (auto& x : y) x = -x;
        test(lift_weight(L, y, *grading));
      }
    }
  } else {
    std::vector<IntVector> orthant(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i) orthant[i][i] = 1;
    for (const auto& cell : enumerate_cells_in_cone(vs, orthant, n, budgets.cells)) test(to_int_vector(cell.witness));
  }
  r.redundant_elements = redundant_in(F.context(), gens, budgets);
  r.minimal = r.redundant_elements.empty();
  return r;
}

std::vector<Component> irreducible_components(const BinomialIdeal& F) {
  const auto& gens = F.generators();
  const auto m = gens.size();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<std::size_t, std::size_t> owner; // variable -> some generator using it
  for (std::size_t i = 0; i < m; ++i)
    for (auto v : gens[i].support()) {
      auto [it, fresh] = owner.emplace(v, i);
      if (!fresh) parent[find(i)] = find(it->second);
    }
  std::map<std::size_t, std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < m; ++i) blocks[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> ordered;
  for (auto& [root, members] : blocks) ordered.push_back(members);
  std::sort(ordered.begin(), ordered.end());

  std::vector<Component> out;
  for (const auto& members : ordered) {
    std::set<std::size_t> vars;
    for (auto i : members)
      for (auto v : gens[i].support()) vars.insert(v);
    Component c;
    c.variables.assign(vars.begin(), vars.end());
    std::vector<Binomial> local;
    for (auto i : members) {
      Monomial p(c.variables.size()), q(c.variables.size());
      for (std::size_t k = 0; k < c.variables.size(); ++k) {
        p.set(k, gens[i].plus()[c.variables[k]]);
        q.set(k, gens[i].minus()[c.variables[k]]);
      }
      local.push_back(Binomial::make(p, q));
    }
    c.generators = BinomialIdeal(F.context().subset(c.variables), std::move(local));
    out.push_back(std::move(c));
  }
  return out;
}

bool is_lawrence_lattice(const Lattice& L) {
  const auto n = L.ambient_dim();
  if (n % 2 != 0) return false;
  std::map<IntVector, std::size_t> count;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector col;
    for (const auto& b : L.basis()) col.push_back(b[i]);
    ++count[col];
  }
  for (const auto& [col, k] : count) {
    IntVector neg(col.size());
    std::transform(col.begin(), col.end(), neg.begin(), [](auto x) { return -x; });
    if (neg == col) {
      if (k % 2 != 0) return false;
    } else {
      auto it = count.find(neg);
      if (it == count.end() || it->second != k) return false;
    }
  }
  return true;
}

QuadraticShape classify_quadratic(const BinomialIdeal& F) {
  const auto& gens = F.generators();
  for (const auto& g : gens)
    if (g.plus().degree() != 2 || g.minus().degree() != 2)
      throw InvalidInput("classify_quadratic needs quadratic binomials");
  QuadraticShape shape;
  if (gens.size() == 1) {
    shape.kind = QuadraticShape::Kind::Singleton;
    shape.n = 2;
    return shape;
  }
  std::size_t n = 2;
  while (n * (n - 1) / 2 < gens.size()) ++n;
  if (n * (n - 1) / 2 != gens.size()) return shape;

  const auto nv = F.num_vars();
  std::vector<std::set<std::size_t>> adj(nv);
  std::set<std::size_t> used;
  for (const auto& g : gens)
    for (const auto* t : {&g.plus(), &g.minus()}) {
      if (!t->is_squarefree()) return shape;
      const auto s = t->support();
      adj[s[0]].insert(s[1]);
      adj[s[1]].insert(s[0]);
      used.insert(s.begin(), s.end());
    }
  if (used.size() != 2 * n) return shape;

  std::map<std::size_t, int> color;
  std::queue<std::size_t> q;
  color[*used.begin()] = 0;
  q.push(*used.begin());
  while (!q.empty()) {
    const auto v = q.front();
    q.pop();
    for (auto u : adj[v]) {
      auto it = color.find(u);
      if (it == color.end()) {
        color[u] = 1 - color[v];
        q.push(u);
      } else if (it->second == color[v]) {
        return shape;
      }
    }
  }
  if (color.size() != used.size()) return shape;
  std::vector<std::size_t> part[2];
  for (auto v : used) part[color[v]].push_back(v);
  if (part[0].size() != n || part[1].size() != n) return shape;
  for (auto v : used)
    if (adj[v].size() != n - 1) return shape;

  std::vector<std::size_t> partner;
  std::set<std::size_t> taken;
  for (auto x : part[0]) {
    std::size_t y = nv;
    for (auto cand : part[1])
      if (!adj[x].count(cand)) y = cand;
    if (y == nv || !taken.insert(y).second) return shape;
    partner.push_back(y);
  }
  std::vector<Binomial> expected;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Monomial a(nv), b(nv);
      a.set(part[0][i], 1);
      a.set(partner[j], 1);
      b.set(part[0][j], 1);
      b.set(partner[i], 1);
      expected.push_back(Binomial::make(a, b));
    }
  canonicalize(expected);
  if (expected != gens) return shape;
  shape.kind = QuadraticShape::Kind::DeterminantalTwoByN;
  shape.n = n;
  shape.top = part[0];
  shape.bottom = partner;
  return shape;
}

std::string to_string(QuadraticShape::Kind kind) {
  switch (kind) {
  case QuadraticShape::Kind::Singleton: return "Singleton";
  case QuadraticShape::Kind::DeterminantalTwoByN: return "DeterminantalTwoByN";
  case QuadraticShape::Kind::NotRobustShape: return "NotRobustShape";
  }
  return "NotRobustShape";
}

namespace {

/// Prime factorization of |x| by trial division (inputs are small).
std::map<mpz_class, long> factor(mpz_class x) {
  std::map<mpz_class, long> out;
  if (x < 0) x = -x;
  for (mpz_class p = 2; p * p <= x; ++p) {
    while (x % p == 0) {
      ++out[p];
      x /= p;
    }
  }
  if (x > 1) ++out[x];
  return out;
}

/// Some solution of M x = rhs over GF(2), or nullopt.
std::optional<std::vector<bool>> solve_gf2(std::vector<std::vector<bool>> M, std::vector<bool> rhs, std::size_t n) {
  const auto m = M.size();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t p = row;
    while (p < m && !M[p][col]) ++p;
    if (p == m) continue;
    std::swap(M[p], M[row]);
    std::swap(rhs[p], rhs[row]);
    for (std::size_t r = 0; r < m; ++r)
      if (r != row && M[r][col]) {
        for (std::size_t c = 0; c < n; ++c) M[r][c] = M[r][c] != M[row][c];
        rhs[r] = rhs[r] != rhs[row];
      }
    pivots.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < m; ++r)
    if (rhs[r]) return std::nullopt;
  std::vector<bool> x(n, false);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = rhs[r];
  return x;
}

} // namespace

Rescaling rescale_normalize(const VariableContext& ctx, const std::vector<ScaledBinomial>& gens) {
  const auto n = ctx.size();
  std::vector<IntVector> us;
  std::vector<mpq_class> ratios;
  for (const auto& g : gens) {
    if (g.plus.size() != n || g.minus.size() != n) throw InvalidInput("binomial does not match the context");
    if (g.c_plus == 0 || g.c_minus == 0) throw InvalidInput("binomial coefficient is zero");
    if (g.plus == g.minus) throw InvalidInput("binomial terms coincide");
    IntVector u(n);
    for (std::size_t i = 0; i < n; ++i) u[i] = std::int64_t{g.plus[i]} - g.minus[i];
    us.push_back(std::move(u));
    ratios.push_back(-g.c_minus / g.c_plus);
  }

  // Signs: prod s_i^{u_i} = sign(r) over GF(2).
  std::vector<std::vector<bool>> parity(us.size(), std::vector<bool>(n));
  std::vector<bool> negative(us.size());
  for (std::size_t k = 0; k < us.size(); ++k) {
    for (std::size_t i = 0; i < n; ++i) parity[k][i] = (us[k][i] % 2) != 0;
    negative[k] = ratios[k] < 0;
  }
  auto signs = solve_gf2(parity, negative, n);
  if (!signs) throw NotRescalable("no sign pattern of the variables fixes the coefficient signs");

  std::set<mpz_class> primes;
  for (const auto& r : ratios) {
    for (const auto& [p, e] : factor(r.get_num())) primes.insert(p);
    for (const auto& [p, e] : factor(r.get_den())) primes.insert(p);
  }
  const auto U = IntegerMatrix::from_rows(us, n);
  std::vector<mpq_class> factors(n, 1);
  for (std::size_t i = 0; i < n; ++i)
    if ((*signs)[i]) factors[i] = -1;
  for (const auto& p : primes) {
    BigVector e(us.size());
    for (std::size_t k = 0; k < us.size(); ++k) {
      long v = 0;
      mpz_class num = ratios[k].get_num(), den = ratios[k].get_den();
      while (num % p == 0) {
        num /= p;
        ++v;
      }
      while (den % p == 0) {
        den /= p;
        --v;
      }
      e[k] = v;
    }
    auto f = solve_integer(U, e);
    if (!f) throw NotRescalable("the exponents of the prime " + p.get_str() + " admit no integer rescaling");
    for (std::size_t i = 0; i < n; ++i) {
      const long fi = (*f)[i].get_si();
      mpz_class pw;
      mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(fi < 0 ? -fi : fi));
      factors[i] *= fi < 0 ? mpq_class(1, pw) : mpq_class(pw);
    }
  }
  for (auto& f : factors) f.canonicalize();

  std::vector<Binomial> out;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    mpq_class t = 1;
    for (std::size_t i = 0; i < n; ++i) {
      mpq_class pw = 1;
      const auto e = us[k][i];
      for (std::int64_t j = 0; j < (e < 0 ? -e : e); ++j) pw *= factors[i];
      t *= e < 0 ? 1 / pw : pw;
    }
    if (t != ratios[k]) throw Error("rescaling failed its own check (internal error)");
    out.push_back(Binomial::make(gens[k].plus, gens[k].minus));
  }
  return Rescaling{BinomialIdeal(ctx, std::move(out)), std::move(factors)};
}

bool terms_pairwise_distinct(const std::vector<Binomial>& F) {
  std::map<Monomial, std::size_t> owner;
  for (std::size_t i = 0; i < F.size(); ++i)
    for (const auto* t : {&F[i].plus(), &F[i].minus()}) {
      auto [it, fresh] = owner.emplace(*t, i);
      if (!fresh && it->second != i) return false;
    }
  return true;
}

std::vector<QuadraticCase> quadratic_exhaustion(std::size_t max_vars, std::size_t max_size, const Budgets& budgets) {
  const auto n = max_vars;
  const auto ctx = default_context(n);
  // Quadratic monomials x_i x_j (i <= j), indexed; a binomial is a pair of
  // indices and a set is a sorted list of pair codes.
  std::vector<Monomial> quads;
  std::map<std::pair<std::size_t, std::size_t>, std::uint16_t> quad_index;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Monomial m(n);
      m.set(i, 1);
      m.set(j, m[j] + 1);
      quad_index[{i, j}] = static_cast<std::uint16_t>(quads.size());
      quads.push_back(std::move(m));
    }
  const auto q = static_cast<std::uint16_t>(quads.size());
  auto code = [q](std::uint16_t a, std::uint16_t b) {
    return static_cast<std::uint16_t>(a < b ? a * q + b : b * q + a);
  };
  std::vector<std::uint16_t> atoms;
  std::vector<std::uint64_t> atom_support(static_cast<std::size_t>(q) * q, 0);
  for (std::uint16_t a = 0; a < q; ++a)
    for (std::uint16_t b = static_cast<std::uint16_t>(a + 1); b < q; ++b) {
      if (!quads[a].coprime(quads[b])) continue;
      if (!is_irreducible_binomial(Binomial::make(quads[a], quads[b]))) continue;
      atoms.push_back(code(a, b));
      atom_support[code(a, b)] = quads[a].support_mask() | quads[b].support_mask();
    }

  // Action of every variable permutation on the quadratic monomials.
  std::vector<std::vector<std::uint16_t>> actions;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<std::uint16_t> act(q);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        act[quad_index[{i, j}]] = quad_index[{std::min(perm[i], perm[j]), std::max(perm[i], perm[j])}];
    actions.push_back(std::move(act));
  } while (std::next_permutation(perm.begin(), perm.end()));

  using Set = std::vector<std::uint16_t>;
  auto canonical = [&](const Set& F) {
    Set best, image(F.size());
    for (const auto& act : actions) {
      for (std::size_t k = 0; k < F.size(); ++k) image[k] = code(act[F[k] / q], act[F[k] % q]);
      std::sort(image.begin(), image.end());
      if (best.empty() || image < best) best = image;
    }
    return best;
  };

  // Orbits of connected sets, one size at a time: every connected set of
  // size k + 1 contains a connected subset of size k, and extending an orbit
  // representative by every atom reaches each orbit of the next size.
  std::set<Set> all;
  std::set<Set> level;
  for (auto a : atoms) level.insert(canonical({a}));
  for (std::size_t size = 1;; ++size) {
    all.insert(level.begin(), level.end());
    if (size == max_size) break;
    std::set<Set> next;
    for (const auto& R : level) {
      std::uint64_t support = 0;
      for (auto c : R) support |= atom_support[c];
      for (auto a : atoms) {
        if ((atom_support[a] & support) == 0 || std::binary_search(R.begin(), R.end(), a)) continue;
        Set S = R;
        S.insert(std::upper_bound(S.begin(), S.end(), a), a);
        next.insert(canonical(S));
      }
    }
    level = std::move(next);
  }

  std::vector<QuadraticCase> out;
  for (const auto& codes : all) {
    std::vector<Binomial> F;
    for (auto c : codes) F.push_back(Binomial::make(quads[c / q], quads[c % q]));
    canonicalize(F);
    const BinomialIdeal I(ctx, F);
    if (!is_toric(I, budgets)) continue;
    if (!redundant_in(ctx, F, budgets).empty()) continue;
    QuadraticCase c;
    c.generators = I;
    c.robust = robust_check(I, FanOptions{FanMode::Cells, 0, 0, 1, budgets}).robust;
    c.shape = classify_quadratic(I);
    out.push_back(std::move(c));
  }
  return out;
}

} // namespace robusta
