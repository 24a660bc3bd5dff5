#include "robusta/fan.hpp"

#include "robusta/errors.hpp"
#include "robusta/feasibility.hpp"
#include "robusta/graver.hpp"
#include "robusta/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

namespace robusta {

namespace {

mpz_class dot(std::span<const mpz_class> w, std::span<const std::int64_t> v) {
  mpz_class s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += w[i] * static_cast<long>(v[i]);
  return s;
}

BigVector integer_witness(const RationalVector& q) {
  mpz_class den = 1;
  for (const auto& x : q) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  BigVector out(q.size());
  for (std::size_t j = 0; j < q.size(); ++j) out[j] = q[j].get_num() * (den / q[j].get_den());
  make_primitive(out);
  return out;
}

StrictConstraint constraint(std::span<const std::int64_t> v, int sign) {
  StrictConstraint c;
  c.vector.reserve(v.size());
  for (auto x : v) c.vector.emplace_back(static_cast<long>(x));
  c.sign = sign;
  return c;
}

struct Node {
  std::vector<std::int8_t> signs;
  BigVector witness;
};

/// Sign-prefix search. fixed constraints are always present with sign +.
class CellSearch {
public:
  CellSearch(std::span<const IntVector> vectors, std::span<const IntVector> fixed, std::size_t dim,
             std::uint64_t max_cells, bool symmetric, FeasibilityMethod method)
      : vectors_(vectors), dim_(dim), max_cells_(max_cells), symmetric_(symmetric), method_(method) {
    for (const auto& v : vectors)
      if (v.size() != dim) throw InvalidInput("arrangement vector has the wrong dimension");
    for (const auto& f : fixed) {
      if (f.size() != dim) throw InvalidInput("cone constraint has the wrong dimension");
      fixed_.push_back(constraint(f, 1));
    }
  }

  std::optional<Node> root() const {
    auto w = strict_feasible(fixed_, dim_, method_);
    if (!w) return std::nullopt;
    return Node{{}, integer_witness(*w)};
  }

  /// Feasible children of a node, + before -.
  std::vector<Node> children(const Node& node) const {
    const std::size_t k = node.signs.size();
    std::vector<Node> out;
    const mpz_class d = dot(node.witness, vectors_[k]);
    for (int s : {1, -1}) {
      if (symmetric_ && k == 0 && s < 0) continue;
      Node child{node.signs, {}};
      child.signs.push_back(static_cast<std::int8_t>(s));
      if (sgn(d) == s) {
        child.witness = node.witness;
      } else {
        std::vector<StrictConstraint> cs = fixed_;
        for (std::size_t i = 0; i <= k; ++i) cs.push_back(constraint(vectors_[i], child.signs[i]));
        auto w = strict_feasible(cs, dim_, method_);
        if (!w) continue;
        child.witness = integer_witness(*w);
      }
      out.push_back(std::move(child));
    }
    return out;
  }

  /// Optional early exit: when it returns true the node is emitted with its
  /// (partial) sign prefix and its subtree is skipped. It may replace the
  /// witness by another point of the same prefix cell.
  std::function<bool(Node&)> stop;

  bool finished(Node& node) const { return node.signs.size() == vectors_.size() || (stop && stop(node)); }

  void dfs(Node node, std::vector<SignCell>& out, std::atomic<std::uint64_t>& found) const {
    if (finished(node)) {
      if (++found > max_cells_) throw BudgetExceeded("cell budget of " + std::to_string(max_cells_) + " exhausted");
      out.push_back(SignCell{std::move(node.signs), std::move(node.witness)});
      return;
    }
    for (auto& c : children(node)) dfs(std::move(c), out, found);
  }

  std::size_t depth() const { return vectors_.size(); }

private:
  std::span<const IntVector> vectors_;
  std::vector<StrictConstraint> fixed_;
  std::size_t dim_;
  std::uint64_t max_cells_;
  bool symmetric_;
  FeasibilityMethod method_;
};

std::vector<SignCell> run_search(const CellSearch& search, unsigned threads) {
  std::vector<SignCell> out;
  auto root = search.root();
  if (!root) return out;
  std::atomic<std::uint64_t> found{0};
  if (threads <= 1 || search.depth() < 2) {
    search.dfs(std::move(*root), out, found);
    return out;
  }
  // Expand breadth-first until there is enough work to share, then let each
  // worker take whole subtrees; results are concatenated in frontier order.
  std::vector<Node> frontier{std::move(*root)};
  while (frontier.size() < 4 * static_cast<std::size_t>(threads) && !frontier.empty() &&
         frontier.front().signs.size() < search.depth()) {
    std::vector<Node> next;
    bool expanded = false;
    for (auto& n : frontier) {
      if (search.finished(n)) {
        next.push_back(std::move(n));
        continue;
      }
      expanded = true;
      for (auto& c : search.children(n)) next.push_back(std::move(c));
    }
    frontier = std::move(next);
    if (!expanded) break;
  }
  std::vector<std::vector<SignCell>> parts(frontier.size());
  std::atomic<std::size_t> cursor{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const auto i = cursor++;
      if (i >= frontier.size()) return;
      try {
        search.dfs(std::move(frontier[i]), parts[i], found);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        cursor = frontier.size();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  for (auto& p : parts)
    for (auto& c : p) out.push_back(std::move(c));
  return out;
}

/// Minimal generators of the monomial ideal spanned by the leads of the
/// Graver vectors under w; this is in_w(I) because the Graver basis is a
/// Groebner basis for every order.
MonomialIdeal graver_initial_ideal(const std::vector<IntVector>& graver, std::span<const std::int64_t> w,
                                   std::size_t n) {
  std::vector<Monomial> leads;
  leads.reserve(graver.size());
  for (const auto& g : graver) {
    __int128 d = 0;
    for (std::size_t i = 0; i < n; ++i) d += static_cast<__int128>(w[i]) * g[i];
    if (d == 0) throw Error("weight is not generic for the Graver basis");
    leads.push_back(d > 0 ? positive_part(g) : negative_part(g));
  }
  return MonomialIdeal(n, std::move(leads));
}

/// A point of the prefix cell of y that is off every hyperplane: y itself
/// or 2^t y + u for a small deterministic u.
BigVector generic_point(const BigVector& y, const std::vector<std::int8_t>& signs, const std::vector<IntVector>& vs) {
  auto ok = [&](const BigVector& c) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const int s = sgn(dot(c, vs[i]));
      if (s == 0 || (i < signs.size() && s != signs[i])) return false;
    }
    return true;
  };
  if (ok(y)) return y;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  for (unsigned t = 1; t < 256; ++t) {
    BigVector c(y.size());
    for (std::size_t j = 0; j < y.size(); ++j) {
      c[j] = y[j];
      c[j] <<= t;
      c[j] += static_cast<long>(rng() % 21) - 10;
    }
    if (ok(c)) {
      make_primitive(c);
      return c;
    }
  }
  throw Error("no generic point found in a prefix cell (internal error)");
}

/// Indices of the Graver vectors forming the reduced basis under a weight
/// generic for all of them: lead a minimal generator of the initial ideal,
/// trail standard.
std::vector<std::size_t> graver_reduced_basis(const std::vector<IntVector>& graver, std::span<const std::int64_t> w,
                                              std::size_t n) {
  std::vector<Monomial> leads, trails;
  for (const auto& g : graver) {
    __int128 d = 0;
    for (std::size_t i = 0; i < n; ++i) d += static_cast<__int128>(w[i]) * g[i];
    if (d == 0) throw Error("weight is not generic for the Graver basis");
    leads.push_back(d > 0 ? positive_part(g) : negative_part(g));
    trails.push_back(d > 0 ? negative_part(g) : positive_part(g));
  }
  const MonomialIdeal in(n, leads);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < graver.size(); ++i) {
    if (std::find(in.generators().begin(), in.generators().end(), leads[i]) == in.generators().end()) continue;
    if (!in.contains(trails[i])) out.push_back(i);
  }
  return out;
}

struct ConeCollector {
  const BinomialIdeal& ideal;
  const Budgets& budgets;
  std::map<MonomialIdeal, GroebnerCone> cones;

  void add_order(std::vector<std::int64_t> weight, const TermOrder& order, const MonomialIdeal* expected) {
    if (expected && cones.count(*expected)) return;
    auto basis = buchberger_reduced(ideal, order, budgets);
    auto initial = initial_ideal(basis, ideal.num_vars());
    if (expected && !(initial == *expected))
      throw Error("reduced basis disagrees with the Graver initial ideal under " + order.describe());
    if (cones.count(initial)) return;
    cones.emplace(initial, GroebnerCone{std::move(weight), std::move(basis), initial});
  }

  void add_weight(std::vector<std::int64_t> w, const std::vector<IntVector>& graver) {
    const auto n = ideal.num_vars();
    const auto expected = graver_initial_ideal(graver, w, n);
    const auto order = TermOrder::weight(w, TermOrder::grevlex(n));
    add_order(std::move(w), order, &expected);
  }
};

void finish(FanEnumeration& fan, ConeCollector& collector) {
  for (auto& [key, cone] : collector.cones) {
    fan.reduced_gbs.push_back(as_canonical_set(cone.basis));
    fan.cones.push_back(std::move(cone));
  }
  std::sort(fan.reduced_gbs.begin(), fan.reduced_gbs.end());
  fan.reduced_gbs.erase(std::unique(fan.reduced_gbs.begin(), fan.reduced_gbs.end()), fan.reduced_gbs.end());
  fan.universal_gb = union_of(fan.reduced_gbs);
}

struct ToricData {
  Lattice lattice;
  std::vector<std::int64_t> grading;
  std::vector<IntVector> graver;
};

ToricData prepare(const BinomialIdeal& I, const Budgets& budgets) {
  if (!is_toric(I, budgets)) throw InvalidInput("ideal is not toric");
  ToricData d;
  d.lattice = ideal_lattice(I);
  const auto vs = I.exponent_vectors();
  auto grading = find_positive_grading(vs, I.num_vars());
  if (!grading) throw NoPositiveGrading("ideal is not homogeneous under a positive grading");
  d.grading = std::move(*grading);
  d.graver = graver_basis(d.lattice, budgets).vectors;
  return d;
}

std::uint64_t factorial_capped(std::size_t n, std::uint64_t cap) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) {
    f *= k;
    if (f > cap) return cap + 1;
  }
  return f;
}

} // namespace

std::vector<std::int64_t> lift_weight(const Lattice& L, std::span<const mpz_class> y,
                                      std::span<const std::int64_t> grading) {
  const auto& B = L.basis();
  const auto r = B.size();
  const auto n = L.ambient_dim();
  std::vector<RationalVector> gram(r, RationalVector(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      mpz_class s = 0;
      for (std::size_t k = 0; k < n; ++k) s += mpz_class(static_cast<long>(B[i][k])) * static_cast<long>(B[j][k]);
      gram[i][j] = s;
    }
  RationalVector rhs(y.begin(), y.end());
  auto t = solve_rational(gram, rhs);
  if (!t) throw Error("singular Gram matrix for a lattice basis");
  RationalVector w(n, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < n; ++k) w[k] += (*t)[i] * static_cast<long>(B[i][k]);
  mpz_class den = 1;
  for (const auto& q : w) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  BigVector W(n);
  for (std::size_t k = 0; k < n; ++k) W[k] = w[k].get_num() * (den / w[k].get_den());
  mpz_class shift = 0;
  for (std::size_t k = 0; k < n; ++k) {
    // smallest s with W_k + s g_k >= 1
    mpz_class need = 1 - W[k];
    if (need > 0) {
      mpz_class g = static_cast<long>(grading[k]);
      mpz_class s = (need + g - 1) / g;
      if (s > shift) shift = s;
    }
  }
  for (std::size_t k = 0; k < n; ++k) W[k] += shift * static_cast<long>(grading[k]);
  make_primitive(W);
  return to_int_vector(W);
}

bool certify_cell(const SignCell& cell, std::span<const IntVector> vectors) {
  if (cell.signs.size() != vectors.size()) return false;
  for (std::size_t i = 0; i < vectors.size(); ++i)
    if (sgn(dot(cell.witness, vectors[i])) != cell.signs[i]) return false;
  return true;
}

std::vector<SignCell> enumerate_cells(std::span<const IntVector> vectors, std::size_t dim, std::uint64_t max_cells,
                                      unsigned threads, FeasibilityMethod method) {
  for (const auto& v : vectors)
    if (std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; }))
      throw InvalidInput("arrangement contains the zero vector");
  CellSearch search(vectors, {}, dim, max_cells, true, method);
  return run_search(search, threads);
}

std::vector<SignCell> enumerate_cells_in_cone(std::span<const IntVector> vectors, std::span<const IntVector> fixed,
                                              std::size_t dim, std::uint64_t max_cells,
                                              FeasibilityMethod method) {
  CellSearch search(vectors, fixed, dim, max_cells, false, method);
  return run_search(search, 1);
}

FanEnumeration enumerate_fan(const BinomialIdeal& I, const FanOptions& options) {
  FanEnumeration fan;
  fan.mode = options.mode;
  const auto n = I.num_vars();
  ConeCollector collector{I, options.budgets, {}};

  if (options.mode == FanMode::Lex) {
    fan.exhaustive = false;
    if (factorial_capped(n, options.budgets.lex_orders) > options.budgets.lex_orders)
      throw BudgetExceeded("lex sweep over " + std::to_string(n) + "! orders exceeds the budget");
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      collector.add_order({}, TermOrder::lex(perm), nullptr);
      ++fan.cells;
    } while (std::next_permutation(perm.begin(), perm.end()));
    finish(fan, collector);
    return fan;
  }

  if (I.empty()) {
    fan.cones.push_back(GroebnerCone{std::vector<std::int64_t>(n, 1), {}, MonomialIdeal(n, {})});
    fan.reduced_gbs.push_back({});
    return fan;
  }

  const auto data = prepare(I, options.budgets);
  fan.graver_size = data.graver.size();

  if (options.mode == FanMode::Sample) {
    fan.exhaustive = false;
    std::mt19937_64 rng(options.seed);
    std::uint64_t accepted = 0;
    const std::uint64_t max_attempts = 10 * options.samples + 100;
    for (std::uint64_t attempt = 0; attempt < max_attempts && accepted < options.samples; ++attempt) {
      std::vector<std::int64_t> w(n);
      for (auto& x : w) {
        const auto bits = rng() % 20;
        x = 1 + static_cast<std::int64_t>(rng() % (std::uint64_t{1} << bits));
      }
      bool generic = std::none_of(data.graver.begin(), data.graver.end(), [&](const IntVector& g) {
        std::int64_t d = 0;
        for (std::size_t i = 0; i < n; ++i) d += w[i] * g[i];
        return d == 0;
      });
      if (!generic) continue;
      ++accepted;
      collector.add_weight(std::move(w), data.graver);
    }
    fan.cells = accepted;
    finish(fan, collector);
    return fan;
  }

  // Sign prefixes over the Graver arrangement in lattice coordinates. A
  // prefix cell is settled as soon as every element of the reduced basis at
  // a generic point of it is among the vectors already signed: the whole
  // cell then lies in that Groebner cone.
  std::vector<IntVector> coords;
  coords.reserve(data.graver.size());
  for (const auto& g : data.graver) {
    auto z = data.lattice.coordinates(g);
    if (!z) throw Error("Graver vector outside its lattice");
    coords.push_back(to_int_vector(*z));
  }
  CellSearch search(coords, {}, data.lattice.rank(), options.budgets.cells, false, FeasibilityMethod::Simplex);
  search.stop = [&](Node& node) {
    node.witness = generic_point(node.witness, node.signs, coords);
    const auto w = lift_weight(data.lattice, node.witness, data.grading);
    for (auto i : graver_reduced_basis(data.graver, w, n))
      if (i >= node.signs.size()) return false;
    return true;
  };
  const auto regions = run_search(search, options.threads);
  fan.cells = regions.size();
  for (const auto& region : regions)
    collector.add_weight(lift_weight(data.lattice, region.witness, data.grading), data.graver);
  finish(fan, collector);
  return fan;
}

std::vector<std::vector<Binomial>> enumerate_reduced_gbs(const BinomialIdeal& I, const FanOptions& options) {
  return enumerate_fan(I, options).reduced_gbs;
}

std::vector<Binomial> universal_gb(const BinomialIdeal& I, const FanOptions& options) {
  return enumerate_fan(I, options).universal_gb;
}

std::vector<MonomialIdeal> enumerate_initial_ideals(const BinomialIdeal& I, const FanOptions& options) {
  std::vector<MonomialIdeal> out;
  for (const auto& c : enumerate_fan(I, options).cones) out.push_back(c.initial);
  return out;
}

std::vector<std::vector<Binomial>> lex_orders_sweep(const BinomialIdeal& I, const Budgets& budgets) {
  FanOptions o;
  o.mode = FanMode::Lex;
  o.budgets = budgets;
  return enumerate_fan(I, o).reduced_gbs;
}

std::vector<Binomial> union_of(const std::vector<std::vector<Binomial>>& sets) {
  std::vector<Binomial> out;
  for (const auto& s : sets) out.insert(out.end(), s.begin(), s.end());
  canonicalize(out);
  return out;
}

std::string to_string(FanMode mode) {
  switch (mode) {
  case FanMode::Cells: return "cells";
  case FanMode::Lex: return "lex";
  case FanMode::Sample: return "sample";
  }
  return "cells";
}

} // namespace robusta
