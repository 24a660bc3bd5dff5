#include "robusta/betti.hpp"

#include "robusta/errors.hpp"

#include <algorithm>
#include <bit>
#include <gmpxx.h>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace robusta {

bool SimplicialComplex::contains(std::uint32_t face) const {
  return std::find(faces.begin(), faces.end(), face) != faces.end();
}

namespace {

/// For each generator g dividing b, the positions (within supp(b)) where g
/// is tight, g_v = b_v. Then g divides x^(b - sigma) iff sigma misses that
/// set, so K^b is the union of the simplices on the complements. Only the
/// inclusion-minimal tight sets are kept.
std::vector<std::uint32_t> tight_sets(const MonomialIdeal& I, const Monomial& b, const std::vector<std::size_t>& support) {
  std::vector<std::uint32_t> sets;
  for (const auto& g : I.generators()) {
    if (!g.divides(b)) continue;
    std::uint32_t t = 0;
    for (std::size_t k = 0; k < support.size(); ++k)
      if (g[support[k]] == b[support[k]]) t |= std::uint32_t{1} << k;
    sets.push_back(t);
  }
  std::sort(sets.begin(), sets.end(), [](std::uint32_t x, std::uint32_t y) {
    const int px = std::popcount(x), py = std::popcount(y);
    return px != py ? px < py : x < y;
  });
  std::vector<std::uint32_t> minimal;
  for (auto t : sets)
    if (std::none_of(minimal.begin(), minimal.end(), [&](std::uint32_t m) { return (m & t) == m; }))
      minimal.push_back(t);
  return minimal;
}

SimplicialComplex complex_from_tight_sets(std::vector<std::size_t> support, const std::vector<std::uint32_t>& tight) {
  SimplicialComplex K;
  K.vertices = std::move(support);
  const auto s = K.vertices.size();
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << s); ++mask)
    if (std::any_of(tight.begin(), tight.end(), [&](std::uint32_t t) { return (mask & t) == 0; }))
      K.faces.push_back(mask);
  std::sort(K.faces.begin(), K.faces.end(), [](std::uint32_t a, std::uint32_t c) {
    const int pa = std::popcount(a), pc = std::popcount(c);
    return pa != pc ? pa < pc : a < c;
  });
  return K;
}

} // namespace

SimplicialComplex upper_koszul_complex(const MonomialIdeal& I, const Monomial& b) {
  if (b.size() != I.num_vars()) throw InvalidInput("multidegree does not match the ideal");
  auto support = b.support();
  if (support.size() > 24) throw BudgetExceeded("multidegree support too large for the upper Koszul complex");
  const auto tight = tight_sets(I, b, support);
  return complex_from_tight_sets(std::move(support), tight);
}

namespace {

template <class T> bool checked_combine(T& out, const T& a, const T& x, const T& b, const T& y) {
  if constexpr (std::is_same_v<T, std::int64_t>) {
    std::int64_t p, q;
    if (__builtin_mul_overflow(a, x, &p) || __builtin_mul_overflow(b, y, &q) || __builtin_sub_overflow(p, q, &out))
      return false;
    return true;
  } else {
    out = a * x - b * y;
    return true;
  }
}

template <class T> T abs_value(const T& x) { return x < 0 ? T(-x) : x; }

template <class T> T gcd_value(const T& a, const T& b) {
  if constexpr (std::is_same_v<T, std::int64_t>) {
    return std::gcd(a, b);
  } else {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }
}

/// Row elimination with primitive rows; false on int64 overflow.
template <class T> bool rank_of(std::vector<std::vector<T>> rows, std::size_t& rank) {
  rank = 0;
  if (rows.empty()) return true;
  const auto cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const T a = rows[r][c];
      const T b = rows[i][c];
      T g = 0;
      for (std::size_t k = c; k < cols; ++k) {
        T v;
        if (!checked_combine(v, a, rows[i][k], b, rows[r][k])) return false;
        rows[i][k] = v;
        g = gcd_value(g, abs_value(v));
      }
      if (g > 1)
        for (std::size_t k = c; k < cols; ++k) rows[i][k] /= g;
    }
    ++r;
  }
  rank = r;
  return true;
}

} // namespace

std::size_t rational_rank(std::vector<std::vector<std::int64_t>> rows) {
  std::size_t rank = 0;
  if (rank_of<std::int64_t>(rows, rank)) return rank;
  std::vector<std::vector<mpz_class>> big(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (auto x : rows[i]) big[i].emplace_back(static_cast<long>(x));
  rank_of<mpz_class>(std::move(big), rank);
  return rank;
}

std::vector<std::size_t> reduced_homology(const SimplicialComplex& K) {
  if (K.faces.empty()) return {};
  std::size_t top = 0;
  for (auto f : K.faces) top = std::max<std::size_t>(top, std::popcount(f));
  // by_size[k] = faces with k vertices (dimension k - 1)
  std::vector<std::vector<std::uint32_t>> by_size(top + 1);
  for (auto f : K.faces) by_size[std::popcount(f)].push_back(f);

  // rank of the boundary from faces with k vertices to faces with k - 1.
  std::vector<std::size_t> rank(top + 2, 0);
  for (std::size_t k = 1; k <= top; ++k) {
    const auto& lower = by_size[k - 1];
    if (by_size[k].empty() || lower.empty()) continue;
    std::vector<std::vector<std::int64_t>> M;
    M.reserve(by_size[k].size());
    for (auto f : by_size[k]) {
      std::vector<std::int64_t> row(lower.size(), 0);
      int sign = 1;
      for (std::uint32_t bits = f; bits; bits &= bits - 1) {
        const std::uint32_t v = bits & (~bits + 1);
        const auto face = f & ~v;
        const auto it = std::lower_bound(lower.begin(), lower.end(), face);
        if (it != lower.end() && *it == face) row[static_cast<std::size_t>(it - lower.begin())] = sign;
        sign = -sign;
      }
      M.push_back(std::move(row));
    }
    rank[k] = rational_rank(std::move(M));
  }
  std::vector<std::size_t> h(top + 1, 0);
  for (std::size_t k = 0; k <= top; ++k) {
    // faces with k vertices: reduced homology in dimension k - 1
    const std::size_t cycles = by_size[k].size() - rank[k];
    const std::size_t boundaries = k + 1 <= top ? rank[k + 1] : 0;
    h[k] = cycles - boundaries;
  }
  return h;
}

BettiTable::BettiTable(std::map<std::pair<int, int>, std::uint64_t> entries) {
  for (auto& [key, v] : entries)
    if (v != 0) entries_.emplace(key, v);
}

std::uint64_t BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

std::uint64_t BettiTable::total(int i) const {
  std::uint64_t s = 0;
  for (const auto& [key, v] : entries_)
    if (key.first == i) s += v;
  return s;
}

int BettiTable::projective_dimension() const {
  int p = 0;
  for (const auto& [key, v] : entries_) p = std::max(p, key.first);
  return p;
}

int BettiTable::regularity() const {
  int r = 0;
  for (const auto& [key, v] : entries_) r = std::max(r, key.second - key.first);
  return r;
}

std::vector<std::uint64_t> BettiTable::totals() const {
  std::vector<std::uint64_t> t(static_cast<std::size_t>(projective_dimension()) + 1, 0);
  for (const auto& [key, v] : entries_) t[static_cast<std::size_t>(key.first)] += v;
  return t;
}

std::string BettiTable::to_macaulay() const {
  const int p = projective_dimension();
  const int reg = regularity();
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> labels;
  std::vector<std::string> header;
  for (int i = 0; i <= p; ++i) header.push_back(std::to_string(i));
  labels.push_back("");
  cells.push_back(header);
  std::vector<std::string> tot;
  for (auto t : totals()) tot.push_back(std::to_string(t));
  labels.push_back("total:");
  cells.push_back(tot);
  for (int r = 0; r <= reg; ++r) {
    std::vector<std::string> row;
    for (int i = 0; i <= p; ++i) {
      const auto v = at(i, i + r);
      row.push_back(v == 0 ? "." : std::to_string(v));
    }
    labels.push_back(std::to_string(r) + ":");
    cells.push_back(row);
  }
  std::size_t lw = 0;
  for (const auto& l : labels) lw = std::max(lw, l.size());
  std::vector<std::size_t> cw(static_cast<std::size_t>(p) + 1, 1);
  for (const auto& row : cells)
    for (std::size_t i = 0; i < row.size(); ++i) cw[i] = std::max(cw[i], row[i].size());
  std::ostringstream out;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    out << std::string(lw - labels[r].size(), ' ') << labels[r];
    for (std::size_t i = 0; i < cells[r].size(); ++i)
      out << ' ' << std::string(cw[i] - cells[r][i].size(), ' ') << cells[r][i];
    out << '\n';
  }
  return out.str();
}

std::vector<Monomial> lcm_lattice(const MonomialIdeal& I, std::uint64_t max_size) {
  const auto& gens = I.generators();
  std::unordered_set<Monomial, MonomialHash> seen;
  std::vector<Monomial> frontier;
  for (const auto& g : gens)
    if (seen.insert(g).second) frontier.push_back(g);
  std::vector<Monomial> all = frontier;
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& m : frontier)
      for (const auto& g : gens) {
        if (g.divides(m)) continue;
        auto l = lcm(m, g);
        if (seen.insert(l).second) {
          if (seen.size() > max_size)
            throw BudgetExceeded("lcm lattice exceeds the multidegree budget of " + std::to_string(max_size));
          next.push_back(l);
          all.push_back(std::move(l));
        }
      }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end(), MonomialCanonicalLess{});
  return all;
}

std::map<std::pair<int, Monomial>, std::uint64_t> multigraded_betti(const MonomialIdeal& I, const Budgets& budgets) {
  std::map<std::pair<int, Monomial>, std::uint64_t> out;
  for (const auto& b : lcm_lattice(I, budgets.multidegrees)) {
    auto support = b.support();
    if (support.size() > 24) throw BudgetExceeded("multidegree support too large for the upper Koszul complex");
    const auto tight = tight_sets(I, b, support);
    // A full simplex (empty tight set) or a cone (some vertex outside every
    // minimal tight set lies in every facet) is acyclic.
    std::uint32_t covered = 0;
    for (auto t : tight) covered |= t;
    if (tight.empty() || tight.front() == 0 || covered != (std::uint32_t{1} << support.size()) - 1) continue;
    const auto h = reduced_homology(complex_from_tight_sets(std::move(support), tight));
    // h[k] is reduced homology in dimension k - 1, which is beta_{k,b}(I),
    // that is beta_{k+1,b}(S/I).
    for (std::size_t k = 0; k < h.size(); ++k)
      if (h[k] != 0) out[{static_cast<int>(k) + 1, b}] = h[k];
  }
  return out;
}

BettiTable graded_betti(const MonomialIdeal& I, const Budgets& budgets) {
  std::map<std::pair<int, int>, std::uint64_t> entries;
  entries[{0, 0}] = 1;
  for (const auto& [key, v] : multigraded_betti(I, budgets))
    entries[{key.first, static_cast<int>(key.second.degree())}] += v;
  return BettiTable(std::move(entries));
}

std::vector<std::int64_t> hilbert_numerator(const MonomialIdeal& I, std::size_t max_generators) {
  const auto& gens = I.generators();
  if (gens.size() > max_generators)
    throw BudgetExceeded("inclusion-exclusion over " + std::to_string(gens.size()) + " generators");
  std::vector<std::int64_t> coeff(1, 1);
  auto add = [&](std::size_t d, std::int64_t s) {
    if (coeff.size() <= d) coeff.resize(d + 1, 0);
    coeff[d] += s;
  };
  auto visit = [&](auto&& self, std::size_t start, const Monomial& l, std::int64_t sign) -> void {
    for (std::size_t i = start; i < gens.size(); ++i) {
      const auto m = lcm(l, gens[i]);
      add(static_cast<std::size_t>(m.degree()), -sign);
      self(self, i + 1, m, -sign);
    }
  };
  visit(visit, 0, Monomial(I.num_vars()), 1);
  while (coeff.size() > 1 && coeff.back() == 0) coeff.pop_back();
  return coeff;
}

ResolutionPredicates resolution_predicates(const BettiTable& T, std::size_t codim, const MonomialIdeal& I) {
  ResolutionPredicates p;
  p.cohen_macaulay = T.projective_dimension() == static_cast<int>(codim);
  p.squarefree = I.is_squarefree();
  p.linear = !I.generators().empty();
  const auto d = p.linear ? I.generators().front().degree() : 0;
  for (const auto& g : I.generators())
    if (g.degree() != d) p.linear = false;
  for (const auto& [key, v] : T.entries())
    if (key.first >= 1 && key.second != d + key.first - 1) p.linear = false;
  return p;
}

BettiRobustness betti_robustness_check(const BinomialIdeal& I, const FanOptions& options, bool stop_on_difference) {
  BettiRobustness r;
  r.fan = enumerate_fan(I, options);
  r.exhaustive = r.fan.exhaustive;
  for (std::size_t c = 0; c < r.fan.cones.size(); ++c) {
    auto table = graded_betti(r.fan.cones[c].initial, options.budgets);
    ++r.initial_ideals;
    if (std::find(r.tables.begin(), r.tables.end(), table) == r.tables.end()) {
      r.tables.push_back(std::move(table));
      r.representatives.push_back(c);
    }
    if (stop_on_difference && r.tables.size() > 1) {
      r.exhaustive = r.exhaustive && c + 1 == r.fan.cones.size();
      break;
    }
  }
  r.robust_betti = r.tables.size() <= 1;
  return r;
}

} // namespace robusta
