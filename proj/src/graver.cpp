#include "robusta/graver.hpp"

#include "robusta/errors.hpp"
#include "robusta/groebner.hpp"

#include <algorithm>
#include <cmath>

namespace robusta {

std::vector<Binomial> GraverBasis::binomials() const {
  std::vector<Binomial> out;
  out.reserve(vectors.size());
  for (const auto& v : vectors) out.push_back(Binomial::from_vector(v));
  return out;
}

IntVector canonical_orientation(std::span<const std::int64_t> u) { return Binomial::from_vector(u).exponent_vector(); }

bool conformally_below(std::span<const std::int64_t> v, std::span<const std::int64_t> u) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (v[i] == 0) continue;
    if ((v[i] > 0) != (u[i] > 0) || u[i] == 0) return false;
    if (std::abs(v[i]) > std::abs(u[i])) return false;
  }
  return true;
}

namespace {

GraverBasis from_vectors(std::size_t n, std::vector<IntVector> vs) {
  std::vector<Binomial> bs;
  for (const auto& v : vs) bs.push_back(Binomial::from_vector(v));
  canonicalize(bs);
  GraverBasis g;
  g.ambient_dim = n;
  for (const auto& b : bs) g.vectors.push_back(b.exponent_vector());
  return g;
}

} // namespace

GraverBasis graver_basis(const Lattice& L, const Budgets& budgets) {
  const auto n = L.ambient_dim();
  if (L.rank() == 0) return GraverBasis{n, {}};
  const auto lifted = lawrence_lift(L);
  // The lift is homogeneous under all-ones on 2n variables.
  const auto ctx = lawrence_context(n);
  const auto J = saturate_toric(lattice_ideal_generators(lifted, ctx), Grading{std::vector<std::int64_t>(2 * n, 1)},
                                budgets);
  std::vector<IntVector> vs;
  for (const auto& g : J.generators()) {
    const auto full = g.exponent_vector();
    vs.emplace_back(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(n));
  }
  return from_vectors(n, std::move(vs));
}

GraverBasis graver_bruteforce(const Lattice& L, int box, int max_box) {
  const auto n = L.ambient_dim();
  if (box < 1) throw InvalidInput("box must be positive");
  if (box > max_box)
    throw BudgetExceeded("box " + std::to_string(box) + " exceeds the limit " + std::to_string(max_box));
  const double points = std::pow(2.0 * box + 1.0, static_cast<double>(n));
  if (points > 1e8) throw BudgetExceeded("brute-force box has more than 10^8 points");
  if (L.rank() == 0) return GraverBasis{n, {}};

  // u lies in Q L iff it is orthogonal to the complement; integrality is
  // checked separately unless L is saturated.
  const auto complement = integer_kernel(IntegerMatrix::from_rows(L.basis(), n));
  const bool saturated = L.is_saturated();

  std::vector<IntVector> members;
  IntVector u(n, -box);
  for (;;) {
    bool zero = std::all_of(u.begin(), u.end(), [](auto x) { return x == 0; });
    if (!zero) {
      bool in_span = true;
      for (const auto& c : complement) {
        std::int64_t d = 0;
        for (std::size_t i = 0; i < n; ++i) d += c[i] * u[i];
        if (d != 0) {
          in_span = false;
          break;
        }
      }
      if (in_span && (saturated || L.contains(u))) members.push_back(u);
    }
    std::size_t k = 0;
    while (k < n && u[k] == box) u[k++] = -box;
    if (k == n) break;
    ++u[k];
  }

  auto l1 = [](const IntVector& v) {
    std::int64_t s = 0;
    for (auto x : v) s += std::abs(x);
    return s;
  };
  std::stable_sort(members.begin(), members.end(), [&](const IntVector& a, const IntVector& b) { return l1(a) < l1(b); });

  std::vector<IntVector> primitive;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto& cand = members[i];
    const auto norm = l1(cand);
    bool decomposable = false;
    for (std::size_t j = 0; j < members.size() && l1(members[j]) < norm; ++j) {
      if (conformally_below(members[j], cand)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) primitive.push_back(cand);
  }
  return from_vectors(n, std::move(primitive));
}

} // namespace robusta
