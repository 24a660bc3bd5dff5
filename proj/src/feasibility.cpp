#include "robusta/feasibility.hpp"

#include "robusta/errors.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <map>

namespace robusta {

namespace {

// coeffs . w >= rhs, with the set of original rows combined into it.
struct RationalRow {
  BigVector coeffs;
  mpq_class rhs;
  boost::dynamic_bitset<> history;
};

void normalize(RationalRow& row) {
  mpz_class g = 0;
  for (const auto& c : row.coeffs) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1) {
    for (auto& c : row.coeffs) c /= g;
    row.rhs /= g;
  }
}

bool all_zero(const BigVector& v) {
  return std::all_of(v.begin(), v.end(), [](const mpz_class& x) { return x == 0; });
}

// Removes trivially satisfied rows (zero coefficients, rhs <= 0) and rows
// dominated by another row with the same coefficients, a rhs at least as
// large and a history contained in theirs. The history condition keeps
// Chernikov's rule sound: every combination of a dropped row is dominated by
// the same combination of its dominator, with a history no larger.
std::vector<RationalRow> prune(std::vector<RationalRow> rows) {
  std::map<BigVector, std::vector<std::size_t>> groups;
  std::vector<RationalRow> kept;
  std::vector<bool> alive;
  for (auto& r : rows) {
    if (all_zero(r.coeffs) && r.rhs <= 0) continue;
    auto& group = groups[r.coeffs];
    bool dominated = false;
    for (auto idx : group) {
      if (alive[idx] && kept[idx].rhs >= r.rhs && kept[idx].history.is_subset_of(r.history)) {
        dominated = true;
        break;
      }
    }
    if (dominated) continue;
    for (auto idx : group)
      if (alive[idx] && r.rhs >= kept[idx].rhs && r.history.is_subset_of(kept[idx].history)) alive[idx] = false;
    group.push_back(kept.size());
    kept.push_back(std::move(r));
    alive.push_back(true);
  }
  std::vector<RationalRow> out;
  out.reserve(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i)
    if (alive[i]) out.push_back(std::move(kept[i]));
  return out;
}

// Picks a value in [lo, hi] (either side optional): an integer closest to 0
// when one exists, otherwise the midpoint.
mpq_class pick_value(const std::optional<mpq_class>& lo, const std::optional<mpq_class>& hi) {
  auto ceil_q = [](const mpq_class& q) {
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return c;
  };
  auto floor_q = [](const mpq_class& q) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return f;
  };
  if (!lo && !hi) return 0;
  if (lo && !hi) return lo->get_num() <= 0 ? mpq_class(0) : mpq_class(ceil_q(*lo));
  if (!lo && hi) return hi->get_num() >= 0 ? mpq_class(0) : mpq_class(floor_q(*hi));
  if (*lo <= 0 && *hi >= 0) return 0;
  const mpz_class c = *lo > 0 ? ceil_q(*lo) : floor_q(*hi);
  if (c >= *lo && c <= *hi) return c;
  return (*lo + *hi) / 2;
}

} // namespace

std::optional<RationalVector> strict_feasible(std::span<const StrictConstraint> constraints, std::size_t dim) {
  const auto m = constraints.size();
  if (m == 0) return RationalVector(dim, 0);
  if (dim == 0) return std::nullopt;

  std::vector<RationalRow> system;
  system.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = constraints[i];
    if (c.vector.size() != dim) throw InvalidInput("constraint dimension mismatch");
    if (c.sign != 1 && c.sign != -1) throw InvalidInput("constraint sign must be +1 or -1");
    mpz_class den = 1;
    for (const auto& q : c.vector) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    RationalRow row{BigVector(dim), mpq_class(1), boost::dynamic_bitset<>(m)};
    for (std::size_t j = 0; j < dim; ++j) row.coeffs[j] = c.sign * c.vector[j].get_num() * (den / c.vector[j].get_den());
    row.history.set(i);
    normalize(row);
    system.push_back(std::move(row));
  }
  system = prune(std::move(system));

  // stages[k] holds the system over variables 0..k-1 (stages[dim] = input).
  std::vector<std::vector<RationalRow>> stages(dim + 1);
  stages[dim] = system;
  for (std::size_t k = dim; k-- > 0;) {
    const auto& cur = stages[k + 1];
    std::vector<RationalRow> next;
    std::vector<const RationalRow*> pos, neg;
    for (const auto& r : cur) {
      if (r.coeffs[k] > 0) pos.push_back(&r);
      else if (r.coeffs[k] < 0) neg.push_back(&r);
      else next.push_back(r);
    }
    const std::size_t eliminated = dim - k;
    for (const auto* p : pos) {
      for (const auto* q : neg) {
        auto history = p->history | q->history;
        // Chernikov: a combination of more than (eliminated + 1) original
        // rows is implied by the others.
        if (history.count() > eliminated + 1) continue;
        const mpz_class a = p->coeffs[k];
        const mpz_class b = -q->coeffs[k];
        RationalRow row{BigVector(dim), b * p->rhs + a * q->rhs, std::move(history)};
        for (std::size_t j = 0; j < dim; ++j) row.coeffs[j] = b * p->coeffs[j] + a * q->coeffs[j];
        row.coeffs[k] = 0;
        normalize(row);
        next.push_back(std::move(row));
      }
    }
    stages[k] = prune(std::move(next));
    for (const auto& r : stages[k])
      if (all_zero(r.coeffs) && r.rhs > 0) return std::nullopt;
  }

  RationalVector w(dim, 0);
  for (std::size_t k = 0; k < dim; ++k) {
    std::optional<mpq_class> lo, hi;
    for (const auto& r : stages[k + 1]) {
      const auto& a = r.coeffs[k];
      if (a == 0) continue;
      mpq_class rest = r.rhs;
      for (std::size_t j = 0; j < k; ++j)
        if (r.coeffs[j] != 0) rest -= mpq_class(r.coeffs[j]) * w[j];
      const mpq_class bound = rest / mpq_class(a);
      if (a > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    if (lo && hi && *lo > *hi) throw Error("Fourier-Motzkin back-substitution failed (internal error)");
    w[k] = pick_value(lo, hi);
  }

  for (const auto& c : constraints) {
    mpq_class d = 0;
    for (std::size_t j = 0; j < dim; ++j) d += c.vector[j] * w[j];
    if (c.sign * sgn(d) <= 0) throw Error("Fourier-Motzkin witness failed certification (internal error)");
  }
  return w;
}

std::optional<RationalVector> strict_feasible_lp(std::span<const StrictConstraint> constraints, std::size_t dim) {
  const auto m = constraints.size();
  if (m == 0) return RationalVector(dim, 0);
  if (dim == 0) return std::nullopt;
  for (const auto& c : constraints) {
    if (c.vector.size() != dim) throw InvalidInput("constraint dimension mismatch");
    if (c.sign != 1 && c.sign != -1) throw InvalidInput("constraint sign must be +1 or -1");
  }

  // Dictionary: basic_i = rhs_i + sum_j coef[i][j] * nonbasic_j.
  // Variables: 0..dim-1 = p, dim..2dim-1 = q, 2dim = x0, 2dim+1.. = slacks.
  const std::size_t nvars = 2 * dim + 1 + m;
  const std::size_t x0 = 2 * dim;
  std::vector<std::size_t> nonbasic(2 * dim + 1);
  for (std::size_t j = 0; j < nonbasic.size(); ++j) nonbasic[j] = j;
  std::vector<std::size_t> basic(m);
  std::vector<std::vector<mpq_class>> coef(m, std::vector<mpq_class>(nonbasic.size()));
  std::vector<mpq_class> rhs(m, -1);
  for (std::size_t i = 0; i < m; ++i) {
    basic[i] = x0 + 1 + i;
    const auto& c = constraints[i];
    for (std::size_t j = 0; j < dim; ++j) {
      coef[i][j] = c.sign * c.vector[j];
      coef[i][dim + j] = -coef[i][j];
    }
    coef[i][x0] = 1;
  }
  // Objective: maximize -x0.
  std::vector<mpq_class> obj(nonbasic.size(), 0);
  mpq_class obj_value = 0;
  obj[x0] = -1;

  auto pivot = [&](std::size_t r, std::size_t col) {
    const mpq_class a = coef[r][col];
    // Solve row r for the entering variable.
    const std::size_t leaving = basic[r];
    std::vector<mpq_class> row(nonbasic.size());
    for (std::size_t j = 0; j < nonbasic.size(); ++j) row[j] = j == col ? mpq_class(1 / a) : mpq_class(-coef[r][j] / a);
    const mpq_class row_rhs = -rhs[r] / a;
    auto substitute = [&](std::vector<mpq_class>& target, mpq_class& constant) {
      const mpq_class f = target[col];
      if (f == 0) return;
      for (std::size_t j = 0; j < nonbasic.size(); ++j) target[j] = j == col ? mpq_class(f * row[j]) : mpq_class(target[j] + f * row[j]);
      constant += f * row_rhs;
    };
    for (std::size_t i = 0; i < m; ++i)
      if (i != r) substitute(coef[i], rhs[i]);
    substitute(obj, obj_value);
    coef[r] = std::move(row);
    rhs[r] = row_rhs;
    basic[r] = nonbasic[col];
    nonbasic[col] = leaving;
  };

  // Make the dictionary feasible: x0 enters, the most violated row leaves.
  {
    std::size_t r = 0;
    for (std::size_t i = 1; i < m; ++i)
      if (rhs[i] < rhs[r]) r = i;
    pivot(r, x0);
  }
  for (;;) {
    // Bland: smallest-index entering variable with positive reduced cost.
    std::size_t col = nonbasic.size();
    for (std::size_t j = 0; j < nonbasic.size(); ++j)
      if (obj[j] > 0 && (col == nonbasic.size() || nonbasic[j] < nonbasic[col])) col = j;
    if (col == nonbasic.size()) break;
    std::size_t r = m;
    mpq_class best;
    for (std::size_t i = 0; i < m; ++i) {
      if (coef[i][col] >= 0) continue;
      const mpq_class ratio = -rhs[i] / coef[i][col];
      if (r == m || ratio < best || (ratio == best && basic[i] < basic[r])) {
        r = i;
        best = ratio;
      }
    }
    if (r == m) throw Error("simplex phase one is unbounded (internal error)");
    pivot(r, col);
  }
  if (obj_value < 0) return std::nullopt;

  std::vector<mpq_class> value(nvars, 0);
  for (std::size_t i = 0; i < m; ++i) value[basic[i]] = rhs[i];
  RationalVector w(dim);
  for (std::size_t j = 0; j < dim; ++j) w[j] = value[j] - value[dim + j];
  for (const auto& c : constraints) {
    mpq_class d = 0;
    for (std::size_t j = 0; j < dim; ++j) d += c.vector[j] * w[j];
    if (c.sign * sgn(d) <= 0) throw Error("simplex witness failed certification (internal error)");
  }
  return w;
}

std::optional<RationalVector> strict_feasible(std::span<const StrictConstraint> constraints, std::size_t dim,
                                              FeasibilityMethod method) {
  return method == FeasibilityMethod::Simplex ? strict_feasible_lp(constraints, dim)
                                              : strict_feasible(constraints, dim);
}

std::optional<BigVector> strict_feasible_integer(std::span<const BigVector> positive_rows, std::size_t dim) {
  std::vector<StrictConstraint> cs;
  cs.reserve(positive_rows.size());
  for (const auto& r : positive_rows) {
    StrictConstraint c;
    c.vector.assign(r.begin(), r.end());
    c.sign = 1;
    cs.push_back(std::move(c));
  }
  auto w = strict_feasible(cs, dim);
  if (!w) return std::nullopt;
  mpz_class den = 1;
  for (const auto& q : *w) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  BigVector out(dim);
  for (std::size_t j = 0; j < dim; ++j) out[j] = (*w)[j].get_num() * (den / (*w)[j].get_den());
  make_primitive(out);
  return out;
}

namespace {

std::optional<std::vector<std::int64_t>> positive_combination(const std::vector<IntVector>& basis, std::size_t n) {
  if (basis.empty()) return std::nullopt;
  // Coordinates i: sum_j c_j basis_j[i] > 0.
  std::vector<BigVector> rows(n, BigVector(basis.size()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) rows[i][j] = static_cast<long>(basis[j][i]);
  auto c = strict_feasible_integer(rows, basis.size());
  if (!c) return std::nullopt;
  BigVector w(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) w[i] += (*c)[j] * static_cast<long>(basis[j][i]);
  make_primitive(w);
  return to_int_vector(w);
}

} // namespace

std::optional<std::vector<std::int64_t>> find_positive_grading(std::span<const IntVector> vectors, std::size_t n) {
  bool ones = true;
  for (const auto& v : vectors) {
    if (v.size() != n) throw InvalidInput("vector length does not match the variable count");
    std::int64_t s = 0;
    for (auto x : v) s += x;
    if (s != 0) ones = false;
  }
  if (ones) return std::vector<std::int64_t>(n, 1);
  if (vectors.empty()) return std::vector<std::int64_t>(n, 1);
  const auto A = IntegerMatrix::from_rows(vectors, n);
  return positive_combination(integer_kernel(A), n);
}

std::optional<std::vector<std::int64_t>> positive_vector_in_row_space(const IntegerMatrix& A) {
  const auto n = A.cols();
  // The all-ones vector lies in the row space iff it is orthogonal to the kernel.
  const auto kernel = integer_kernel(A);
  bool ones = true;
  for (const auto& u : kernel) {
    std::int64_t s = 0;
    for (auto x : u) s += x;
    if (s != 0) ones = false;
  }
  if (ones && A.rows() > 0) return std::vector<std::int64_t>(n, 1);
  std::vector<IntVector> rows;
  for (std::size_t r = 0; r < A.rows(); ++r) rows.push_back(to_int_vector(A.row(r)));
  return positive_combination(rows, n);
}

} // namespace robusta
