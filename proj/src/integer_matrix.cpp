#include "robusta/integer_matrix.hpp"

#include "robusta/errors.hpp"

#include <algorithm>
#include <numeric>

namespace robusta {

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  if (rows.empty()) return {};
  IntegerMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw InvalidInput("matrix rows have different lengths");
    for (std::size_t c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(std::span<const IntVector> rows, std::size_t cols) {
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidInput("matrix rows have different lengths");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = static_cast<long>(rows[r][c]);
  }
  return m;
}

BigVector IntegerMatrix::row(std::size_t r) const {
  return BigVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

BigVector IntegerMatrix::column(std::size_t c) const {
  BigVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

std::size_t IntegerMatrix::rank() const {
  std::vector<BigVector> rows;
  for (std::size_t r = 0; r < rows_; ++r) rows.push_back(row(r));
  return hermite_basis(std::move(rows)).size();
}

BigVector IntegerMatrix::apply(std::span<const std::int64_t> u) const {
  if (u.size() != cols_) throw InvalidInput("vector length does not match matrix columns");
  BigVector out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += at(r, c) * static_cast<long>(u[c]);
  return out;
}

namespace {

// Integer row reduction of rows[first..] on the leading `width` columns.
// Returns the number of pivot rows; pivot columns are appended to pivots.
// Pivots are made positive. Rows beyond the pivots are zero on the leading
// columns.
std::size_t echelonize(std::vector<BigVector>& rows, std::size_t width, std::vector<std::size_t>* pivots) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < width && r < rows.size(); ++c) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t k = r; k < rows.size(); ++k) {
        if (rows[k][c] == 0) continue;
        if (best == rows.size() || abs(rows[k][c]) < abs(rows[best][c])) best = k;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t k = r + 1; k < rows.size(); ++k) {
        if (rows[k][c] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), rows[k][c].get_mpz_t(), rows[r][c].get_mpz_t());
        for (std::size_t j = 0; j < rows[k].size(); ++j) rows[k][j] -= q * rows[r][j];
        if (rows[k][c] != 0) done = false;
      }
      if (done) {
        if (rows[r][c] < 0)
          for (auto& x : rows[r]) x = -x;
        if (pivots) pivots->push_back(c);
        ++r;
        break;
      }
    }
  }
  return r;
}

mpz_class l1_norm(const BigVector& v) {
  mpz_class s = 0;
  for (const auto& x : v) s += abs(x);
  return s;
}

} // namespace

std::vector<BigVector> hermite_basis(std::vector<BigVector> rows) {
  if (rows.empty()) return {};
  const auto width = rows.front().size();
  std::vector<std::size_t> pivots;
  const auto r = echelonize(rows, width, &pivots);
  rows.resize(r);
  for (std::size_t k = 0; k < r; ++k) {
    const auto c = pivots[k];
    for (std::size_t above = 0; above < k; ++above) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), rows[above][c].get_mpz_t(), rows[k][c].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t j = 0; j < width; ++j) rows[above][j] -= q * rows[k][j];
    }
  }
  return rows;
}

std::vector<IntVector> integer_kernel(const IntegerMatrix& A) {
  const auto m = A.rows();
  const auto n = A.cols();
  std::vector<BigVector> rows(n, BigVector(m + n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) rows[i][j] = A.at(j, i);
    rows[i][m + i] = 1;
  }
  const auto r = echelonize(rows, m, nullptr);
  std::vector<BigVector> kernel;
  for (std::size_t i = r; i < n; ++i) kernel.emplace_back(rows[i].begin() + static_cast<std::ptrdiff_t>(m), rows[i].end());
  kernel = hermite_basis(std::move(kernel));

  bool improved = true;
  while (improved) {
    improved = false;
    for (std::size_t i = 0; i < kernel.size(); ++i) {
      for (std::size_t j = 0; j < kernel.size(); ++j) {
        if (i == j) continue;
        for (int s : {-1, 1}) {
          BigVector cand = kernel[i];
          for (std::size_t k = 0; k < n; ++k) cand[k] += s * kernel[j][k];
          if (l1_norm(cand) < l1_norm(kernel[i])) {
            kernel[i] = std::move(cand);
            improved = true;
          }
        }
      }
    }
  }

  std::vector<IntVector> out;
  for (auto& v : kernel) {
    auto first = std::find_if(v.begin(), v.end(), [](const mpz_class& x) { return x != 0; });
    if (first != v.end() && *first < 0)
      for (auto& x : v) x = -x;
    out.push_back(to_int_vector(v));
  }
  std::sort(out.begin(), out.end(), [](const IntVector& a, const IntVector& b) {
    auto na = std::accumulate(a.begin(), a.end(), std::int64_t{0}, [](auto s, auto x) { return s + std::abs(x); });
    auto nb = std::accumulate(b.begin(), b.end(), std::int64_t{0}, [](auto s, auto x) { return s + std::abs(x); });
    if (na != nb) return na < nb;
    return a > b;
  });
  return out;
}

std::optional<BigVector> solve_integer(const IntegerMatrix& A, std::span<const mpz_class> b) {
  const auto K = A.rows();
  const auto n = A.cols();
  if (b.size() != K) throw InvalidInput("right-hand side length does not match matrix rows");
  // Rows of [A^T | I]; after reduction row k = (U A^T)_k | U_k.
  std::vector<BigVector> rows(n, BigVector(K + n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < K; ++j) rows[i][j] = A.at(j, i);
    rows[i][K + i] = 1;
  }
  std::vector<std::size_t> pivots;
  const auto r = echelonize(rows, K, &pivots);
  // Solve y^T R = b^T for the pivot rows.
  BigVector y(r);
  for (std::size_t k = 0; k < r; ++k) {
    mpz_class rhs = b[pivots[k]];
    for (std::size_t kk = 0; kk < k; ++kk) rhs -= y[kk] * rows[kk][pivots[k]];
    if (!mpz_divisible_p(rhs.get_mpz_t(), rows[k][pivots[k]].get_mpz_t())) return std::nullopt;
    y[k] = rhs / rows[k][pivots[k]];
  }
  for (std::size_t c = 0; c < K; ++c) {
    mpz_class s = 0;
    for (std::size_t k = 0; k < r; ++k) s += y[k] * rows[k][c];
    if (s != b[c]) return std::nullopt;
  }
  BigVector x(n, 0);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t i = 0; i < n; ++i) x[i] += y[k] * rows[k][K + i];
  return x;
}

std::optional<RationalVector> solve_rational(const std::vector<RationalVector>& A, std::span<const mpq_class> b) {
  const auto K = A.size();
  if (b.size() != K) throw InvalidInput("right-hand side length does not match matrix rows");
  const auto n = K == 0 ? 0 : A.front().size();
  std::vector<RationalVector> M(K, RationalVector(n + 1));
  for (std::size_t i = 0; i < K; ++i) {
    if (A[i].size() != n) throw InvalidInput("matrix rows have different lengths");
    for (std::size_t j = 0; j < n; ++j) M[i][j] = A[i][j];
    M[i][n] = b[i];
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < K; ++c) {
    std::size_t p = r;
    while (p < K && M[p][c] == 0) ++p;
    if (p == K) continue;
    std::swap(M[p], M[r]);
    const mpq_class inv = 1 / M[r][c];
    for (auto& x : M[r]) x *= inv;
    for (std::size_t k = 0; k < K; ++k) {
      if (k == r || M[k][c] == 0) continue;
      const mpq_class f = M[k][c];
      for (std::size_t j = c; j <= n; ++j) M[k][j] -= f * M[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t k = r; k < K; ++k)
    if (M[k][n] != 0) return std::nullopt;
  RationalVector x(n, 0);
  for (std::size_t k = 0; k < r; ++k) x[pivots[k]] = M[k][n];
  return x;
}

IntVector to_int_vector(std::span<const mpz_class> v) {
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!x.fits_slong_p()) throw OverflowError("integer entry does not fit 64 bits");
    out.push_back(x.get_si());
  }
  return out;
}

BigVector to_big_vector(std::span<const std::int64_t> v) {
  BigVector out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

void make_primitive(BigVector& v) {
  mpz_class g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0 || g == 1) return;
  for (auto& x : v) x /= g;
}

} // namespace robusta
