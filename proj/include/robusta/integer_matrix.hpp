#pragma once

#include "robusta/monomial.hpp"

#include <gmpxx.h>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace robusta {

using BigVector = std::vector<mpz_class>;
using RationalVector = std::vector<mpq_class>;

/// Dense rows x cols matrix of arbitrary-precision integers.
class IntegerMatrix {
public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntegerMatrix from_rows(const std::vector<std::vector<long>>& rows);
  static IntegerMatrix from_rows(std::span<const IntVector> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpz_class& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  BigVector row(std::size_t r) const;
  BigVector column(std::size_t c) const;
  IntegerMatrix transpose() const;
  std::size_t rank() const;
  /// A * u for an integer vector u of length cols().
  BigVector apply(std::span<const std::int64_t> u) const;

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

/// Row-style Hermite normal form of the lattice spanned by the given rows:
/// nonzero rows only, positive pivots, entries above each pivot reduced into
/// [0, pivot).
std::vector<BigVector> hermite_basis(std::vector<BigVector> rows);

/// Z-basis of {u in Z^cols : A u = 0} via integer row reduction of
/// [A^T | I]. The basis is put in Hermite form, then greedily size-reduced
/// in the L1 norm, and each vector is oriented with a positive first entry.
std::vector<IntVector> integer_kernel(const IntegerMatrix& A);

/// Some integer solution of A x = b, or nullopt.
std::optional<BigVector> solve_integer(const IntegerMatrix& A, std::span<const mpz_class> b);

/// Some rational solution of A x = b, or nullopt.
std::optional<RationalVector> solve_rational(const std::vector<RationalVector>& A, std::span<const mpq_class> b);

IntVector to_int_vector(std::span<const mpz_class> v);
BigVector to_big_vector(std::span<const std::int64_t> v);

/// Divides by the gcd of the entries (no-op for the zero vector).
void make_primitive(BigVector& v);

} // namespace robusta
