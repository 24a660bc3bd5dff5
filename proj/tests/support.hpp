#pragma once

#include "robusta/io.hpp"
#include "robusta/lattice.hpp"

#include <random>
#include <string>
#include <vector>

namespace robusta::testing {

inline BinomialIdeal ideal(const std::string& text) { return io::parse_ideal(text); }

inline Binomial binomial(const std::string& text, const VariableContext& ctx) {
  const auto b = io::parse_binomial(text, ctx);
  return Binomial::make(b.plus, b.minus);
}

inline std::vector<Binomial> binomials(const VariableContext& ctx, std::initializer_list<const char*> texts) {
  std::vector<Binomial> out;
  for (const char* t : texts) out.push_back(binomial(t, ctx));
  canonicalize(out);
  return out;
}

inline std::vector<Binomial> sorted(std::vector<Binomial> v) {
  canonicalize(v);
  return v;
}

inline Monomial monomial(const std::string& text, const VariableContext& ctx) { return io::parse_monomial(text, ctx); }

/// Matrix whose toric ideal is generated by the 2x2 minors of a generic
/// m x n matrix of variables (row by row).
inline IntegerMatrix segre(int m, int n) {
  std::vector<std::vector<long>> rows;
  for (int i = 0; i < m; ++i) {
    std::vector<long> r(static_cast<std::size_t>(m * n), 0);
    for (int j = 0; j < n; ++j) r[static_cast<std::size_t>(i * n + j)] = 1;
    rows.push_back(r);
  }
  for (int j = 0; j < n; ++j) {
    std::vector<long> r(static_cast<std::size_t>(m * n), 0);
    for (int i = 0; i < m; ++i) r[static_cast<std::size_t>(i * n + j)] = 1;
    rows.push_back(r);
  }
  return IntegerMatrix::from_rows(rows);
}

inline BinomialIdeal generic_minors(int m, int n) { return toric_from_matrix(segre(m, n)); }

inline IntegerMatrix matrix_4x6() {
  return IntegerMatrix::from_rows({{1, 1, 1, 1, 1, 1}, {1, 1, 0, 0, 0, 0}, {0, 0, 1, 2, 0, 0}, {1, 0, 1, 0, 3, 1}});
}

inline IntegerMatrix matrix_2x5() { return IntegerMatrix::from_rows({{1, 1, 1, 1, 1}, {0, 1, 2, 7, 8}}); }

/// Random matrix with a first row of ones, so its toric ideal is
/// homogeneous in the standard grading.
inline IntegerMatrix random_graded_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int max_entry) {
  std::vector<std::vector<long>> r(rows, std::vector<long>(cols, 1));
  for (std::size_t i = 1; i < rows; ++i)
    for (auto& x : r[i]) x = static_cast<long>(rng() % static_cast<std::uint64_t>(max_entry + 1));
  return IntegerMatrix::from_rows(r);
}

} // namespace robusta::testing
