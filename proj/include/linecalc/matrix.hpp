#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "linecalc/param_scalar.hpp"

namespace linecalc {

/// Dense row-major matrix over the parameter ring.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), entries_(rows * cols, ParamScalar(f)) {}
  ExactMatrix(const FieldSpec& f, std::size_t rows, std::size_t cols, std::vector<ParamScalar> entries);

  static ExactMatrix identity(const FieldSpec& f, std::size_t n);
  /// Rows given as integer literals; handy for tests.
  static ExactMatrix from_ints(const FieldSpec& f, const std::vector<std::vector<long long>>& rows);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const ParamScalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  ParamScalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const std::vector<ParamScalar>& entries() const noexcept { return entries_; }

  bool has_parameters() const;
  ExactMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
  ExactMatrix transposed() const;
  /// Substitutes values for c_1, c_2, ...; the result is parameter-free.
  ExactMatrix evaluate_parameters(std::span<const Scalar> values) const;

  /// Entries as printable strings, row by row.
  std::vector<std::vector<std::string>> to_strings() const;

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

 private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ParamScalar> entries_;
};

struct RankResult {
  std::size_t rank = 0;
  /// det of the submatrix on (pivot_rows, pivot_cols), both ascending.
  /// Nonzero as a polynomial in the parameters; 1 for rank 0.
  ParamScalar certificate;
  std::vector<std::size_t> pivot_rows;
  std::vector<std::size_t> pivot_cols;
};

/// Rank over the fraction field of the parameter ring via fraction-free
/// (Bareiss) elimination with full pivoting.
RankResult rank_exact(const ExactMatrix& m);

/// Determinant of a square matrix via Bareiss elimination.
ParamScalar determinant(const ExactMatrix& m);

/// Basis of the right kernel of a parameter-free matrix.
/// Throws ParameterPresent if any entry carries a parameter.
std::vector<std::vector<Scalar>> kernel_basis(const ExactMatrix& m);

}  // namespace linecalc
