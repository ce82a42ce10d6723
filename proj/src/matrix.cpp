#include "linecalc/matrix.hpp"

#include <algorithm>
#include <tuple>

#include "linecalc/error.hpp"

namespace linecalc {

namespace {

// Parity of the permutation that sorts v.
bool odd_sorting_parity(std::vector<std::size_t> v) {
  bool odd = false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[j] < v[i]) odd = !odd;
    }
  }
  return odd;
}

auto pivot_cost(const ParamScalar& x) {
  return std::make_tuple(x.is_constant() ? 0U : 1U, x.total_degree(), x.size());
}

}  // namespace

ExactMatrix::ExactMatrix(const FieldSpec& f, std::size_t rows, std::size_t cols, std::vector<ParamScalar> entries)
    : field_(f), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw Error(ErrorKind::InvalidArgument, "entry count does not match matrix shape");
  }
}

ExactMatrix ExactMatrix::identity(const FieldSpec& f, std::size_t n) {
  ExactMatrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ParamScalar::constant(f, 1);
  return m;
}

ExactMatrix ExactMatrix::from_ints(const FieldSpec& f, const std::vector<std::vector<long long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows[0].size();
  ExactMatrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw Error(ErrorKind::InvalidArgument, "ragged matrix literal");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = ParamScalar::constant(f, rows[i][j]);
  }
  return m;
}

bool ExactMatrix::has_parameters() const {
  return std::any_of(entries_.begin(), entries_.end(), [](const ParamScalar& x) { return !x.is_constant(); });
}

ExactMatrix ExactMatrix::submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  ExactMatrix m(field_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(rows[i], cols[j]);
  }
  return m;
}

ExactMatrix ExactMatrix::transposed() const {
  ExactMatrix m(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  }
  return m;
}

ExactMatrix ExactMatrix::evaluate_parameters(std::span<const Scalar> values) const {
  ExactMatrix m(field_, rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = ParamScalar(entries_[k].evaluate(values));
  return m;
}

std::vector<std::vector<std::string>> ExactMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i].push_back((*this)(i, j).to_string());
  }
  return out;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

RankResult rank_exact(const ExactMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  ExactMatrix a = m;
  std::vector<std::size_t> row_perm(rows), col_perm(cols);
  for (std::size_t i = 0; i < rows; ++i) row_perm[i] = i;
  for (std::size_t j = 0; j < cols; ++j) col_perm[j] = j;

  ParamScalar prev = ParamScalar::constant(m.field(), 1);
  std::size_t k = 0;
  for (; k < std::min(rows, cols); ++k) {
    bool found = false;
    std::size_t pi = 0, pj = 0;
    for (std::size_t i = k; i < rows; ++i) {
      for (std::size_t j = k; j < cols; ++j) {
        if (a(i, j).is_zero()) continue;
        if (!found || pivot_cost(a(i, j)) < pivot_cost(a(pi, pj))) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    }
    if (!found) break;
    if (pi != k) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(k, j), a(pi, j));
      std::swap(row_perm[k], row_perm[pi]);
    }
    if (pj != k) {
      for (std::size_t i = 0; i < rows; ++i) std::swap(a(i, k), a(i, pj));
      std::swap(col_perm[k], col_perm[pj]);
    }
    const ParamScalar pivot = a(k, k);
    for (std::size_t i = k + 1; i < rows; ++i) {
      const ParamScalar lead = a(i, k);
      for (std::size_t j = k + 1; j < cols; ++j) {
        ParamScalar v = pivot * a(i, j);
        if (!lead.is_zero() && !a(k, j).is_zero()) v -= lead * a(k, j);
        a(i, j) = v.divide_exact(prev);
      }
      a(i, k) = ParamScalar(m.field());
    }
    prev = pivot;
  }

  RankResult result;
  result.rank = k;
  std::vector<std::size_t> pr(row_perm.begin(), row_perm.begin() + static_cast<std::ptrdiff_t>(k));
  std::vector<std::size_t> pc(col_perm.begin(), col_perm.begin() + static_cast<std::ptrdiff_t>(k));
  const bool flip = odd_sorting_parity(pr) != odd_sorting_parity(pc);
  result.certificate = flip ? -prev : prev;
  std::sort(pr.begin(), pr.end());
  std::sort(pc.begin(), pc.end());
  result.pivot_rows = std::move(pr);
  result.pivot_cols = std::move(pc);
  return result;
}

ParamScalar determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
  RankResult r = rank_exact(m);
  if (r.rank < m.rows()) return ParamScalar(m.field());
  return r.certificate;
}

std::vector<std::vector<Scalar>> kernel_basis(const ExactMatrix& m) {
  if (m.has_parameters()) {
    throw Error(ErrorKind::ParameterPresent, "kernel_basis needs a parameter-free matrix");
  }
  const std::size_t rows = m.rows(), cols = m.cols();
  const FieldSpec& f = m.field();
  std::vector<std::vector<Scalar>> a(rows, std::vector<Scalar>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j).constant_value();
  }
  // reduced row echelon form
  std::vector<std::size_t> pivot_col_of_row;
  std::size_t r = 0;
  for (std::size_t j = 0; j < cols && r < rows; ++j) {
    std::size_t p = r;
    while (p < rows && a[p][j].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Scalar inv = a[r][j].inverse();
    for (std::size_t jj = j; jj < cols; ++jj) a[r][jj] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][j].is_zero()) continue;
      const Scalar factor = a[i][j];
      for (std::size_t jj = j; jj < cols; ++jj) {
        if (!a[r][jj].is_zero()) a[i][jj] -= factor * a[r][jj];
      }
    }
    pivot_col_of_row.push_back(j);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto j : pivot_col_of_row) is_pivot[j] = true;

  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols, Scalar::zero(f));
    v[free] = Scalar::one(f);
    for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i) v[pivot_col_of_row[i]] = -a[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace linecalc
