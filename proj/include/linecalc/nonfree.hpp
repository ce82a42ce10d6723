#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "linecalc/grass.hpp"

namespace linecalc {

/// Bordered-minor equations for the non-free locus near a corank-1 line.
struct LocalEquations {
  LineChartPoint base;
  /// Nonsingular (|d|-1)-minor of M(h) at the base point: rows and columns, ascending.
  std::vector<std::size_t> pivot_rows;
  std::vector<std::size_t> pivot_cols;
  ParamScalar pivot_minor;
  /// For each remaining row i, g = det M(h)[pivot_rows + {i}, all columns].
  std::vector<std::size_t> bordering_rows;
  std::vector<MultiPoly> minors;
};

/// Throws LineNotContained and NotCorankOne (corank 0: free line; corank >= 2: unsupported).
LocalEquations local_equations(const CompleteIntersection& x, const LineChartPoint& point);

/// D_a | D_b rows of all f^i_k followed by those of the local equations,
/// evaluated at the base point: (|d| + r + m) x 2(N-1).
ExactMatrix jacobian_def_matrix(const CompleteIntersection& x, const LocalEquations& eq);
ExactMatrix jacobian_def_matrix(const CompleteIntersection& x, const LineChartPoint& point);

enum class Verdict { SmoothExpectedDim, NotSmoothOrExcess, NotInJ, NotContained };

std::string_view verdict_name(Verdict v);

struct GenericityCertificate {
  /// Nonzero polynomials in c whose joint nonvanishing gives the reported ranks.
  std::vector<ParamScalar> conditions;
  /// Sampled parameter values, when the report came from a sampled draw.
  std::optional<FieldSpec> witness_field;
  std::vector<Scalar> witness;
};

struct SmoothnessReport {
  bool contained = false;
  bool in_j = false;
  std::size_t rank_m = 0;
  std::size_t corank = 0;
  std::optional<NonFreeMatrix> m_matrix;
  std::optional<LocalEquations> equations;
  std::optional<ExactMatrix> jacobian;
  std::size_t jacobian_rank = 0;
  std::size_t required_rank = 0;
  /// Bordered minors used: N - |d|.
  long long m = 0;
  Verdict verdict = Verdict::NotContained;
  std::optional<long long> local_dimension;
  ParamScalar certificate;
  GenericityCertificate genericity;
  std::vector<std::string> notes;
};

/// Never throws on mathematical failure; every outcome lands in the verdict.
SmoothnessReport expected_pair_report(const CompleteIntersection& x, const LineChartPoint& point);

/// Determinant of a square matrix of polynomials, division free.
MultiPoly symbolic_determinant(const std::vector<std::vector<const MultiPoly*>>& rows);

}  // namespace linecalc
