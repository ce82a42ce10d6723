#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "linecalc/matrix.hpp"
#include "linecalc/multipoly.hpp"
#include "linecalc/rational_curve.hpp"

namespace linecalc {

/// Ambient dimension N and degrees d^1..d^r of a complete intersection.
struct CIType {
  std::size_t n = 0;
  std::vector<unsigned> degrees;

  std::size_t r() const noexcept { return degrees.size(); }
  /// |d| = sum of all degrees.
  unsigned degree_sum() const;
  /// |d|_{i0} = sum of d^i for i >= i0 (1-based; i0 = r+1 gives 0).
  unsigned partial_sum(std::size_t i0) const;
  unsigned long long degree_product() const;

  friend bool operator==(const CIType&, const CIType&) = default;
};

/// r homogeneous forms in S, T, Z1..Z{N-1}; forms may carry parameters c_k.
class CompleteIntersection {
 public:
  /// Throws NotHomogeneous if a form is not homogeneous of its degree.
  CompleteIntersection(const FieldSpec& f, std::size_t n, std::vector<unsigned> degrees, std::vector<MultiPoly> forms);

  const FieldSpec& field() const noexcept { return field_; }
  const CIType& type() const noexcept { return type_; }
  std::size_t n() const noexcept { return type_.n; }
  std::size_t r() const noexcept { return type_.r(); }
  const std::vector<MultiPoly>& forms() const noexcept { return forms_; }
  const UniversePtr& universe() const noexcept { return universe_; }

  bool has_parameters() const;
  std::size_t max_parameter() const;
  CompleteIntersection evaluate_parameters(std::span<const Scalar> values) const;
  /// h^i -> lambda_i h^i.
  CompleteIntersection scaled(std::span<const Scalar> lambdas) const;
  /// New coordinate k is old coordinate perm[k] (indices over S, T, Z1..).
  CompleteIntersection permuted(std::span<const std::size_t> perm) const;

 private:
  FieldSpec field_;
  CIType type_;
  UniversePtr universe_;
  std::vector<MultiPoly> forms_;
};

/// Point of the standard chart: the line (s : t : s a_1 + t b_1 : ...).
struct LineChartPoint {
  std::vector<Scalar> a;
  std::vector<Scalar> b;

  static LineChartPoint origin(const FieldSpec& f, std::size_t n);
  static LineChartPoint from_ints(const FieldSpec& f, const std::vector<long long>& a, const std::vector<long long>& b);
  std::size_t n() const noexcept { return a.size() + 1; }
  /// a_1..a_{N-1}, b_1..b_{N-1} as a point of the chart universe.
  std::vector<ParamScalar> chart_point() const;
  /// Applies a permutation of the Z coordinates: new Z_k is old Z_{perm[k]} (0-based).
  LineChartPoint permuted_z(std::span<const std::size_t> perm) const;

  friend bool operator==(const LineChartPoint&, const LineChartPoint&) = default;
};

RationalCurve line_param(const LineChartPoint& point);

/// Coefficients f^i_0..f^i_{d^i} of h^i composed with the chart parameterization.
struct MembershipSystem {
  std::vector<std::vector<MultiPoly>> polys;

  std::size_t count() const;
  /// All f^i_k vanish at the point; parameter-carrying systems need parameter-free values.
  bool contains(const LineChartPoint& point) const;
};

/// Coefficients of h o xi in s^d, s^(d-1) t, ..., t^d as polynomials on the chart.
std::vector<MultiPoly> chart_expansion(const MultiPoly& h, unsigned degree);

/// Throws NotHomogeneous (enforced at CompleteIntersection construction).
MembershipSystem membership_system(const CompleteIntersection& x);

/// The (N-1) x |d| matrix whose row j, block i is v(h^i_{Z_j} o xi).
class NonFreeMatrix {
 public:
  NonFreeMatrix(std::size_t rows, std::vector<unsigned> block_widths, std::vector<MultiPoly> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const std::vector<unsigned>& block_widths() const noexcept { return block_widths_; }
  const MultiPoly& symbolic(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  const std::optional<ExactMatrix>& evaluated() const noexcept { return evaluated_; }

  ExactMatrix evaluate(const LineChartPoint& point) const;
  void set_evaluated(ExactMatrix m) { evaluated_ = std::move(m); }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<unsigned> block_widths_;
  std::vector<MultiPoly> entries_;
  std::optional<ExactMatrix> evaluated_;
};

/// When `at` is given the line must lie on X (LineNotContained otherwise)
/// and the evaluated matrix is attached.
NonFreeMatrix nonfree_matrix(const CompleteIntersection& x, const std::optional<LineChartPoint>& at = std::nullopt);

/// True when the r x r minors of the full Jacobian, restricted to the line,
/// have no common projective zero.
bool is_smooth_along_line(const CompleteIntersection& x, const LineChartPoint& point);

/// Same test along an arbitrary rational curve lying on X.
bool is_smooth_along_curve(const CompleteIntersection& x, const RationalCurve& curve);

/// A line of P^N as the reduced row echelon 2 x (N+1) matrix of two spanning points.
struct ProjectiveLine {
  std::vector<Scalar> row0;
  std::vector<Scalar> row1;

  std::size_t pivot0() const;
  std::size_t pivot1() const;
  RationalCurve curve() const;
};

bool canonical_less(const ProjectiveLine& a, const ProjectiveLine& b);

/// X in coordinates where `line` sits in the standard chart.
struct ChartView {
  CompleteIntersection x;
  LineChartPoint point;
  /// New coordinate k is old coordinate permutation[k].
  std::vector<std::size_t> permutation;
};

ChartView move_line_to_chart(const CompleteIntersection& x, const ProjectiveLine& line);

/// Every F_p-rational line on X, canonically sorted. Throws InfiniteField
/// over Q and ParameterPresent for parametric X.
std::vector<ProjectiveLine> enumerate_lines_fq(const CompleteIntersection& x);
/// Every F_p-rational line of P^N, with no containment filter.
std::vector<ProjectiveLine> enumerate_all_lines_fq(const FieldSpec& f, std::size_t n);

}  // namespace linecalc
