#include "linecalc/nonfree.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "linecalc/error.hpp"

namespace linecalc {

MultiPoly symbolic_determinant(const std::vector<std::vector<const MultiPoly*>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0 || n > 20) throw Error(ErrorKind::InvalidArgument, "determinant size out of range");
  const MultiPoly& any = *rows[0][0];
  std::vector<std::optional<MultiPoly>> dp(std::size_t{1} << n);
  dp[0] = MultiPoly::constant(any.universe(), ParamScalar::constant(any.field(), 1));
  for (std::uint32_t mask = 0; mask + 1 < dp.size(); ++mask) {
    if (!dp[mask] || dp[mask]->is_zero()) continue;
    const std::size_t k = static_cast<std::size_t>(std::popcount(mask));
    for (std::size_t c = 0; c < n; ++c) {
      if (mask & (1U << c)) continue;
      const MultiPoly& e = *rows[k][c];
      if (e.is_zero()) continue;
      MultiPoly term = *dp[mask] * e;
      if (std::popcount(mask >> (c + 1)) % 2 == 1) term = -term;
      auto& slot = dp[mask | (1U << c)];
      if (slot) {
        *slot += term;
      } else {
        slot = std::move(term);
      }
    }
  }
  return dp.back() ? *dp.back() : MultiPoly(any.universe(), any.field());
}

namespace {

struct Pivot {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  ParamScalar minor;
};

std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

// Lexicographically first row basis, then the first column basis on those rows.
Pivot first_nonsingular_minor(const ExactMatrix& m, std::size_t target) {
  Pivot p;
  const auto cols = all_indices(m.cols());
  for (std::size_t i = 0; i < m.rows() && p.rows.size() < target; ++i) {
    auto trial = p.rows;
    trial.push_back(i);
    if (rank_exact(m.submatrix(trial, cols)).rank == trial.size()) p.rows = std::move(trial);
  }
  for (std::size_t c = 0; c < m.cols() && p.cols.size() < target; ++c) {
    auto trial = p.cols;
    trial.push_back(c);
    if (rank_exact(m.submatrix(p.rows, trial)).rank == trial.size()) p.cols = std::move(trial);
  }
  p.minor = target == 0 ? ParamScalar::constant(m.field(), 1) : determinant(m.submatrix(p.rows, p.cols));
  return p;
}

}  // namespace

LocalEquations local_equations(const CompleteIntersection& x, const LineChartPoint& point) {
  const NonFreeMatrix m = nonfree_matrix(x, point);
  const ExactMatrix& at = *m.evaluated();
  const std::size_t width = m.cols();
  const std::size_t rank = rank_exact(at).rank;
  if (rank == width) throw Error(ErrorKind::NotCorankOne, "M(h) has full rank at the line, so the line is free");
  if (rank + 1 < width) {
    throw Error(ErrorKind::NotCorankOne,
                "M(h) has corank " + std::to_string(width - rank) + " at the line; only corank 1 is supported");
  }
  LocalEquations eq;
  eq.base = point;
  Pivot p = first_nonsingular_minor(at, width - 1);
  eq.pivot_rows = p.rows;
  eq.pivot_cols = p.cols;
  eq.pivot_minor = p.minor;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (std::find(p.rows.begin(), p.rows.end(), i) != p.rows.end()) continue;
    std::vector<std::size_t> rows = p.rows;
    rows.insert(std::upper_bound(rows.begin(), rows.end(), i), i);
    std::vector<std::vector<const MultiPoly*>> entries;
    for (auto r : rows) {
      entries.emplace_back();
      for (std::size_t c = 0; c < width; ++c) entries.back().push_back(&m.symbolic(r, c));
    }
    eq.bordering_rows.push_back(i);
    eq.minors.push_back(symbolic_determinant(entries));
  }
  return eq;
}

ExactMatrix jacobian_def_matrix(const CompleteIntersection& x, const LocalEquations& eq) {
  const NonFreeMatrix m = nonfree_matrix(x, eq.base);
  const ExactMatrix& at = *m.evaluated();
  const std::size_t z = x.n() - 1;
  const std::size_t nrows = x.type().degree_sum() + x.r() + eq.minors.size();
  ExactMatrix jac(x.field(), nrows, 2 * z);
  std::size_t row = 0;
  std::size_t col0 = 0;
  for (std::size_t i = 0; i < x.r(); ++i) {
    const unsigned d = x.type().degrees[i];
    // d f_k / d a_j = M[j][k] (k < d), d f_k / d b_j = M[j][k-1] (k > 0)
    for (unsigned k = 0; k <= d; ++k, ++row) {
      for (std::size_t j = 0; j < z; ++j) {
        if (k < d) jac(row, j) = at(j, col0 + k);
        if (k > 0) jac(row, z + j) = at(j, col0 + k - 1);
      }
    }
    col0 += d;
  }
  const auto pt = eq.base.chart_point();
  for (const auto& g : eq.minors) {
    for (std::size_t v = 0; v < 2 * z; ++v) jac(row, v) = differentiate(g, v).evaluate(pt);
    ++row;
  }
  return jac;
}

ExactMatrix jacobian_def_matrix(const CompleteIntersection& x, const LineChartPoint& point) {
  return jacobian_def_matrix(x, local_equations(x, point));
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::SmoothExpectedDim:
      return "SmoothExpectedDim";
    case Verdict::NotSmoothOrExcess:
      return "NotSmoothOrExcess";
    case Verdict::NotInJ:
      return "NotInJ";
    case Verdict::NotContained:
      return "NotContained";
  }
  return "?";
}

SmoothnessReport expected_pair_report(const CompleteIntersection& x, const LineChartPoint& point) {
  SmoothnessReport rep;
  const long long n = static_cast<long long>(x.n());
  const long long dsum = x.type().degree_sum();
  rep.m = n - dsum;
  rep.required_rank = static_cast<std::size_t>(std::max(0LL, dsum + static_cast<long long>(x.r()) + rep.m));
  rep.certificate = ParamScalar::constant(x.field(), 1);
  rep.contained = membership_system(x).contains(point);
  if (!rep.contained) {
    rep.verdict = Verdict::NotContained;
    return rep;
  }
  rep.m_matrix = nonfree_matrix(x, point);
  const auto mrank = rank_exact(*rep.m_matrix->evaluated());
  rep.rank_m = mrank.rank;
  rep.corank = rep.m_matrix->cols() - mrank.rank;
  rep.in_j = rep.corank >= 1;
  if (!rep.in_j) {
    rep.verdict = Verdict::NotInJ;
    rep.certificate = mrank.certificate;
    rep.genericity.conditions.push_back(mrank.certificate);
    rep.notes.push_back("M(h) has full rank at the line, so the line is free");
    return rep;
  }
  if (rep.corank >= 2) {
    rep.verdict = Verdict::NotSmoothOrExcess;
    rep.notes.push_back("corank " + std::to_string(rep.corank) + " of M(h); local equations are only built at corank 1");
    return rep;
  }
  rep.equations = local_equations(x, point);
  rep.jacobian = jacobian_def_matrix(x, *rep.equations);
  const auto jrank = rank_exact(*rep.jacobian);
  rep.jacobian_rank = jrank.rank;
  rep.certificate = jrank.certificate;
  rep.genericity.conditions.push_back(rep.equations->pivot_minor);
  rep.genericity.conditions.push_back(jrank.certificate);
  if (rep.jacobian_rank == rep.required_rank) {
    rep.verdict = Verdict::SmoothExpectedDim;
    rep.local_dimension = 2 * (n - 1) - static_cast<long long>(rep.required_rank);
  } else {
    rep.verdict = Verdict::NotSmoothOrExcess;
    rep.notes.push_back("Jacobian rank " + std::to_string(rep.jacobian_rank) + " is below the required " +
                        std::to_string(rep.required_rank));
  }
  return rep;
}

}  // namespace linecalc
