#include "linecalc/curves.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "linecalc/error.hpp"

namespace linecalc {

int SplittingType::degree() const {
  int d = 0;
  for (int a : entries) d += a;
  return d;
}

std::string SplittingType::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0) s += ", ";
    s += std::to_string(entries[i]);
  }
  return s + "]";
}

namespace {

// Dimension of the kernel of the map H^0(O(src))^cols -> (+)_i H^0(O(e_i + src))
// given by multiplication with forms[i][j], deg forms[i][j] = e_i.
long long multiplication_kernel_dim(const FieldSpec& f, const std::vector<std::vector<BinaryForm>>& forms,
                                    int src) {
  if (src < 0 || forms.empty()) return 0;
  const std::size_t ncols_src = forms.front().size();
  const std::size_t width = static_cast<std::size_t>(src) + 1;
  std::size_t nrows = 0;
  std::vector<std::size_t> offset;
  for (const auto& row : forms) {
    offset.push_back(nrows);
    nrows += row.front().degree() + width;
  }
  ExactMatrix m(f, nrows, ncols_src * width);
  for (std::size_t i = 0; i < forms.size(); ++i) {
    for (std::size_t j = 0; j < ncols_src; ++j) {
      const BinaryForm& g = forms[i][j];
      for (unsigned l = 0; l <= g.degree(); ++l) {
        if (g.coeff(l).is_zero()) continue;
        for (std::size_t k = 0; k < width; ++k) m(offset[i] + k + l, j * width + k) = g.coeff(l);
      }
    }
  }
  return static_cast<long long>(m.cols()) - static_cast<long long>(rank_exact(m).rank);
}

}  // namespace

long long tangent_euler_characteristic(const CIType& t, unsigned b, int m) {
  const long long n = static_cast<long long>(t.n);
  return static_cast<long long>(b) * (n + 1 - t.degree_sum()) + (n - static_cast<long long>(t.r())) * (m + 1);
}

Cohomology tangent_cohomology(const CompleteIntersection& x, const RationalCurve& mu, int m) {
  if (m <= -2) throw Error(ErrorKind::TwistTooNegative, "twists below -1 are not supported");
  if (x.has_parameters()) throw Error(ErrorKind::ParameterPresent, "substitute parameters before computing cohomology");
  if (mu.ambient_dimension() != x.n()) throw Error(ErrorKind::InvalidArgument, "curve and X live in different spaces");
  for (std::size_t i = 0; i < x.r(); ++i) {
    if (!mu.pull_back(x.forms()[i], x.type().degrees[i]).is_zero()) {
      throw Error(ErrorKind::CurveNotOnX, "the curve does not lie on X");
    }
  }
  if (!is_smooth_along_curve(x, mu)) throw Error(ErrorKind::SingularAlongCurve, "X is singular along the curve");
  const unsigned b = mu.degree();
  std::vector<std::vector<BinaryForm>> psi(x.r());
  for (std::size_t i = 0; i < x.r(); ++i) {
    const unsigned d = x.type().degrees[i];
    for (std::size_t j = 0; j <= x.n(); ++j) psi[i].push_back(mu.pull_back(differentiate(x.forms()[i], j), d - 1));
    // Euler: sum_j X_j h_{X_j} restricts to d h = 0 along mu
    BinaryForm euler(x.field(), d * b);
    for (std::size_t j = 0; j <= x.n(); ++j) euler += psi[i][j] * mu.components()[j];
    if (!euler.is_zero()) throw std::logic_error("Euler section is not in the kernel");
  }
  Cohomology c;
  c.h0 = multiplication_kernel_dim(x.field(), psi, static_cast<int>(b) + m) - (m + 1);
  c.h1 = c.h0 - tangent_euler_characteristic(x.type(), b, m);
  return c;
}

long long normal_h0(const CompleteIntersection& x, const LineChartPoint& point, int m) {
  const RationalCurve line = line_param(point);
  std::vector<std::vector<BinaryForm>> delta(x.r());
  for (std::size_t i = 0; i < x.r(); ++i) {
    const unsigned d = x.type().degrees[i];
    for (std::size_t j = 0; j + 1 < x.n(); ++j) {
      delta[i].push_back(line.pull_back(differentiate(x.forms()[i], 2 + j), d - 1));
    }
  }
  if (x.n() < 2) return 0;
  return multiplication_kernel_dim(x.field(), delta, 1 + m);
}

SplittingType normal_splitting_line(const CompleteIntersection& x, const LineChartPoint& point) {
  if (x.has_parameters()) throw Error(ErrorKind::ParameterPresent, "substitute parameters before splitting");
  if (!membership_system(x).contains(point)) throw Error(ErrorKind::LineNotContained, "the line does not lie on X");
  if (!is_smooth_along_line(x, point)) throw Error(ErrorKind::SingularAlongLine, "X is singular along the line");
  const long long n = static_cast<long long>(x.n());
  const long long rank = n - static_cast<long long>(x.r()) - 1;
  const long long degree = n - 1 - x.type().degree_sum();
  const long long floor = degree - std::max(0LL, rank - 1);
  std::map<int, long long> h0;
  auto h0_at = [&](int twist) {
    auto it = h0.find(twist);
    if (it == h0.end()) it = h0.emplace(twist, normal_h0(x, point, twist)).first;
    return it->second;
  };
  SplittingType s;
  long long above = 0;  // #{a_i >= k+1}
  for (long long k = 1; static_cast<long long>(s.entries.size()) < rank; --k) {
    if (k < floor) throw std::logic_error("normal splitting did not close at the degree floor");
    const long long at_least = h0_at(static_cast<int>(-k)) - h0_at(static_cast<int>(-k - 1));
    for (long long c = above; c < at_least; ++c) s.entries.push_back(static_cast<int>(k));
    above = at_least;
  }
  if (s.degree() != degree) throw std::logic_error("normal splitting has the wrong degree");
  return s;
}

SplittingType tangent_splitting_line(const CompleteIntersection& x, const LineChartPoint& point) {
  SplittingType s = normal_splitting_line(x, point);
  s.entries.insert(s.entries.begin(), 2);
  return s;
}

RationalCurve precompose(const RationalCurve& mu, const BinaryForm& p, const BinaryForm& q) {
  if (p.degree() != q.degree() || p.degree() == 0) {
    throw Error(ErrorKind::BasePointedCover, "cover forms must share a positive degree");
  }
  if ((p.is_zero() && q.is_zero()) || binary_gcd(std::vector<BinaryForm>{p, q}).degree() != 0) {
    throw Error(ErrorKind::BasePointedCover, "cover forms share a common zero");
  }
  std::vector<BinaryForm> comps;
  for (const auto& c : mu.components()) comps.push_back(c.compose(p, q));
  return RationalCurve(std::move(comps));
}

std::string_view gate_verdict_name(GateVerdict v) {
  return v == GateVerdict::AllImmersionsNonFree ? "AllImmersionsNonFree" : "NotTriggered";
}

DegreeGate degree_nonfree_gate(const CIType& t, unsigned b) {
  if (b == 0) throw Error(ErrorKind::InvalidArgument, "curve degree must be at least 1");
  DegreeGate g;
  g.splitting_degree = static_cast<long long>(b) * (static_cast<long long>(t.n) + 1 - t.degree_sum());
  g.verdict = t.degree_sum() > t.n ? GateVerdict::AllImmersionsNonFree : GateVerdict::NotTriggered;
  return g;
}

}  // namespace linecalc
