#pragma once

#include <string>
#include <vector>

#include "linecalc/grass.hpp"

namespace linecalc {

/// Non-increasing a_1 >= a_2 >= ... of a bundle on P^1.
struct SplittingType {
  std::vector<int> entries;

  int degree() const;
  std::size_t rank() const noexcept { return entries.size(); }
  std::string to_string() const;

  friend bool operator==(const SplittingType&, const SplittingType&) = default;
};

struct Cohomology {
  long long h0 = 0;
  long long h1 = 0;
};

/// h^0 and h^1 of mu^* T_X(m) via the Euler-kernel presentation. m >= -1.
/// Throws TwistTooNegative, CurveNotOnX, SingularAlongCurve, ParameterPresent.
Cohomology tangent_cohomology(const CompleteIntersection& x, const RationalCurve& mu, int m);

/// Euler characteristic b(N+1-|d|) + (N-r)(m+1) of mu^* T_X(m).
long long tangent_euler_characteristic(const CIType& t, unsigned b, int m);

/// h^0(N_{L/X}(m)) for the line at `point`; no containment or smoothness checks.
long long normal_h0(const CompleteIntersection& x, const LineChartPoint& point, int m);

/// Splitting type of N_{L/X}. Throws LineNotContained, SingularAlongLine, ParameterPresent.
SplittingType normal_splitting_line(const CompleteIntersection& x, const LineChartPoint& point);

/// T_X restricted to the line: [2] merged into the normal splitting.
SplittingType tangent_splitting_line(const CompleteIntersection& x, const LineChartPoint& point);

/// mu composed with a cover (P : Q) of P^1. Throws BasePointedCover.
RationalCurve precompose(const RationalCurve& mu, const BinaryForm& p, const BinaryForm& q);

enum class GateVerdict { AllImmersionsNonFree, NotTriggered };

std::string_view gate_verdict_name(GateVerdict v);

struct DegreeGate {
  /// sum of a_i for mu^* T_X, namely b(N+1-|d|)
  long long splitting_degree = 0;
  GateVerdict verdict = GateVerdict::NotTriggered;
};

/// Conditional on mu being an immersion; that hypothesis is not checked.
DegreeGate degree_nonfree_gate(const CIType& t, unsigned b);

}  // namespace linecalc
